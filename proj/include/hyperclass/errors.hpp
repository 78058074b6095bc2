#pragma once

#include <stdexcept>
#include <string>

namespace hyperclass {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Images of a permutation are not a bijection, or degrees are inconsistent.
class InvalidPermutation : public Error {
public:
  using Error::Error;
};

// Generator closure grew past the configured element cap.
class OrderCapExceeded : public Error {
public:
  using Error::Error;
};

// A subset used where a subgroup is required fails closure.
class NotSubgroup : public Error {
public:
  using Error::Error;
};

// A subgroup used where a normal subgroup is required fails
// conjugation-stability (or a conjugacy class straddles it).
class NotNormal : public Error {
public:
  using Error::Error;
};

// A permutation listed for a named subset lies outside the ambient group.
class NotSubgroupOfGroup : public Error {
public:
  using Error::Error;
};

// Group-spec mini-language text failed to parse.
class ParseError : public Error {
public:
  using Error::Error;
};

// A file (group file, frequency fragment) does not match its documented shape.
class FormatError : public Error {
public:
  using Error::Error;
};

// Normal-subgroup lattice enumeration refused a group above the lattice cap.
class LatticeCapExceeded : public Error {
public:
  using Error::Error;
};

// An operation's stated precondition does not hold for the given arguments.
class PreconditionFailed : public Error {
public:
  using Error::Error;
};

} // namespace hyperclass
