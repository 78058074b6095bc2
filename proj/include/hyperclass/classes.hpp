#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperclass/group.hpp"
#include "json.hpp"

namespace hyperclass {

// The multiset {class size -> multiplicity} of the G-classes inside a normal
// subgroup N. Entries are kept ascending by size, which is also the
// serialization order.
class ClassFrequency {
public:
  ClassFrequency() = default;
  explicit ClassFrequency(std::map<std::uint64_t, std::uint64_t> entries);

  const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t multiplicity(std::uint64_t size) const;

  // Sum of size * multiplicity; equals |N| when built from a normal subgroup.
  std::uint64_t total() const;

  // [[size, multiplicity], ...] ascending by size.
  nlohmann::ordered_json to_json() const;
  static ClassFrequency from_json(const nlohmann::json& fragment); // FormatError

  friend bool operator==(const ClassFrequency&, const ClassFrequency&) = default;

private:
  std::map<std::uint64_t, std::uint64_t> entries_;
};

// Orbits of the conjugation action, seeded from the least unvisited id, so
// classes are listed in order of least member and members are sorted.
std::vector<ElementSubset> conjugacy_classes(const FiniteGroup& G);

// Classes of G lying inside N. N normal means each class is inside or
// disjoint; a straddling class throws NotNormal. The `classes` overloads
// accept precomputed conjugacy_classes(G) output.
std::vector<ElementSubset> g_classes_in(const FiniteGroup& G, const ElementSubset& N);
std::vector<ElementSubset> g_classes_in(const FiniteGroup& G, const ElementSubset& N,
                                        const std::vector<ElementSubset>& classes);

ClassFrequency frequency_function(const FiniteGroup& G, const ElementSubset& N);
ClassFrequency frequency_function(const FiniteGroup& G, const ElementSubset& N,
                                  const std::vector<ElementSubset>& classes);

// A set of primes, either a finite list or the complement of one, so both
// {p} and {p}' are expressible.
class PrimeSet {
public:
  static PrimeSet of(std::vector<std::uint64_t> primes);
  static PrimeSet single(std::uint64_t p) { return of({p}); }
  static PrimeSet complement_of_single(std::uint64_t p);

  bool contains(std::uint64_t prime) const;
  std::string describe() const; // "{2}", "{2}'", "{2,3}"

private:
  std::vector<std::uint64_t> primes_;
  bool complement_ = false;
};

// Every prime factor of n lies in pi (1 is a pi-number for every pi).
bool is_pi_number(std::uint64_t n, const PrimeSet& pi);

// |S_pi| from frequency data alone: sum of w(n) * n over pi-number sizes.
std::uint64_t s_pi_size(const ClassFrequency& freq, const PrimeSet& pi);

// The explicit element set, as the oracle for s_pi_size.
ElementSubset s_pi_set(const FiniteGroup& G, const ElementSubset& N, const PrimeSet& pi);
ElementSubset s_pi_set(const FiniteGroup& G, const ElementSubset& N, const PrimeSet& pi,
                       const std::vector<ElementSubset>& classes);

} // namespace hyperclass
