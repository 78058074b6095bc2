#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hyperclass/group.hpp"

namespace hyperclass {

// Group-spec mini-language: "C12", "D16" (dihedral of order 16), "Q8",
// "S4", "A5", products "D16xD8", or "file:groups.json". Products associate
// to the left and are stored flattened; a file spec stands alone.
struct GroupSpec {
  struct Cyclic {
    std::uint64_t n;
  };
  struct Dihedral {
    std::uint64_t order; // 2n, n >= 2
  };
  struct Quaternion {}; // Q8 only
  struct Symmetric {
    std::uint64_t n;
  };
  struct Alternating {
    std::uint64_t n;
  };
  struct File {
    std::string path;
  };
  using Atom = std::variant<Cyclic, Dihedral, Quaternion, Symmetric, Alternating, File>;

  std::vector<Atom> factors;

  static GroupSpec parse(std::string_view text); // ParseError
  std::string str() const;
};

// A built group plus its addressable subgroup names:
//   "left" / "right"  product factors (direct products only)
//   "x-cyclic"        closure of the group's first generator
//   file subset names verified normal at load
// Candidates are stored as subgroups; normality of built-in names is checked
// at resolve time (file subsets already at load).
struct CatalogEntry {
  std::string label;
  FiniteGroup group;
  std::vector<std::pair<std::string, ElementSubset>> named;
};

FiniteGroup build(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);
CatalogEntry build_entry(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

// Reads the documented JSON group file: { "degree": d, "generators":
// [[images...], ...], "subsets": { "name": [[images...], ...] } }.
// Throws FormatError, NotSubgroupOfGroup(name), NotNormal(name).
CatalogEntry load_group_file(const std::string& path,
                             std::size_t order_cap = kDefaultOrderCap);

// Resolves a --normal argument against an entry: reserved names "1"/
// "trivial" and "G"/"self", then the entry's named subgroups, then a
// same-degree group spec whose elements must lie inside the group. The
// result is verified normal (NotNormal otherwise).
ElementSubset resolve_normal(const CatalogEntry& entry, const std::string& text);

struct CorpusEntry {
  std::string label;
  FiniteGroup group;
  std::vector<std::pair<std::string, ElementSubset>> normals; // all of them, named
};

// The deterministic verification corpus: C1..C24, D4..D32, Q8, S3, S4, S5,
// A4, A5, D16xD8, D8xC3, S3xS3, Q8xC9, S3xC3, S3xC4 — each with its full
// normal-subgroup list. Groups above max_order are omitted; groups above the
// lattice cap are skipped with a warning line.
std::vector<CorpusEntry> default_corpus(std::size_t max_order,
                                        std::size_t order_cap,
                                        std::size_t lattice_cap,
                                        std::vector<std::string>* warnings);

// Canonical name for the i-th normal subgroup of a sorted lattice.
std::string normal_subgroup_name(std::size_t index, std::size_t order);

} // namespace hyperclass
