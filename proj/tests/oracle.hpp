#pragma once

// Brute-force oracles for the test suite. Everything here recomputes results
// from first principles (full scans, no generator tricks, no reuse of the
// algorithms under test) so the library and these routines form two
// independent computation paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyperclass/group.hpp"

namespace oracle {

using hyperclass::ElementId;
using hyperclass::FiniteGroup;
using hyperclass::Point;

// All degree! permutations of {0..degree-1} in lexicographic image order.
inline std::vector<std::vector<Point>> all_permutation_images(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<std::vector<Point>> all;
  do {
    all.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

// Composition written out independently: apply a first, then b.
inline std::vector<Point> compose_images(const std::vector<Point>& a,
                                         const std::vector<Point>& b) {
  std::vector<Point> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

// Conjugation orbit of every element under ALL of G (not just generators).
inline std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<std::vector<ElementId>> classes;
  std::vector<bool> seen(G.order(), false);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    std::set<ElementId> orbit;
    for (std::size_t t = 0; t < G.order(); ++t) {
      orbit.insert(G.conjugate(static_cast<ElementId>(g), static_cast<ElementId>(t)));
    }
    for (ElementId x : orbit) seen[x] = true;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

inline std::vector<ElementId> centralizer(const FiniteGroup& G,
                                          const std::vector<ElementId>& S) {
  std::vector<ElementId> result;
  for (std::size_t t = 0; t < G.order(); ++t) {
    bool commutes = true;
    for (ElementId s : S) {
      if (G.multiply(static_cast<ElementId>(t), s) !=
          G.multiply(s, static_cast<ElementId>(t))) {
        commutes = false;
        break;
      }
    }
    if (commutes) result.push_back(static_cast<ElementId>(t));
  }
  return result;
}

inline std::vector<ElementId> centre(const FiniteGroup& G) {
  std::vector<ElementId> everyone;
  for (std::size_t i = 0; i < G.order(); ++i) everyone.push_back(static_cast<ElementId>(i));
  return centralizer(G, everyone);
}

inline bool is_subgroup(const FiniteGroup& G, const std::vector<ElementId>& members) {
  std::set<ElementId> set(members.begin(), members.end());
  if (!set.count(G.identity())) return false;
  for (ElementId a : members) {
    if (!set.count(G.inverse(a))) return false;
    for (ElementId b : members) {
      if (!set.count(G.multiply(a, b))) return false;
    }
  }
  return true;
}

inline bool is_normal(const FiniteGroup& G, const std::vector<ElementId>& members) {
  if (!is_subgroup(G, members)) return false;
  std::set<ElementId> set(members.begin(), members.end());
  for (ElementId h : members) {
    for (std::size_t t = 0; t < G.order(); ++t) {
      if (!set.count(G.conjugate(h, static_cast<ElementId>(t)))) return false;
    }
  }
  return true;
}

// Every union of conjugacy classes containing the identity that happens to
// be a subgroup. Exponential in the class count; meant for small groups.
inline std::vector<std::vector<ElementId>> normal_subgroups_by_class_unions(
    const FiniteGroup& G) {
  auto classes = conjugacy_classes(G);
  std::vector<std::vector<ElementId>> result;
  const std::size_t k = classes.size();
  for (std::uint64_t pick = 0; pick < (1ull << k); ++pick) {
    std::vector<ElementId> members;
    for (std::size_t c = 0; c < k; ++c) {
      if (pick & (1ull << c)) {
        members.insert(members.end(), classes[c].begin(), classes[c].end());
      }
    }
    std::sort(members.begin(), members.end());
    if (members.empty() || members.front() != G.identity()) continue;
    if (is_subgroup(G, members)) result.push_back(std::move(members));
  }
  std::sort(result.begin(), result.end(),
            [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return result;
}

// Upper central series by the definition: Z_{i+1} is the preimage of the
// centre of G/Z_i, with quotient centres found by full scans over cosets.
// Independent of the commutator-characterization implementation.
inline std::vector<std::vector<ElementId>> upper_central_series(const FiniteGroup& G) {
  std::vector<std::vector<ElementId>> terms;
  std::vector<ElementId> current = centre(G);
  std::sort(current.begin(), current.end());
  terms.push_back(current);
  while (true) {
    std::set<ElementId> zi(current.begin(), current.end());
    // x is in the next term iff [x, y] lands in Z_i for every y in G
    // (the coset xZ_i is central in G/Z_i).
    std::vector<ElementId> next;
    for (std::size_t x = 0; x < G.order(); ++x) {
      bool central = true;
      for (std::size_t y = 0; y < G.order(); ++y) {
        if (!zi.count(G.commutator(static_cast<ElementId>(x), static_cast<ElementId>(y)))) {
          central = false;
          break;
        }
      }
      if (central) next.push_back(static_cast<ElementId>(x));
    }
    if (next.size() == current.size()) break;
    current = std::move(next);
    terms.push_back(current);
  }
  return terms;
}

// Frequency multiset straight from the definition: w(n) = |{g in N :
// |class(g)| = n}| / n with classes from the full-scan enumeration.
inline std::map<std::uint64_t, std::uint64_t> frequency(
    const FiniteGroup& G, const std::vector<ElementId>& normal_members) {
  std::set<ElementId> in_n(normal_members.begin(), normal_members.end());
  std::map<std::uint64_t, std::uint64_t> freq;
  for (const auto& cls : conjugacy_classes(G)) {
    bool inside = in_n.count(cls.front()) > 0;
    for (ElementId x : cls) {
      if ((in_n.count(x) > 0) != inside) throw std::logic_error("class straddles subset");
    }
    if (inside) ++freq[cls.size()];
  }
  return freq;
}

} // namespace oracle
