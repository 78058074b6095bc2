#include "hyperclass/central.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "hyperclass/errors.hpp"

namespace hyperclass {

ElementSubset centralizer(const FiniteGroup& G, std::span<const ElementId> S) {
  auto gens = reduce_generators(G, S);
  std::vector<ElementId> members;
  for (std::size_t t = 0; t < G.order(); ++t) {
    ElementId tid = static_cast<ElementId>(t);
    bool commutes = true;
    for (ElementId s : gens) {
      if (G.multiply(tid, s) != G.multiply(s, tid)) {
        commutes = false;
        break;
      }
    }
    if (commutes) members.push_back(tid);
  }
  return ElementSubset(G, std::move(members));
}

ElementSubset centralizer(const FiniteGroup& G, const ElementSubset& S) {
  assert(S.parent().same_handle(G));
  return centralizer(G, std::span<const ElementId>(S.members()));
}

ElementSubset centre(const FiniteGroup& G) {
  // Commuting with the generators is commuting with everything.
  std::vector<ElementId> members;
  for (std::size_t t = 0; t < G.order(); ++t) {
    ElementId tid = static_cast<ElementId>(t);
    bool commutes = true;
    for (ElementId g : G.generator_ids()) {
      if (G.multiply(tid, g) != G.multiply(g, tid)) {
        commutes = false;
        break;
      }
    }
    if (commutes) members.push_back(tid);
  }
  return ElementSubset(G, std::move(members));
}

CentralSeries upper_central_series(const FiniteGroup& G) {
  // Z_{i+1} = {x : [x, g] in Z_i for every generator g}. Generators suffice:
  // Z_i is normal, so the condition says x Z_i commutes with a generating
  // set of G / Z_i.
  CentralSeries series;
  series.terms.push_back(centre(G));
  while (true) {
    const ElementSubset& prev = series.terms.back();
    auto mask = prev.membership_mask();
    std::vector<ElementId> next;
    for (std::size_t x = 0; x < G.order(); ++x) {
      ElementId xid = static_cast<ElementId>(x);
      bool in = true;
      for (ElementId g : G.generator_ids()) {
        if (!mask[G.commutator(xid, g)]) {
          in = false;
          break;
        }
      }
      if (in) next.push_back(xid);
    }
    if (next.size() == prev.size()) break;
    series.terms.emplace_back(G, std::move(next));
  }
  return series;
}

ElementSubset hypercentre(const FiniteGroup& G) {
  ElementSubset last = upper_central_series(G).hypercentre();
  assert(last.is_normal());
  assert(is_nilpotent_subgroup(G, last));
  return last;
}

bool is_p_element(const FiniteGroup& G, ElementId a, std::uint64_t p) {
  return G.power(a, p_part(G.order(), p)) == G.identity();
}

bool is_p_prime_element(const FiniteGroup& G, ElementId a, std::uint64_t p) {
  return G.power(a, G.order() / p_part(G.order(), p)) == G.identity();
}

namespace {

// N_G(P) holds t iff conjugation by t maps a generating set of P into P.
bool normalizes(const FiniteGroup& G, const std::vector<ElementId>& p_gens,
                const std::vector<std::uint8_t>& p_mask, ElementId t) {
  for (ElementId h : p_gens) {
    if (!p_mask[G.conjugate(h, t)]) return false;
  }
  return true;
}

} // namespace

ElementSubset sylow(const FiniteGroup& G, std::uint64_t p) {
  const std::uint64_t target = p_part(G.order(), p);
  if (target == 1) return trivial_subgroup(G);

  ElementId seed = 0;
  for (std::size_t a = 1; a < G.order(); ++a) {
    if (G.element_order(static_cast<ElementId>(a)) == p) {
      seed = static_cast<ElementId>(a);
      break;
    }
  }
  assert(seed != 0); // Cauchy: p | |G| forces an element of order p

  std::vector<ElementId> gens{seed};
  ElementSubset P = subgroup_closure(G, gens);
  while (P.size() < target) {
    auto mask = P.membership_mask();
    ElementId extend = 0;
    bool found = false;
    for (std::size_t t = 1; t < G.order() && !found; ++t) {
      ElementId tid = static_cast<ElementId>(t);
      if (mask[tid] || !is_p_element(G, tid, p)) continue;
      if (normalizes(G, gens, mask, tid)) {
        extend = tid;
        found = true;
      }
    }
    assert(found); // normalizer of a non-Sylow p-subgroup grows
    gens.push_back(extend);
    P = subgroup_closure(G, gens);
  }
  return P;
}

namespace {

ElementSubset generated_by_matching(const FiniteGroup& G,
                                    bool (*pred)(const FiniteGroup&, ElementId,
                                                 std::uint64_t),
                                    std::uint64_t p) {
  std::vector<ElementId> seeds;
  for (std::size_t a = 0; a < G.order(); ++a) {
    if (pred(G, static_cast<ElementId>(a), p)) seeds.push_back(static_cast<ElementId>(a));
  }
  auto gens = reduce_generators(G, seeds);
  ElementSubset H = subgroup_closure(G, gens);
  assert(H.is_normal()); // generated by a conjugation-stable element set
  return H;
}

} // namespace

ElementSubset o_p(const FiniteGroup& G, std::uint64_t p) {
  return generated_by_matching(G, is_p_prime_element, p);
}

ElementSubset o_p_prime(const FiniteGroup& G, std::uint64_t p) {
  return generated_by_matching(G, is_p_element, p);
}

ElementSubset normal_closure(const FiniteGroup& G, const ElementSubset& S) {
  assert(S.parent().same_handle(G));
  std::vector<ElementId> gens = reduce_generators(G, S.members());
  ElementSubset H = subgroup_closure(G, gens);
  // <T>^g = <T^g>, so conjugating the generating set by the group's
  // generators is enough to test and repair stability.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<ElementId> current = gens;
    for (ElementId h : current) {
      for (ElementId g : G.generator_ids()) {
        ElementId c = G.conjugate(h, g);
        if (!H.contains(c)) {
          gens.push_back(c);
          H = subgroup_closure(G, gens);
          grew = true;
        }
      }
    }
  }
  return H;
}

std::vector<ElementSubset> normal_subgroups(const FiniteGroup& G, std::size_t lattice_cap) {
  if (G.order() > lattice_cap) {
    throw LatticeCapExceeded("normal-subgroup lattice skipped: order " +
                             std::to_string(G.order()) + " exceeds cap " +
                             std::to_string(lattice_cap));
  }

  struct Entry {
    std::vector<ElementId> members;
    std::vector<ElementId> gens;
  };
  std::vector<Entry> entries;
  std::set<std::vector<ElementId>> seen;

  auto add = [&](const ElementSubset& H) {
    if (seen.insert(H.members()).second) {
      entries.push_back({H.members(), reduce_generators(G, H.members())});
      return true;
    }
    return false;
  };

  add(trivial_subgroup(G));
  // Every normal subgroup is generated by the classes it contains, so the
  // class closures are a join-generating set for the whole lattice.
  {
    std::vector<std::uint8_t> visited(G.order(), 0);
    for (std::size_t seed = 0; seed < G.order(); ++seed) {
      if (visited[seed]) continue;
      std::vector<ElementId> orbit{static_cast<ElementId>(seed)};
      visited[seed] = 1;
      for (std::size_t at = 0; at < orbit.size(); ++at) {
        for (ElementId g : G.generator_ids()) {
          ElementId conj = G.conjugate(orbit[at], g);
          if (!visited[conj]) {
            visited[conj] = 1;
            orbit.push_back(conj);
          }
        }
      }
      add(subgroup_closure(G, orbit));
    }
  }

  // Join-closure: new subgroups pair with everything until a fixed point.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[j].members.size() == G.order()) continue;
      std::vector<ElementId> join_gens = entries[i].gens;
      join_gens.insert(join_gens.end(), entries[j].gens.begin(), entries[j].gens.end());
      add(subgroup_closure(G, join_gens));
    }
  }

  std::vector<ElementSubset> result;
  result.reserve(entries.size());
  for (auto& e : entries) result.emplace_back(G, std::move(e.members));
  std::sort(result.begin(), result.end(), [](const ElementSubset& a, const ElementSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return result;
}

bool is_nilpotent_subgroup(const FiniteGroup& G, const ElementSubset& H) {
  for (std::uint64_t p : prime_divisors(H.size())) {
    // The p-power-order members must be exactly |H|_p many and closed under
    // multiplication; that certifies a normal Sylow p-subgroup of H.
    std::vector<ElementId> p_members;
    for (ElementId h : H.members()) {
      std::uint64_t ord = G.element_order(h);
      if (p_part(ord, p) == ord) p_members.push_back(h);
    }
    if (p_members.size() != p_part(H.size(), p)) return false;
    std::vector<std::uint8_t> mask(G.order(), 0);
    for (ElementId a : p_members) mask[a] = 1;
    for (ElementId a : p_members) {
      for (ElementId b : p_members) {
        if (!mask[G.multiply(a, b)]) return false;
      }
    }
  }
  return true;
}

} // namespace hyperclass
