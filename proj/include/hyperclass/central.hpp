#pragma once

#include <cstdint>
#include <vector>

#include "hyperclass/group.hpp"

namespace hyperclass {

inline constexpr std::size_t kDefaultLatticeCap = 1024;

// Upper central series Z_1 <= Z_2 <= ..., strictly increasing until the
// stabilized last term, which is the hypercentre.
struct CentralSeries {
  std::vector<ElementSubset> terms;
  const ElementSubset& hypercentre() const { return terms.back(); }
};

// C_G(S) = elements commuting with every member of S. Always a subgroup;
// equals the centralizer of <S>, so only a generating set of S is scanned.
ElementSubset centralizer(const FiniteGroup& G, const ElementSubset& S);
ElementSubset centralizer(const FiniteGroup& G, std::span<const ElementId> S);

ElementSubset centre(const FiniteGroup& G);

CentralSeries upper_central_series(const FiniteGroup& G);

// Last term of the upper central series; asserted normal and nilpotent.
ElementSubset hypercentre(const FiniteGroup& G);

// True when a^(p-part of |G|) is the identity, i.e. a has p-power order.
bool is_p_element(const FiniteGroup& G, ElementId a, std::uint64_t p);
// True when a's order is coprime to p.
bool is_p_prime_element(const FiniteGroup& G, ElementId a, std::uint64_t p);

// A Sylow p-subgroup, deterministic: start from the least-id element of
// order p and repeatedly extend by the least-id p-power-order element of
// N_G(P) \ P. Returns the trivial subgroup when p does not divide |G|.
ElementSubset sylow(const FiniteGroup& G, std::uint64_t p);

// O^p(G): generated by all p'-elements; smallest normal subgroup with
// p-power quotient.
ElementSubset o_p(const FiniteGroup& G, std::uint64_t p);

// O^{p'}(G): generated by all p-power-order elements (equivalently by all
// Sylow p-subgroups).
ElementSubset o_p_prime(const FiniteGroup& G, std::uint64_t p);

// Smallest normal subgroup containing S.
ElementSubset normal_closure(const FiniteGroup& G, const ElementSubset& S);

// The complete normal-subgroup list, as the join-closure of the normal
// closures of the conjugacy classes (every normal subgroup is generated by
// the classes it contains). Sorted by (order, member list).
// Throws LatticeCapExceeded when |G| > lattice_cap.
std::vector<ElementSubset> normal_subgroups(const FiniteGroup& G,
                                            std::size_t lattice_cap = kDefaultLatticeCap);

// For each prime dividing |H|, the p-power-order members of H must form a
// subgroup of order |H|_p (a normal Sylow); that characterizes nilpotency.
bool is_nilpotent_subgroup(const FiniteGroup& G, const ElementSubset& H);

} // namespace hyperclass
