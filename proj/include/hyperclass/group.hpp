#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hyperclass/permutation.hpp"

namespace hyperclass {

using ElementId = std::uint32_t;

// Default cap on closure size; override per call (the CLI reads
// HYPERCLASS_ORDER_CAP).
inline constexpr std::size_t kDefaultOrderCap = 20000;

// Permutation-backed groups at or below this order get a full Cayley table
// at construction so that multiply() is a lookup.
inline constexpr std::size_t kTableAccelMaxOrder = 1024;

// An enumerable finite group with identified elements. Ids are 0..order-1,
// id 0 is the identity. Backed either by a table of permutations (with
// reverse lookup) or by an order x order multiplication table. Immutable
// after construction and cheap to copy (shared internals), so instances can
// be handed across threads freely.
class FiniteGroup {
public:
  std::size_t order() const;
  ElementId identity() const { return 0; }

  // Ids of the defining generators, in input order, identity omitted.
  // Every element is a product of these.
  const std::vector<ElementId>& generator_ids() const;

  // a*b applies a first, then b (matches Permutation::then). This is the
  // one composition convention used everywhere, commutators included.
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;

  // g^t = t^-1 * g * t
  ElementId conjugate(ElementId g, ElementId t) const;

  // [g, u] = g^-1 * u^-1 * g * u, so that g^u = g * [g, u].
  ElementId commutator(ElementId g, ElementId u) const;

  ElementId power(ElementId a, std::uint64_t k) const;
  std::uint64_t element_order(ElementId a) const;

  bool permutation_backed() const;
  std::size_t degree() const; // permutation backend only
  const Permutation& permutation_of(ElementId id) const;
  std::optional<ElementId> find(const Permutation& p) const;

  // Builds a table-backed group. `table` is row-major order x order and must
  // describe a group with identity 0. `generators` must generate it.
  static FiniteGroup from_table(std::size_t order, std::vector<ElementId> table,
                                std::vector<ElementId> generators);

  // True when both handles share the same underlying element data.
  bool same_handle(const FiniteGroup& other) const { return impl_ == other.impl_; }

  // Structural equality of element tables (determinism checks).
  bool same_element_table(const FiniteGroup& other) const;

private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend FiniteGroup close_generators(std::size_t, const std::vector<Permutation>&,
                                      std::size_t);
};

// Enumerates the group generated by `generators` on `degree` points by
// breadth-first closure: queue seeded with the identity, generators applied
// on the right in input order, ids assigned in discovery order. Throws
// OrderCapExceeded once the closure passes `order_cap`, InvalidPermutation
// on a degree mismatch.
FiniteGroup close_generators(std::size_t degree, const std::vector<Permutation>& generators,
                             std::size_t order_cap = kDefaultOrderCap);

// A sorted, deduplicated set of element ids inside a parent group. Whether
// it is a subgroup, a coset, a class or a raw subset is a property asserted
// at use sites, not of the type.
class ElementSubset {
public:
  ElementSubset(FiniteGroup parent, std::vector<ElementId> members);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<ElementId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ElementId id) const;

  // 0/1 mask over all parent ids.
  std::vector<std::uint8_t> membership_mask() const;

  bool is_subgroup() const;
  // Subgroup + stable under conjugation by every parent generator.
  bool is_normal() const;

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
    return a.parent_.same_handle(b.parent_) && a.members_ == b.members_;
  }

private:
  FiniteGroup parent_;
  std::vector<ElementId> members_;
};

ElementSubset trivial_subgroup(const FiniteGroup& G);
ElementSubset whole_group(const FiniteGroup& G);

// Subgroup generated by `seeds` (closure under multiplication; inverses come
// free in a finite group).
ElementSubset subgroup_closure(const FiniteGroup& G, std::span<const ElementId> seeds);

// Greedy small generating set for the subgroup generated by `members`
// (scanned in ascending order; deterministic).
std::vector<ElementId> reduce_generators(const FiniteGroup& G,
                                         std::span<const ElementId> members);

ElementSubset intersect(const ElementSubset& a, const ElementSubset& b);

// Quotient G/M with deterministic coset ids: each coset is labelled by its
// least parent element id, cosets sorted by that label, so the identity
// coset is id 0. Throws NotSubgroup / NotNormal.
struct Quotient {
  FiniteGroup group;
  std::vector<ElementId> coset_map; // parent id -> quotient id
};
Quotient quotient(const FiniteGroup& G, const ElementSubset& M);

// A subgroup re-indexed as a group in its own right; to_parent maps the new
// ids back. Throws NotSubgroup.
struct SubgroupView {
  FiniteGroup group;
  std::vector<ElementId> to_parent;
};
SubgroupView subgroup_as_group(const FiniteGroup& G, const ElementSubset& H);

// Largest power of p dividing n (n >= 1, p prime).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// Ascending prime divisors of n.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

} // namespace hyperclass
