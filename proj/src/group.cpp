#include "hyperclass/group.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_map>
#include <utility>

#include "hyperclass/errors.hpp"

namespace hyperclass {

namespace {

// Reverse lookup without duplicating image storage: hash -> candidate ids,
// candidates confirmed against the element table.
struct PermIndex {
  std::unordered_multimap<std::uint64_t, ElementId> buckets;

  void insert(const Permutation& p, ElementId id) {
    buckets.emplace(hash_images(p.images().data(), p.degree()), id);
  }

  std::optional<ElementId> find(const std::vector<Permutation>& elements,
                                const std::vector<Point>& images) const {
    auto range = buckets.equal_range(hash_images(images.data(), images.size()));
    for (auto it = range.first; it != range.second; ++it) {
      if (elements[it->second].images() == images) return it->second;
    }
    return std::nullopt;
  }
};

} // namespace

struct FiniteGroup::Impl {
  std::size_t order = 0;
  std::vector<ElementId> generators;

  // Permutation backend (empty `elements` means table-backed).
  std::vector<Permutation> elements;
  PermIndex index;

  // Full multiplication table: always present for table-backed groups,
  // present as an accelerator for small permutation groups.
  std::vector<ElementId> table;

  // Inverses, precomputed for table-backed groups; permutation-backed groups
  // invert on the fly.
  std::vector<ElementId> inverses;

  ElementId mul(ElementId a, ElementId b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * order + b];
    std::vector<Point> composed(elements[a].degree());
    const auto& ia = elements[a].images();
    const auto& ib = elements[b].images();
    for (std::size_t i = 0; i < composed.size(); ++i) composed[i] = ib[ia[i]];
    auto id = index.find(elements, composed);
    assert(id.has_value()); // closure guarantees membership
    return *id;
  }

  ElementId inv(ElementId a) const {
    if (!inverses.empty()) return inverses[a];
    auto id = index.find(elements, elements[a].inverse().images());
    assert(id.has_value());
    return *id;
  }
};

std::size_t FiniteGroup::order() const { return impl_->order; }

const std::vector<ElementId>& FiniteGroup::generator_ids() const {
  return impl_->generators;
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  assert(a < impl_->order && b < impl_->order);
  return impl_->mul(a, b);
}

ElementId FiniteGroup::inverse(ElementId a) const {
  assert(a < impl_->order);
  return impl_->inv(a);
}

ElementId FiniteGroup::conjugate(ElementId g, ElementId t) const {
  return multiply(multiply(inverse(t), g), t);
}

ElementId FiniteGroup::commutator(ElementId g, ElementId u) const {
  return multiply(multiply(multiply(inverse(g), inverse(u)), g), u);
}

ElementId FiniteGroup::power(ElementId a, std::uint64_t k) const {
  ElementId acc = identity();
  ElementId base = a;
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return acc;
}

std::uint64_t FiniteGroup::element_order(ElementId a) const {
  std::uint64_t k = 1;
  ElementId cur = a;
  while (cur != identity()) {
    cur = multiply(cur, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::permutation_backed() const { return !impl_->elements.empty(); }

std::size_t FiniteGroup::degree() const {
  assert(permutation_backed());
  return impl_->elements.front().degree();
}

const Permutation& FiniteGroup::permutation_of(ElementId id) const {
  assert(permutation_backed() && id < impl_->order);
  return impl_->elements[id];
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  if (!permutation_backed() || p.degree() != degree()) return std::nullopt;
  return impl_->index.find(impl_->elements, p.images());
}

bool FiniteGroup::same_element_table(const FiniteGroup& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->order != other.impl_->order) return false;
  if (permutation_backed() != other.permutation_backed()) return false;
  if (permutation_backed()) return impl_->elements == other.impl_->elements;
  return impl_->table == other.impl_->table;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<ElementId> table,
                                    std::vector<ElementId> generators) {
  if (order == 0 || table.size() != order * order) {
    throw PreconditionFailed("multiplication table has wrong shape");
  }
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->table = std::move(table);
  impl->inverses.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    if (impl->table[a * order + 0] != a || impl->table[0 * order + a] != a) {
      throw PreconditionFailed("id 0 is not a two-sided identity");
    }
    bool found = false;
    for (std::size_t b = 0; b < order; ++b) {
      ElementId prod = impl->table[a * order + b];
      if (prod >= order) throw PreconditionFailed("table entry out of range");
      if (prod == 0 && impl->table[b * order + a] == 0) {
        impl->inverses[a] = static_cast<ElementId>(b);
        found = true;
      }
    }
    if (!found) throw PreconditionFailed("element without a two-sided inverse");
  }
  for (ElementId g : generators) {
    if (g >= order) throw PreconditionFailed("generator id out of range");
  }
  impl->generators = std::move(generators);
  return FiniteGroup(std::move(impl));
}

FiniteGroup close_generators(std::size_t degree, const std::vector<Permutation>& generators,
                             std::size_t order_cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidPermutation("generator degree " + std::to_string(g.degree()) +
                               " does not match declared degree " + std::to_string(degree));
    }
  }

  auto impl = std::make_shared<FiniteGroup::Impl>();
  impl->elements.push_back(Permutation::identity(degree));
  impl->index.insert(impl->elements[0], 0);

  // Breadth-first: elements are processed in id order and products appended,
  // which is exactly a FIFO queue seeded with the identity.
  std::vector<Point> composed(degree);
  for (std::size_t at = 0; at < impl->elements.size(); ++at) {
    for (const auto& g : generators) {
      const auto& ia = impl->elements[at].images();
      const auto& ib = g.images();
      for (std::size_t i = 0; i < degree; ++i) composed[i] = ib[ia[i]];
      if (!impl->index.find(impl->elements, composed).has_value()) {
        if (impl->elements.size() >= order_cap) {
          throw OrderCapExceeded("closure exceeds cap of " + std::to_string(order_cap) +
                                 " elements");
        }
        ElementId id = static_cast<ElementId>(impl->elements.size());
        impl->elements.push_back(Permutation(std::vector<Point>(composed)));
        impl->index.insert(impl->elements.back(), id);
      }
    }
  }

  impl->order = impl->elements.size();
  for (const auto& g : generators) {
    auto id = impl->index.find(impl->elements, g.images());
    if (*id != 0 &&
        std::find(impl->generators.begin(), impl->generators.end(), *id) ==
            impl->generators.end()) {
      impl->generators.push_back(*id);
    }
  }

  if (impl->order <= kTableAccelMaxOrder) {
    impl->table.reserve(impl->order * impl->order);
    for (std::size_t a = 0; a < impl->order; ++a) {
      const auto& ia = impl->elements[a].images();
      for (std::size_t b = 0; b < impl->order; ++b) {
        const auto& ib = impl->elements[b].images();
        for (std::size_t i = 0; i < degree; ++i) composed[i] = ib[ia[i]];
        auto id = impl->index.find(impl->elements, composed);
        assert(id.has_value());
        impl->table.push_back(*id);
      }
    }
    impl->inverses.assign(impl->order, 0);
    for (std::size_t a = 0; a < impl->order; ++a) {
      for (std::size_t b = 0; b < impl->order; ++b) {
        if (impl->table[a * impl->order + b] == 0) {
          impl->inverses[a] = static_cast<ElementId>(b);
          break;
        }
      }
    }
  }

  return FiniteGroup(std::move(impl));
}

ElementSubset::ElementSubset(FiniteGroup parent, std::vector<ElementId> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (ElementId id : members_) {
    if (id >= parent_.order()) {
      throw PreconditionFailed("subset member id " + std::to_string(id) +
                               " out of range for group of order " +
                               std::to_string(parent_.order()));
    }
  }
}

bool ElementSubset::contains(ElementId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

std::vector<std::uint8_t> ElementSubset::membership_mask() const {
  std::vector<std::uint8_t> mask(parent_.order(), 0);
  for (ElementId id : members_) mask[id] = 1;
  return mask;
}

bool ElementSubset::is_subgroup() const {
  if (members_.empty() || members_.front() != parent_.identity()) return false;
  ElementSubset closed = subgroup_closure(parent_, members_);
  return closed.members() == members_;
}

bool ElementSubset::is_normal() const {
  if (!is_subgroup()) return false;
  auto gens = reduce_generators(parent_, members_);
  for (ElementId h : gens) {
    for (ElementId g : parent_.generator_ids()) {
      if (!contains(parent_.conjugate(h, g))) return false;
    }
  }
  return true;
}

ElementSubset trivial_subgroup(const FiniteGroup& G) {
  return ElementSubset(G, {G.identity()});
}

ElementSubset whole_group(const FiniteGroup& G) {
  std::vector<ElementId> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElementId>(i);
  return ElementSubset(G, std::move(all));
}

ElementSubset subgroup_closure(const FiniteGroup& G, std::span<const ElementId> seeds) {
  std::vector<std::uint8_t> in(G.order(), 0);
  std::vector<ElementId> worklist;
  in[G.identity()] = 1;
  worklist.push_back(G.identity());
  for (std::size_t at = 0; at < worklist.size(); ++at) {
    for (ElementId s : seeds) {
      ElementId prod = G.multiply(worklist[at], s);
      if (!in[prod]) {
        in[prod] = 1;
        worklist.push_back(prod);
      }
    }
  }
  std::sort(worklist.begin(), worklist.end());
  return ElementSubset(G, std::move(worklist));
}

std::vector<ElementId> reduce_generators(const FiniteGroup& G,
                                         std::span<const ElementId> members) {
  std::vector<ElementId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ElementId> gens;
  ElementSubset closed = trivial_subgroup(G);
  for (ElementId id : sorted) {
    if (!closed.contains(id)) {
      gens.push_back(id);
      closed = subgroup_closure(G, gens);
    }
  }
  return gens;
}

ElementSubset intersect(const ElementSubset& a, const ElementSubset& b) {
  assert(a.parent().same_handle(b.parent()));
  std::vector<ElementId> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return ElementSubset(a.parent(), std::move(common));
}

Quotient quotient(const FiniteGroup& G, const ElementSubset& M) {
  assert(M.parent().same_handle(G));
  if (!M.is_subgroup()) throw NotSubgroup("quotient: subset is not a subgroup");
  auto gens = reduce_generators(G, M.members());
  for (ElementId h : gens) {
    for (ElementId g : G.generator_ids()) {
      if (!M.contains(G.conjugate(h, g))) {
        throw NotNormal("quotient: subgroup is not conjugation-stable");
      }
    }
  }

  // Coset label = least element id in M*g.
  const std::size_t n = G.order();
  std::vector<ElementId> label(n);
  for (std::size_t g = 0; g < n; ++g) {
    ElementId least = static_cast<ElementId>(g);
    for (ElementId m : M.members()) {
      least = std::min(least, G.multiply(m, static_cast<ElementId>(g)));
    }
    label[g] = least;
  }
  std::vector<ElementId> reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (label[g] == g) reps.push_back(static_cast<ElementId>(g));
  }
  // reps is ascending by construction; identity coset is rep 0.
  std::vector<ElementId> rep_index(n, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> coset_map(n);
  for (std::size_t g = 0; g < n; ++g) coset_map[g] = rep_index[label[g]];

  const std::size_t q = reps.size();
  std::vector<ElementId> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      table[i * q + j] = coset_map[G.multiply(reps[i], reps[j])];
    }
  }

  std::vector<ElementId> qgens;
  for (ElementId g : G.generator_ids()) {
    ElementId image = coset_map[g];
    if (image != 0 && std::find(qgens.begin(), qgens.end(), image) == qgens.end()) {
      qgens.push_back(image);
    }
  }

  return Quotient{FiniteGroup::from_table(q, std::move(table), std::move(qgens)),
                  std::move(coset_map)};
}

SubgroupView subgroup_as_group(const FiniteGroup& G, const ElementSubset& H) {
  assert(H.parent().same_handle(G));
  if (H.members().empty() || H.members().front() != G.identity()) {
    throw NotSubgroup("subgroup_as_group: missing identity");
  }
  const auto& mem = H.members();
  std::vector<ElementId> pos(G.order(), static_cast<ElementId>(-1));
  for (std::size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = static_cast<ElementId>(i);

  const std::size_t k = mem.size();
  std::vector<ElementId> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      ElementId prod = G.multiply(mem[i], mem[j]);
      if (pos[prod] == static_cast<ElementId>(-1)) {
        throw NotSubgroup("subgroup_as_group: subset is not closed");
      }
      table[i * k + j] = pos[prod];
    }
  }

  std::vector<ElementId> gens;
  for (ElementId g : reduce_generators(G, mem)) gens.push_back(pos[g]);

  return SubgroupView{FiniteGroup::from_table(k, std::move(table), std::move(gens)), mem};
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw PreconditionFailed("p_part: n must be >= 1");
  assert(p >= 2);
  std::uint64_t result = 1;
  while (n % p == 0) {
    result *= p;
    n /= p;
  }
  return result;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

} // namespace hyperclass
