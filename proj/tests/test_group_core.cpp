#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hyperclass/errors.hpp"
#include "hyperclass/group.hpp"
#include "oracle.hpp"

using namespace hyperclass;

namespace {

// S3 on 3 points; generator order fixed so ids are stable:
//   0=e, 1=(0 1 2), 2=(0 1), 3=(0 2 1), 4=(1 2), 5=(0 2)
FiniteGroup make_s3() {
  return close_generators(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
}

Permutation shift(std::size_t degree, std::size_t offset, const Permutation& p) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    images[offset + i] = static_cast<Point>(offset + p.apply(i));
  }
  return Permutation(std::move(images));
}

// D16 x D8 on 8 + 4 points, generators x, y (left block) and r, s (right).
FiniteGroup make_d16xd8() {
  std::vector<Point> rot8{1, 2, 3, 4, 5, 6, 7, 0};
  std::vector<Point> mir8{0, 7, 6, 5, 4, 3, 2, 1};
  std::vector<Point> rot4{1, 2, 3, 0};
  std::vector<Point> mir4{0, 3, 2, 1};
  return close_generators(12, {shift(12, 0, Permutation(rot8)), shift(12, 0, Permutation(mir8)),
                               shift(12, 8, Permutation(rot4)), shift(12, 8, Permutation(mir4))});
}

} // namespace

TEST_CASE("permutation validation and primitives") {
  CHECK_THROWS_AS(Permutation({0, 0, 2}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({3, 1, 2}), InvalidPermutation);
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation::from_cycles(3, {{0, 1, 2}}) == Permutation({1, 2, 0}));
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidPermutation);

  // composition convention: apply the left factor first
  Permutation a({1, 2, 0}); // (0 1 2)
  Permutation b({1, 0, 2}); // (0 1)
  CHECK(a.then(b) == Permutation({0, 2, 1}));
  CHECK(a.inverse() == Permutation({2, 0, 1}));
  CHECK(a.then(a.inverse()).is_identity());
}

TEST_CASE("close_generators on the trivial group") {
  FiniteGroup triv = close_generators(1, {});
  CHECK(triv.order() == 1);
  CHECK(triv.identity() == 0);
  CHECK(triv.generator_ids().empty());
  CHECK(triv.multiply(0, 0) == 0);
}

TEST_CASE("close_generators builds S3 with deterministic ids") {
  FiniteGroup s3 = make_s3();
  REQUIRE(s3.order() == 6);

  // hand-derived BFS discovery order
  CHECK(s3.permutation_of(0) == Permutation::identity(3));
  CHECK(s3.permutation_of(1) == Permutation({1, 2, 0}));
  CHECK(s3.permutation_of(2) == Permutation({1, 0, 2}));
  CHECK(s3.permutation_of(3) == Permutation({2, 0, 1}));
  CHECK(s3.permutation_of(4) == Permutation({0, 2, 1}));
  CHECK(s3.permutation_of(5) == Permutation({2, 1, 0}));

  // the closure is exactly the 6 permutations of 3 points
  auto all = oracle::all_permutation_images(3);
  std::set<std::vector<Point>> found;
  for (ElementId id = 0; id < 6; ++id) found.insert(s3.permutation_of(id).images());
  CHECK(found == std::set<std::vector<Point>>(all.begin(), all.end()));

  CHECK(make_s3().same_element_table(s3)); // determinism
}

TEST_CASE("order cap and degree mismatch") {
  CHECK_THROWS_AS(close_generators(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})}, 5),
                  OrderCapExceeded);
  CHECK_THROWS_AS(close_generators(4, {Permutation({1, 2, 0})}), InvalidPermutation);
}

TEST_CASE("multiply fixes the documented convention") {
  FiniteGroup s3 = make_s3();
  // product of the two generators, left factor applied first, is (1 2):
  // an element of order 2
  ElementId prod = s3.multiply(1, 2);
  CHECK(prod == 4);
  CHECK(s3.element_order(prod) == 2);

  for (ElementId g = 0; g < s3.order(); ++g) {
    CHECK(s3.multiply(0, g) == g);
    CHECK(s3.multiply(g, 0) == g);
    CHECK(s3.multiply(g, s3.inverse(g)) == 0);
    CHECK(s3.inverse(s3.inverse(g)) == g);
  }
}

TEST_CASE("element orders in S3 and D16") {
  FiniteGroup s3 = make_s3();
  std::multiset<std::uint64_t> orders;
  for (ElementId g = 0; g < s3.order(); ++g) orders.insert(s3.element_order(g));
  CHECK(orders == std::multiset<std::uint64_t>{1, 2, 2, 2, 3, 3});

  std::vector<Point> rot8{1, 2, 3, 4, 5, 6, 7, 0};
  std::vector<Point> mir8{0, 7, 6, 5, 4, 3, 2, 1};
  FiniteGroup d16 = close_generators(8, {Permutation(rot8), Permutation(mir8)});
  REQUIRE(d16.order() == 16);
  CHECK(d16.element_order(d16.generator_ids()[0]) == 8); // x^8 = 1
  CHECK(d16.element_order(d16.generator_ids()[1]) == 2); // y^2 = 1
  CHECK(d16.inverse(d16.generator_ids()[1]) == d16.generator_ids()[1]);
}

TEST_CASE("conjugation") {
  FiniteGroup s3 = make_s3();
  for (ElementId g = 0; g < s3.order(); ++g) CHECK(s3.conjugate(g, 0) == g);
  // conjugating one 3-cycle by a transposition yields the other
  CHECK(s3.conjugate(1, 2) == 3);
  CHECK(s3.conjugate(3, 2) == 1);
  // commutator convention: g^u = g * [g, u]
  for (ElementId g = 0; g < s3.order(); ++g) {
    for (ElementId u = 0; u < s3.order(); ++u) {
      CHECK(s3.conjugate(g, u) == s3.multiply(g, s3.commutator(g, u)));
    }
  }
}

TEST_CASE("associativity spot check on sampled triples") {
  FiniteGroup g = make_d16xd8();
  REQUIRE(g.order() == 128);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  for (int i = 0; i < 1500; ++i) {
    ElementId a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
  }
}

TEST_CASE("subgroup closure, reduction and Lagrange") {
  FiniteGroup s3 = make_s3();
  ElementSubset a3 = subgroup_closure(s3, std::vector<ElementId>{1});
  CHECK(a3.members() == std::vector<ElementId>{0, 1, 3});
  CHECK(a3.is_subgroup());
  CHECK(a3.is_normal());

  ElementSubset whole = subgroup_closure(s3, std::vector<ElementId>{1, 2});
  CHECK(whole.size() == 6);

  ElementSubset t = subgroup_closure(s3, std::vector<ElementId>{2});
  CHECK(t.members() == std::vector<ElementId>{0, 2});
  CHECK(t.is_subgroup());
  CHECK_FALSE(t.is_normal());

  for (const auto& subset : {a3, whole, t}) {
    CHECK(s3.order() % subset.size() == 0);
  }

  auto gens = reduce_generators(s3, whole.members());
  CHECK(subgroup_closure(s3, gens).size() == 6);
  CHECK(gens.size() <= 2);
}

TEST_CASE("element subset basics") {
  FiniteGroup s3 = make_s3();
  ElementSubset dup(s3, {3, 1, 1, 0, 3});
  CHECK(dup.members() == std::vector<ElementId>{0, 1, 3});
  CHECK(dup.contains(1));
  CHECK_FALSE(dup.contains(2));
  CHECK_THROWS_AS(ElementSubset(s3, {7}), PreconditionFailed);
}

TEST_CASE("quotient by the trivial subgroup and by the whole group") {
  FiniteGroup s3 = make_s3();
  Quotient q1 = quotient(s3, trivial_subgroup(s3));
  CHECK(q1.group.order() == 6);
  std::set<ElementId> images(q1.coset_map.begin(), q1.coset_map.end());
  CHECK(images.size() == 6); // injective

  Quotient q2 = quotient(s3, whole_group(s3));
  CHECK(q2.group.order() == 1);
  for (ElementId id : q2.coset_map) CHECK(id == 0);
}

TEST_CASE("quotient is a homomorphism and rejects bad inputs") {
  FiniteGroup s3 = make_s3();
  ElementSubset a3 = subgroup_closure(s3, std::vector<ElementId>{1});
  Quotient q = quotient(s3, a3);
  CHECK(q.group.order() == 2);
  for (ElementId a = 0; a < s3.order(); ++a) {
    for (ElementId b = 0; b < s3.order(); ++b) {
      CHECK(q.coset_map[s3.multiply(a, b)] ==
            q.group.multiply(q.coset_map[a], q.coset_map[b]));
    }
  }

  ElementSubset transposition = subgroup_closure(s3, std::vector<ElementId>{2});
  CHECK_THROWS_AS(quotient(s3, transposition), NotNormal);
  ElementSubset not_closed(s3, {0, 1});
  CHECK_THROWS_AS(quotient(s3, not_closed), NotSubgroup);
}

TEST_CASE("quotient of D16xD8 by a central order-2 subgroup") {
  FiniteGroup g = make_d16xd8();
  // x^4 (x = first generator) spans the left factor's centre
  ElementId x = g.generator_ids()[0];
  ElementId x4 = g.power(x, 4);
  CHECK(g.element_order(x4) == 2);
  ElementSubset m = subgroup_closure(g, std::vector<ElementId>{x4});
  CHECK(m.size() == 2);
  Quotient q = quotient(g, m);
  CHECK(q.group.order() == 64);
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); ++b) {
      CHECK(q.coset_map[g.multiply(a, b)] ==
            q.group.multiply(q.coset_map[a], q.coset_map[b]));
    }
  }
}

TEST_CASE("subgroup_as_group re-indexes a subgroup") {
  FiniteGroup s3 = make_s3();
  ElementSubset a3 = subgroup_closure(s3, std::vector<ElementId>{1});
  SubgroupView view = subgroup_as_group(s3, a3);
  CHECK(view.group.order() == 3);
  CHECK(view.to_parent == a3.members());
  CHECK(view.group.element_order(1) == 3);
  CHECK_THROWS_AS(subgroup_as_group(s3, ElementSubset(s3, {0, 1})), NotSubgroup);
}

TEST_CASE("p_part and prime_divisors") {
  CHECK(p_part(12, 2) == 4);
  CHECK(p_part(12, 5) == 1);
  CHECK(p_part(128, 2) == 128);
  CHECK(p_part(1, 2) == 1);
  CHECK_THROWS_AS(p_part(0, 2), PreconditionFailed);

  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_divisors(128) == std::vector<std::uint64_t>{2});
  CHECK(prime_divisors(30030) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
}

TEST_CASE("table backend round trip") {
  FiniteGroup s3 = make_s3();
  Quotient q = quotient(s3, trivial_subgroup(s3));
  FiniteGroup t = q.group; // table-backed copy of S3
  CHECK_FALSE(t.permutation_backed());
  for (ElementId a = 0; a < 6; ++a) {
    CHECK(t.element_order(a) == s3.element_order(a));
    for (ElementId b = 0; b < 6; ++b) CHECK(t.multiply(a, b) == s3.multiply(a, b));
  }
}
