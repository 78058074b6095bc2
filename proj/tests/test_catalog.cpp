#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "hyperclass/catalog.hpp"
#include "hyperclass/central.hpp"
#include "hyperclass/errors.hpp"
#include "oracle.hpp"

using namespace hyperclass;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string("catalog_test_") + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static int counter;
};
int TempFile::counter = 0;

} // namespace

TEST_CASE("spec mini-language: parse then print is identity") {
  for (const char* text : {"C1", "C12", "D16", "Q8", "S4", "A5", "D16xD8", "S3xS3xC2",
                           "file:groups/my_group.json"}) {
    CHECK(GroupSpec::parse(text).str() == text);
  }
}

TEST_CASE("spec mini-language: rejects malformed input") {
  for (const char* text : {"", "C", "C0", "D15", "D2", "Q16", "B7", "D16x", "xD8", "S4xx",
                           "file:", "S4xfile:g.json"}) {
    CHECK_THROWS_AS(build(GroupSpec::parse(text)), ParseError);
  }
}

TEST_CASE("build: orders and structure of the stock families") {
  CHECK(build(GroupSpec::parse("C1")).order() == 1);
  CHECK(build(GroupSpec::parse("C12")).order() == 12);
  CHECK(build(GroupSpec::parse("D4")).order() == 4);
  CHECK(build(GroupSpec::parse("S4")).order() == 24);
  CHECK(build(GroupSpec::parse("A4")).order() == 12);
  CHECK(build(GroupSpec::parse("A5")).order() == 60);
  CHECK(build(GroupSpec::parse("D16xD8")).order() == 128);

  FiniteGroup d16 = build(GroupSpec::parse("D16"));
  REQUIRE(d16.order() == 16);
  CHECK(d16.element_order(d16.generator_ids()[0]) == 8);
  CHECK(d16.element_order(d16.generator_ids()[1]) == 2);
  // x^y = x^-1
  CHECK(d16.conjugate(d16.generator_ids()[0], d16.generator_ids()[1]) ==
        d16.inverse(d16.generator_ids()[0]));
}

TEST_CASE("build: Q8 on 8 points via the regular action") {
  FiniteGroup q8 = build(GroupSpec::parse("Q8"));
  REQUIRE(q8.order() == 8);
  std::multiset<std::uint64_t> orders;
  for (ElementId g = 0; g < 8; ++g) orders.insert(q8.element_order(g));
  // 1, -1, and six elements of order 4
  CHECK(orders == std::multiset<std::uint64_t>{1, 2, 4, 4, 4, 4, 4, 4});
  // i^2 = j^2, the unique involution
  ElementId i = q8.generator_ids()[0], j = q8.generator_ids()[1];
  CHECK(q8.multiply(i, i) == q8.multiply(j, j));
  CHECK(q8.multiply(i, j) != q8.multiply(j, i)); // nonabelian
}

TEST_CASE("build: D16 has exactly one cyclic normal subgroup of order 8") {
  FiniteGroup d16 = build(GroupSpec::parse("D16"));
  std::size_t cyclic_order8 = 0;
  for (const auto& N : normal_subgroups(d16)) {
    if (N.size() != 8) continue;
    bool cyclic = false;
    for (ElementId g : N.members()) {
      if (d16.element_order(g) == 8) cyclic = true;
    }
    if (cyclic) {
      ++cyclic_order8;
      CHECK(oracle::is_normal(d16, N.members()));
    }
  }
  CHECK(cyclic_order8 == 1);
}

TEST_CASE("build: direct product orders multiply and factors are addressable") {
  for (auto [text, lhs, rhs] : {std::tuple<const char*, const char*, const char*>
                                    {"D16xD8", "D16", "D8"},
                                {"D8xC3", "D8", "C3"},
                                {"S3xS3", "S3", "S3"},
                                {"Q8xC9", "Q8", "C9"}}) {
    CatalogEntry entry = build_entry(GroupSpec::parse(text));
    std::uint64_t a = build(GroupSpec::parse(lhs)).order();
    std::uint64_t b = build(GroupSpec::parse(rhs)).order();
    CHECK(entry.group.order() == a * b);
    ElementSubset left = resolve_normal(entry, "left");
    ElementSubset right = resolve_normal(entry, "right");
    CHECK(left.size() == a);
    CHECK(right.size() == b);
    CHECK(left.is_normal());
    CHECK(right.is_normal());
    CHECK(intersect(left, right).size() == 1);
  }
}

TEST_CASE("resolve_normal: names, specs, and failure modes") {
  CatalogEntry s3 = build_entry(GroupSpec::parse("S3"));
  CHECK(resolve_normal(s3, "1").size() == 1);
  CHECK(resolve_normal(s3, "trivial").size() == 1);
  CHECK(resolve_normal(s3, "G").size() == 6);
  CHECK(resolve_normal(s3, "self").size() == 6);
  ElementSubset a3 = resolve_normal(s3, "A3"); // same-degree spec fallback
  CHECK(a3.size() == 3);
  CHECK(a3.is_normal());
  CHECK(resolve_normal(s3, "x-cyclic").members() == a3.members());
  CHECK_THROWS_AS(resolve_normal(s3, "S4"), NotSubgroupOfGroup); // wrong degree
  CHECK_THROWS_AS(resolve_normal(s3, "C2"), NotSubgroupOfGroup); // wrong degree too
  CHECK_THROWS_AS(resolve_normal(s3, "nonsense"), ParseError);

  CatalogEntry s4 = build_entry(GroupSpec::parse("S4"));
  CHECK_THROWS_AS(resolve_normal(s4, "x-cyclic"), NotNormal); // <4-cycle> not normal
  CHECK_THROWS_AS(resolve_normal(s4, "C4"), NotNormal);       // same subgroup, by spec
  CHECK(resolve_normal(s4, "A4").size() == 12);
}

TEST_CASE("load_group_file: S3 with a normal and a non-normal subset") {
  TempFile good(R"({
    "degree": 3,
    "generators": [[1,2,0],[1,0,2]],
    "subsets": { "A3": [[1,2,0]], "triv": [] }
  })");
  CatalogEntry entry = load_group_file(good.path);
  CHECK(entry.group.order() == 6);
  ElementSubset a3 = resolve_normal(entry, "A3");
  CHECK(a3.size() == 3);
  CHECK(oracle::is_normal(entry.group, a3.members()));
  CHECK(resolve_normal(entry, "triv").size() == 1);

  TempFile bad(R"({
    "degree": 3,
    "generators": [[1,2,0],[1,0,2]],
    "subsets": { "T": [[1,0,2]] }
  })");
  CHECK_THROWS_AS(load_group_file(bad.path), NotNormal);
}

TEST_CASE("load_group_file: format and membership failures") {
  TempFile not_json("this is not json");
  CHECK_THROWS_AS(load_group_file(not_json.path), FormatError);

  TempFile missing_degree(R"({ "generators": [[0,1]] })");
  CHECK_THROWS_AS(load_group_file(missing_degree.path), FormatError);

  TempFile wrong_degree(R"({ "degree": 3, "generators": [[1,0]] })");
  CHECK_THROWS_AS(load_group_file(wrong_degree.path), FormatError);

  TempFile not_bijection(R"({ "degree": 2, "generators": [[0,0]] })");
  CHECK_THROWS_AS(load_group_file(not_bijection.path), FormatError);

  // (0 1) lies outside the group generated by the 3-cycle
  TempFile outside(R"({
    "degree": 3,
    "generators": [[1,2,0]],
    "subsets": { "bad": [[1,0,2]] }
  })");
  CHECK_THROWS_AS(load_group_file(outside.path), NotSubgroupOfGroup);

  CHECK_THROWS_AS(load_group_file("no_such_file.json"), FormatError);
}

TEST_CASE("order cap respected by build") {
  CHECK_THROWS_AS(build(GroupSpec::parse("S4"), 10), OrderCapExceeded);
  CHECK(build(GroupSpec::parse("S4"), 24).order() == 24);
}

TEST_CASE("default corpus contents") {
  std::vector<std::string> warnings;
  auto corpus = default_corpus(kDefaultOrderCap, kDefaultOrderCap, kDefaultLatticeCap,
                               &warnings);
  CHECK(warnings.empty());
  REQUIRE(corpus.size() >= 40);

  std::set<std::string> labels;
  for (const auto& entry : corpus) labels.insert(entry.label);
  for (const char* required : {"C24", "D32", "Q8", "S3", "S4", "S5", "A4", "A5", "D16xD8",
                               "D8xC3", "S3xS3", "Q8xC9"}) {
    CHECK(labels.count(required));
  }

  std::size_t pairs = 0;
  for (const auto& entry : corpus) {
    pairs += entry.normals.size();
    // 1 and G are always present
    CHECK(entry.normals.front().second.size() == 1);
    CHECK(entry.normals.back().second.size() == entry.group.order());

    if (entry.label == "D16xD8") {
      std::size_t order8 = 0;
      for (const auto& [name, N] : entry.normals) order8 += (N.size() == 8);
      CHECK(order8 >= 2);
    }
    if (entry.label == "A5") {
      CHECK(entry.normals.size() == 2); // simple
    }
  }
  CHECK(pairs >= 100);
}
