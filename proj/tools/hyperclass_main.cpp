#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hyperclass/catalog.hpp"
#include "hyperclass/criteria.hpp"
#include "hyperclass/errors.hpp"
#include "hyperclass/verify.hpp"

namespace {

using namespace hyperclass;

std::size_t order_cap_from_env() {
  const char* raw = std::getenv("HYPERCLASS_ORDER_CAP");
  if (!raw || !*raw) return kDefaultOrderCap;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw ParseError("HYPERCLASS_ORDER_CAP must be a positive integer, got '" +
                     std::string(raw) + "'");
  }
  return static_cast<std::size_t>(value);
}

int cmd_analyze(const std::string& group_spec, const std::string& normal_spec, bool json,
                std::size_t order_cap) {
  CatalogEntry entry = build_entry(GroupSpec::parse(group_spec), order_cap);
  ElementSubset N = resolve_normal(entry, normal_spec);
  AnalysisReport report = analyze(entry.group, N, entry.label, normal_spec);
  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.consistent() ? 0 : 2;
}

int cmd_verify(std::size_t max_order, const std::string& corpus_spec, bool exhaustive_eq1,
               std::size_t order_cap) {
  std::vector<CorpusEntry> corpus;
  std::vector<std::string> warnings;
  if (corpus_spec == "default") {
    corpus = default_corpus(max_order, order_cap, kDefaultLatticeCap, &warnings);
  } else if (corpus_spec.rfind("file:", 0) == 0) {
    CatalogEntry entry = load_group_file(corpus_spec.substr(5), order_cap);
    if (entry.group.order() > max_order) {
      std::cout << "corpus: " << corpus_spec << " (0 groups)\n";
      std::cout << "verify: PASS (0 failures)\n";
      return 0;
    }
    CorpusEntry ce{entry.label, entry.group, {}};
    bool have_named = false;
    for (const auto& [name, subset] : entry.named) {
      if (name == "x-cyclic") continue; // only explicit file subsets
      ce.normals.emplace_back(name, subset);
      have_named = true;
    }
    if (!have_named) {
      try {
        auto normals = normal_subgroups(entry.group, kDefaultLatticeCap);
        for (std::size_t i = 0; i < normals.size(); ++i) {
          ce.normals.emplace_back(normal_subgroup_name(i, normals[i].size()),
                                  std::move(normals[i]));
        }
      } catch (const LatticeCapExceeded& e) {
        warnings.push_back("warning: " + entry.label + ": " + std::string(e.what()));
      }
    }
    corpus.push_back(std::move(ce));
  } else {
    throw ParseError("--corpus must be 'default' or 'file:<path>'");
  }

  VerifyOptions options;
  options.exhaustive_eq1 = exhaustive_eq1;
  VerifyOutcome outcome = run_verification(corpus, options);
  outcome.warnings.insert(outcome.warnings.begin(), warnings.begin(), warnings.end());
  print_outcome(std::cout, outcome, corpus_spec);
  return outcome.ok() ? 0 : 2;
}

int cmd_paper_example(std::size_t order_cap) {
  CatalogEntry entry = build_entry(GroupSpec::parse("D16xD8"), order_cap);
  ElementSubset n1 = resolve_normal(entry, "x-cyclic");
  ElementSubset n2 = resolve_normal(entry, "right");

  StructureCache cache(entry.group);
  AnalysisReport r1 = analyze_with_cache(cache, n1, entry.label, "x-cyclic");
  AnalysisReport r2 = analyze_with_cache(cache, n2, entry.label, "right");

  std::cout << "G = D16xD8 (order " << entry.group.order() << ")\n";
  std::cout << "N1 = x-cyclic (order " << n1.size() << "), frequency "
            << r1.frequency.to_json().dump() << "\n";
  std::cout << "N2 = right (order " << n2.size() << "), frequency "
            << r2.frequency.to_json().dump() << "\n";

  auto commutes_within = [&](const ElementSubset& S) {
    for (ElementId a : S.members()) {
      for (ElementId b : S.members()) {
        if (entry.group.multiply(a, b) != entry.group.multiply(b, a)) return false;
      }
    }
    return true;
  };
  bool n1_abelian = commutes_within(n1);
  bool n2_abelian = commutes_within(n2);
  std::uint64_t z2_n1 = r1.z_orders.size() > 1 ? r1.z_orders[1] : 0;
  std::uint64_t z2_n2 = r2.z_orders.size() > 1 ? r2.z_orders[1] : 0;

  std::cout << "N1 abelian: " << (n1_abelian ? "yes" : "no") << ", |N1 ^ Z_2(G)| = " << z2_n1
            << "\n";
  std::cout << "N2 abelian: " << (n2_abelian ? "yes" : "no") << ", |N2 ^ Z_2(G)| = " << z2_n2
            << "\n";

  int failures = 0;
  auto expect = [&failures](bool ok, const std::string& what) {
    std::cout << (ok ? "ok:   " : "FAIL: ") << what << "\n";
    if (!ok) ++failures;
  };
  expect(r1.frequency == r2.frequency &&
             r1.frequency.to_json().dump() == "[[1,2],[2,3]]",
         "both frequency tables equal [[1,2],[2,3]] (multiset {1,1,2,2,2})");
  expect(n1_abelian && !n2_abelian, "x-cyclic abelian, right factor not");
  expect(z2_n1 == 4, "|N1 ^ Z_2(G)| = 4");
  expect(z2_n2 == 8, "|N2 ^ Z_2(G)| = 8");

  std::cout << (failures == 0 ? "paper-example: PASS\n" : "paper-example: FAIL\n");
  return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-class size frequency analysis of normal subgroups"};
  app.require_subcommand(1);

  std::string group_spec, normal_spec = "G";
  bool json = false;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "analyze one (group, normal subgroup) pair");
  analyze_cmd->add_option("--group", group_spec, "group spec, e.g. S4 or D16xD8")
      ->required();
  analyze_cmd->add_option("--normal", normal_spec,
                          "subgroup name (left/right/x-cyclic/1/G/file subset) or spec");
  analyze_cmd->add_flag("--json", json, "emit the JSON report schema");

  std::size_t max_order = kDefaultOrderCap;
  std::string corpus_spec = "default";
  bool exhaustive_eq1 = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the full theorem suite");
  verify_cmd->add_option("--max-order", max_order, "skip corpus groups above this order");
  verify_cmd->add_option("--corpus", corpus_spec, "'default' or 'file:<path>'");
  verify_cmd->add_flag("--exhaustive-eq1", exhaustive_eq1,
                       "check the quotient identity for every valid central subgroup");

  auto* paper_cmd =
      app.add_subcommand("paper-example", "reproduce the D16xD8 frequency example");

  CLI11_PARSE(app, argc, argv);

  try {
    std::size_t order_cap = order_cap_from_env();
    if (analyze_cmd->parsed()) return cmd_analyze(group_spec, normal_spec, json, order_cap);
    if (verify_cmd->parsed()) {
      return cmd_verify(max_order, corpus_spec, exhaustive_eq1, order_cap);
    }
    if (paper_cmd->parsed()) return cmd_paper_example(order_cap);
  } catch (const hyperclass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
