#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "hyperclass/catalog.hpp"
#include "hyperclass/classes.hpp"

namespace hyperclass {

struct VerifyFailure {
  std::string group;
  std::string subgroup; // "-" for group-level checks
  std::string tag;
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  bool exhaustive_eq1 = false;

  // When set, only checks whose tag is listed run.
  std::optional<std::set<std::string>> only_tags;

  // Test hook: corrupts the frequency table handed to the theorem checks
  // for matching pairs. Data-consistency checks (ClassEquation,
  // SpiConsistency, Purity) always see the genuine table.
  std::function<void(const std::string& group_label, const std::string& normal_name,
                     ClassFrequency& freq)>
      frequency_mutator;
};

struct VerifyOutcome {
  std::size_t groups_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t primes_checked = 0; // (G, N, p) triples
  std::size_t checks_run = 0;
  std::size_t nilpotent_normals = 0;    // recorded, never asserted
  std::size_t hypercentral_normals = 0; // recorded, never asserted
  std::vector<std::pair<std::string, std::size_t>> per_tag; // tag -> checks passed
  std::vector<std::string> warnings;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Runs every theorem, lemma and data-consistency check over the corpus.
VerifyOutcome run_verification(const std::vector<CorpusEntry>& corpus,
                               const VerifyOptions& options = {});

// Canonical text rendering (byte-identical across runs).
void print_outcome(std::ostream& out, const VerifyOutcome& outcome,
                   const std::string& corpus_label);

} // namespace hyperclass
