#include "hyperclass/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperclass/criteria.hpp"
#include "hyperclass/errors.hpp"

namespace hyperclass {

namespace {

class Runner {
public:
  Runner(VerifyOutcome& outcome, const VerifyOptions& options)
      : outcome_(outcome), options_(options) {}

  bool enabled(const std::string& tag) const {
    return !options_.only_tags || options_.only_tags->count(tag) > 0;
  }

  void check(const std::string& group, const std::string& subgroup, const std::string& tag,
             std::uint64_t expected, std::uint64_t actual) {
    check_str(group, subgroup, tag, std::to_string(expected), std::to_string(actual),
              expected == actual);
  }

  void check_bool(const std::string& group, const std::string& subgroup,
                  const std::string& tag, bool expected, bool actual) {
    check_str(group, subgroup, tag, expected ? "true" : "false", actual ? "true" : "false",
              expected == actual);
  }

  void check_str(const std::string& group, const std::string& subgroup,
                 const std::string& tag, const std::string& expected,
                 const std::string& actual, bool pass) {
    if (!enabled(tag)) return;
    ++outcome_.checks_run;
    tag_ok_[tag]; // keep the tag visible in the summary even on failure
    if (pass) {
      ++tag_ok_[tag];
    } else {
      outcome_.failures.push_back({group, subgroup, tag, expected, actual});
    }
  }

  void finish() {
    for (const auto& [tag, ok] : tag_ok_) outcome_.per_tag.emplace_back(tag, ok);
  }

private:
  VerifyOutcome& outcome_;
  const VerifyOptions& options_;
  std::map<std::string, std::size_t> tag_ok_;
};

// All distinct conjugates of a subgroup (dedup by member list).
std::vector<ElementSubset> all_conjugates(const FiniteGroup& G, const ElementSubset& H) {
  std::set<std::vector<ElementId>> seen;
  std::vector<ElementSubset> result;
  for (std::size_t t = 0; t < G.order(); ++t) {
    std::vector<ElementId> conj;
    conj.reserve(H.size());
    for (ElementId h : H.members()) {
      conj.push_back(G.conjugate(h, static_cast<ElementId>(t)));
    }
    std::sort(conj.begin(), conj.end());
    if (seen.insert(conj).second) result.emplace_back(G, std::move(conj));
  }
  return result;
}

constexpr std::size_t kExpensiveCheckMaxOrder = 200;

void group_level_checks(Runner& run, const CorpusEntry& entry, StructureCache& cache) {
  const FiniteGroup& G = entry.group;
  const std::string& label = entry.label;

  // Class sizes divide |G|.
  if (run.enabled("ClassSizeDivides")) {
    bool all_divide = true;
    for (const auto& cls : cache.classes) {
      if (G.order() % cls.size() != 0) all_divide = false;
    }
    run.check_bool(label, "-", "ClassSizeDivides", true, all_divide);
  }

  // Sylow subgroups: exact order, subgroup property, conjugates alike.
  if (run.enabled("SylowOrder")) {
    for (std::uint64_t p : cache.primes) {
      const ElementSubset& P = cache.sylow_p(p);
      run.check(label, "-", "SylowOrder", p_part(G.order(), p), P.size());
      run.check_bool(label, "-", "SylowOrder", true, P.is_subgroup());
      if (G.order() <= kExpensiveCheckMaxOrder) {
        bool conjugates_ok = true;
        for (const auto& Q : all_conjugates(G, P)) {
          if (Q.size() != P.size() || !Q.is_subgroup()) conjugates_ok = false;
        }
        run.check_bool(label, "-", "SylowOrder", true, conjugates_ok);
      }
    }
  }

  // Nilpotency two ways: hypercentre reaches G iff every Sylow is normal.
  if (run.enabled("NilpotencyXcheck")) {
    bool via_series = cache.hypercentre().size() == G.order();
    bool via_sylow = true;
    for (std::uint64_t p : cache.primes) {
      if (!cache.sylow_p(p).is_normal()) via_sylow = false;
    }
    run.check_bool(label, "-", "NilpotencyXcheck", via_series, via_sylow);
  }

  // Lemma 2.2: a p-element lies in the hypercentre iff it commutes with
  // every p'-element.
  if (run.enabled("Lemma2.2")) {
    auto hyp_mask = cache.hypercentre().membership_mask();
    for (std::uint64_t p : cache.primes) {
      std::vector<ElementId> p_elements, p_prime_elements;
      for (std::size_t a = 0; a < G.order(); ++a) {
        ElementId id = static_cast<ElementId>(a);
        if (is_p_element(G, id, p)) p_elements.push_back(id);
        if (is_p_prime_element(G, id, p)) p_prime_elements.push_back(id);
      }
      bool all_match = true;
      for (ElementId x : p_elements) {
        bool commutes = true;
        for (ElementId y : p_prime_elements) {
          if (G.multiply(x, y) != G.multiply(y, x)) {
            commutes = false;
            break;
          }
        }
        if (commutes != static_cast<bool>(hyp_mask[x])) all_match = false;
      }
      run.check_bool(label, "-", "Lemma2.2", true, all_match);
    }
  }

  // Lattice sanity on small groups: everything normal, join- and
  // intersection-closed.
  if (run.enabled("Lattice") && G.order() <= kExpensiveCheckMaxOrder) {
    std::set<std::vector<ElementId>> members;
    for (const auto& [name, N] : entry.normals) members.insert(N.members());
    bool closed = true;
    bool all_normal = true;
    for (std::size_t i = 0; i < entry.normals.size(); ++i) {
      const ElementSubset& A = entry.normals[i].second;
      if (!A.is_normal()) all_normal = false;
      for (std::size_t j = 0; j < i; ++j) {
        const ElementSubset& B = entry.normals[j].second;
        if (!members.count(intersect(A, B).members())) closed = false;
        std::vector<ElementId> joint = A.members();
        joint.insert(joint.end(), B.members().begin(), B.members().end());
        if (!members.count(subgroup_closure(G, reduce_generators(G, joint)).members())) {
          closed = false;
        }
      }
    }
    run.check_bool(label, "-", "Lattice", true, all_normal && closed);
  }
}

} // namespace

VerifyOutcome run_verification(const std::vector<CorpusEntry>& corpus,
                               const VerifyOptions& options) {
  VerifyOutcome outcome;
  Runner run(outcome, options);

  for (const auto& entry : corpus) {
    const FiniteGroup& G = entry.group;
    const std::string& label = entry.label;
    ++outcome.groups_checked;

    StructureCache cache(G);
    group_level_checks(run, entry, cache);

    for (const auto& [name, N] : entry.normals) {
      ++outcome.pairs_checked;

      ClassFrequency freq = frequency_function(G, N, cache.classes);
      ClassFrequency theorem_freq = freq;
      if (options.frequency_mutator) options.frequency_mutator(label, name, theorem_freq);

      run.check(label, name, "ClassEquation", N.size(), freq.total());

      // Recorded only; the paper leaves recognising nilpotency of N open.
      if (is_nilpotent_subgroup(G, N)) ++outcome.nilpotent_normals;

      // Hypercentrality, frequency side vs containment.
      {
        bool criterion = hypercentral_criterion(theorem_freq);
        auto mask = cache.hypercentre().membership_mask();
        bool oracle = true;
        for (ElementId n : N.members()) {
          if (!mask[n]) {
            oracle = false;
            break;
          }
        }
        if (oracle) ++outcome.hypercentral_normals;
        run.check_bool(label, name, "Hypercentral", oracle, criterion);
      }

      // Purity: serialize, discard, reparse, recompute.
      if (run.enabled("Purity")) {
        ClassFrequency reparsed = ClassFrequency::from_json(
            nlohmann::json::parse(freq.to_json().dump()));
        bool same = reparsed == freq &&
                    hypercentral_criterion(reparsed) == hypercentral_criterion(freq);
        for (std::uint64_t p : cache.primes) {
          same = same && sylow_hypercentral_criterion(reparsed, p) ==
                             sylow_hypercentral_criterion(freq, p) &&
                 s_pi_size(reparsed, PrimeSet::single(p)) ==
                     s_pi_size(freq, PrimeSet::single(p)) &&
                 s_pi_size(reparsed, PrimeSet::complement_of_single(p)) ==
                     s_pi_size(freq, PrimeSet::complement_of_single(p));
        }
        run.check_bool(label, name, "Purity", true, same);
      }

      // Lemma 2.3: primes of |N ∩ Z_inf| divide |N ∩ Z(G)|.
      if (run.enabled("Lemma2.3")) {
        std::uint64_t hyp_int = intersect(N, cache.hypercentre()).size();
        std::uint64_t z_int = intersect(N, cache.centre).size();
        bool ok = true;
        for (std::uint64_t p : prime_divisors(hyp_int)) {
          if (z_int % p != 0) ok = false;
        }
        run.check_bool(label, name, "Lemma2.3", true, ok);
      }

      // Lemma 2.1, for normal p-subgroups: containment in the hypercentre
      // iff G / C_G(N) is a p-group.
      if (run.enabled("Lemma2.1") && N.size() > 1) {
        auto primes_of_n = prime_divisors(N.size());
        if (primes_of_n.size() == 1) {
          std::uint64_t p = primes_of_n[0];
          auto mask = cache.hypercentre().membership_mask();
          bool contained = true;
          for (ElementId n : N.members()) {
            if (!mask[n]) {
              contained = false;
              break;
            }
          }
          std::uint64_t quotient_order = G.order() / centralizer(G, N).size();
          bool p_group_quotient = p_part(quotient_order, p) == quotient_order;
          run.check_bool(label, name, "Lemma2.1", contained, p_group_quotient);
        }
      }

      for (std::uint64_t p : cache.primes) {
        ++outcome.primes_checked;
        PrimeVerdict v = evaluate_prime(cache, N, theorem_freq, p);

        run.check(label, name, "Thm3.1(a)", v.hyp_intersection_p_part, v.s_p_size_p_part);
        run.check_bool(label, name, "Thm3.1(b)", v.sylow_hypercentral_oracle,
                       v.sylow_hypercentral_criterion);
        run.check_bool(label, name, "CorollaryB", v.corollary_b_oracle,
                       v.corollary_b_criterion);
        run.check_bool(label, name, "ThmC(a)", true, v.thm_c_a_holds);
        run.check_bool(label, name, "ThmC(b)", true, v.thm_c_b_holds);
        run.check_bool(label, name, "ThmC(c)", v.thm_c_c_oracle, v.thm_c_c_criterion);

        // Consistency of the frequency-computed sizes against the explicit
        // element sets.
        if (run.enabled("SpiConsistency")) {
          for (const PrimeSet& pi :
               {PrimeSet::single(p), PrimeSet::complement_of_single(p)}) {
            run.check(label, name, "SpiConsistency",
                      s_pi_size(freq, pi), s_pi_set(G, N, pi, cache.classes).size());
          }
        }

        // S_{p'} as the union of C_N(P) over all Sylow p-subgroups.
        if (run.enabled("SpiSylowUnion") && G.order() <= kExpensiveCheckMaxOrder) {
          std::set<ElementId> unioned;
          for (const auto& P : all_conjugates(G, cache.sylow_p(p))) {
            ElementSubset fixed = intersect(N, centralizer(G, P));
            unioned.insert(fixed.members().begin(), fixed.members().end());
          }
          ElementSubset direct =
              s_pi_set(G, N, PrimeSet::complement_of_single(p), cache.classes);
          bool same = unioned.size() == direct.size() &&
                      std::equal(unioned.begin(), unioned.end(), direct.members().begin());
          run.check_bool(label, name, "SpiSylowUnion", true, same);
        }

        // Eq. (1) whenever its hypothesis p | |N ∩ Z(G)| holds.
        if (run.enabled("Eq(1)")) {
          std::uint64_t nz = intersect(N, cache.centre).size();
          if (nz % p == 0) {
            if (options.exhaustive_eq1) {
              for (const Eq1Result& r : eq1_check_exhaustive(G, N, p)) {
                run.check(label, name, "Eq(1)", r.rhs, r.lhs);
              }
            } else {
              Eq1Result r = eq1_check(G, N, p);
              run.check(label, name, "Eq(1)", r.rhs, r.lhs);
            }
          }
        }
      }
    }
  }

  run.finish();
  return outcome;
}

void print_outcome(std::ostream& out, const VerifyOutcome& outcome,
                   const std::string& corpus_label) {
  out << "corpus: " << corpus_label << " (" << outcome.groups_checked << " groups)\n";
  out << "pairs checked:  " << outcome.pairs_checked << "\n";
  out << "prime triples:  " << outcome.primes_checked << "\n";
  out << "checks run:     " << outcome.checks_run << "\n";
  for (const auto& [tag, ok] : outcome.per_tag) {
    out << "  " << tag << ": " << ok << " ok\n";
  }
  out << "note: nilpotent N " << outcome.nilpotent_normals << "/" << outcome.pairs_checked
      << ", hypercentral N " << outcome.hypercentral_normals << "/"
      << outcome.pairs_checked << " (recorded, not asserted)\n";
  for (const auto& w : outcome.warnings) out << w << "\n";
  for (const auto& f : outcome.failures) {
    out << "FAIL group=" << f.group << " normal=" << f.subgroup << " tag=" << f.tag
        << " expected=" << f.expected << " actual=" << f.actual << "\n";
  }
  out << "verify: " << (outcome.ok() ? "PASS" : "FAIL") << " (" << outcome.failures.size()
      << " failures)\n";
}

} // namespace hyperclass
