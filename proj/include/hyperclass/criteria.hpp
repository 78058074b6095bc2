#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperclass/central.hpp"
#include "hyperclass/classes.hpp"
#include "hyperclass/group.hpp"

namespace hyperclass {

// Per-prime analysis record. The *_criterion fields are functions of
// (ClassFrequency, p) alone; the *_oracle fields come from direct structural
// computation. In a correct build every criterion equals its oracle.
struct PrimeVerdict {
  std::uint64_t p = 0;

  std::uint64_t s_p_size = 0;              // |S_p|, from frequency data
  std::uint64_t s_p_size_p_part = 0;       // |S_p|_p
  std::uint64_t n_p_part = 0;              // |N|_p, from frequency total
  std::uint64_t hyp_intersection_p_part = 0; // |N ∩ Z_inf(G)|_p, structural

  bool sylow_hypercentral_criterion = false;
  bool sylow_hypercentral_oracle = false;
  bool corollary_b_criterion = false;
  bool corollary_b_oracle = false;

  std::uint64_t s_p_prime_size = 0; // |S_{p'}|, from frequency data
  bool thm_c_a_holds = false;
  bool thm_c_b_holds = false;
  bool thm_c_c_criterion = false;
  bool thm_c_c_oracle = false;

  bool consistent() const {
    return s_p_size_p_part == hyp_intersection_p_part &&
           sylow_hypercentral_criterion == sylow_hypercentral_oracle &&
           corollary_b_criterion == corollary_b_oracle && thm_c_a_holds && thm_c_b_holds &&
           thm_c_c_criterion == thm_c_c_oracle;
  }
};

// Frequency-only criteria. No group argument by design: this is what makes
// the "determined by class sizes and multiplicities" claim machine-checkable.

// |S_p|_p == |N|_p, i.e. a Sylow p-subgroup of N is hypercentral in G.
bool sylow_hypercentral_criterion(const ClassFrequency& freq, std::uint64_t p);

// Conjunction over all primes dividing |N| = freq.total().
bool hypercentral_criterion(const ClassFrequency& freq);

// (|S_p|_p from frequency, |N ∩ Z_inf(G)|_p structural); equal by theorem.
std::pair<std::uint64_t, std::uint64_t> thm_a_part_a(const FiniteGroup& G,
                                                     const ElementSubset& N,
                                                     std::uint64_t p);

// (frequency criterion, direct check that every p-power-order element of N
// commutes with every element of O^p(G)); equivalent by theorem.
std::pair<bool, bool> corollary_b(const FiniteGroup& G, const ElementSubset& N,
                                  std::uint64_t p);

// Full per-prime record, including the three centre/Sylow-centre statements:
//   a: |N ∩ Z(G)| divides |S_{p'}|
//   b: |C_N(O^{p'}(G))| divides |S_{p'}|
//   c: |S_{p'}|_p == |N ∩ Z(G)|_p  iff  Z(P) ∩ N <= Z(G) for a Sylow p-
//      subgroup P (one P suffices; the condition is conjugation-invariant).
PrimeVerdict thm_c(const FiniteGroup& G, const ElementSubset& N, std::uint64_t p);

// The quotient identity |S_p^{G/M}(N/M)| * p == |S_p^G(N)| for a central
// order-p subgroup M <= N ∩ Z(G). Deterministic M: generated by the least-id
// element of order p. Throws PreconditionFailed when p does not divide
// |N ∩ Z(G)|.
struct Eq1Result {
  std::uint64_t lhs = 0; // quotient side, times p
  std::uint64_t rhs = 0;
  ElementId m_generator = 0;
};
Eq1Result eq1_check(const FiniteGroup& G, const ElementSubset& N, std::uint64_t p);
// Every valid M, one result each (ascending by generator id).
std::vector<Eq1Result> eq1_check_exhaustive(const FiniteGroup& G, const ElementSubset& N,
                                            std::uint64_t p);

// Full serializable output for one (G, N) pair.
struct AnalysisReport {
  std::string group_spec;
  std::uint64_t group_order = 0;
  std::string normal_name;
  std::uint64_t normal_order = 0;
  ClassFrequency frequency;
  std::vector<std::uint64_t> z_orders; // |N ∩ Z_i(G)| per series term
  std::uint64_t z_infty_order = 0;     // |N ∩ Z_inf(G)|
  std::vector<PrimeVerdict> verdicts;  // primes dividing |G|, ascending
  bool hypercentral_criterion = false;
  bool hypercentral_oracle = false;

  bool consistent() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

AnalysisReport analyze(const FiniteGroup& G, const ElementSubset& N,
                       const std::string& group_label = "",
                       const std::string& normal_label = "");

// Shared per-group precomputation for analyze/verify. Owned by one thread;
// results are value-identical regardless of caching.
struct StructureCache {
  FiniteGroup G;
  std::vector<ElementSubset> classes;
  ElementSubset centre;
  CentralSeries series;
  std::vector<std::uint64_t> primes; // primes dividing |G|

  explicit StructureCache(const FiniteGroup& group);
  const ElementSubset& hypercentre() const { return series.hypercentre(); }

  const ElementSubset& sylow_p(std::uint64_t p);
  const ElementSubset& o_p_of(std::uint64_t p);
  const ElementSubset& o_p_prime_of(std::uint64_t p);

private:
  std::vector<std::pair<std::uint64_t, ElementSubset>> sylows_, o_ps_, o_p_primes_;
};

// Single formula site used by analyze() and the verification engine.
PrimeVerdict evaluate_prime(StructureCache& cache, const ElementSubset& N,
                            const ClassFrequency& freq, std::uint64_t p);

AnalysisReport analyze_with_cache(StructureCache& cache, const ElementSubset& N,
                                  const std::string& group_label,
                                  const std::string& normal_label);

} // namespace hyperclass
