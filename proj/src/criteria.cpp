#include "hyperclass/criteria.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hyperclass/errors.hpp"

namespace hyperclass {

bool sylow_hypercentral_criterion(const ClassFrequency& freq, std::uint64_t p) {
  return p_part(s_pi_size(freq, PrimeSet::single(p)), p) == p_part(freq.total(), p);
}

bool hypercentral_criterion(const ClassFrequency& freq) {
  for (std::uint64_t p : prime_divisors(freq.total())) {
    if (!sylow_hypercentral_criterion(freq, p)) return false;
  }
  return true;
}

StructureCache::StructureCache(const FiniteGroup& group)
    : G(group),
      classes(conjugacy_classes(group)),
      centre(hyperclass::centre(group)),
      series(upper_central_series(group)),
      primes(prime_divisors(group.order())) {}

const ElementSubset& StructureCache::sylow_p(std::uint64_t p) {
  for (auto& [q, subset] : sylows_) {
    if (q == p) return subset;
  }
  sylows_.emplace_back(p, sylow(G, p));
  return sylows_.back().second;
}

const ElementSubset& StructureCache::o_p_of(std::uint64_t p) {
  for (auto& [q, subset] : o_ps_) {
    if (q == p) return subset;
  }
  o_ps_.emplace_back(p, o_p(G, p));
  return o_ps_.back().second;
}

const ElementSubset& StructureCache::o_p_prime_of(std::uint64_t p) {
  for (auto& [q, subset] : o_p_primes_) {
    if (q == p) return subset;
  }
  o_p_primes_.emplace_back(p, o_p_prime(G, p));
  return o_p_primes_.back().second;
}

PrimeVerdict evaluate_prime(StructureCache& cache, const ElementSubset& N,
                            const ClassFrequency& freq, std::uint64_t p) {
  const FiniteGroup& G = cache.G;
  PrimeVerdict v;
  v.p = p;

  // Frequency side.
  v.s_p_size = s_pi_size(freq, PrimeSet::single(p));
  v.s_p_size_p_part = p_part(v.s_p_size, p);
  v.n_p_part = p_part(freq.total(), p);
  v.sylow_hypercentral_criterion = (v.s_p_size_p_part == v.n_p_part);
  v.corollary_b_criterion = v.sylow_hypercentral_criterion;
  v.s_p_prime_size = s_pi_size(freq, PrimeSet::complement_of_single(p));
  // |N ∩ Z(G)| = w(1) is itself frequency data; w(1) >= 1 for genuine
  // tables, the clamp only keeps injected-corruption tests well-defined.
  std::uint64_t w1 = std::max<std::uint64_t>(freq.multiplicity(1), 1);
  v.thm_c_c_criterion = p_part(v.s_p_prime_size, p) == p_part(w1, p);

  // Structure side.
  v.hyp_intersection_p_part = p_part(intersect(N, cache.hypercentre()).size(), p);
  v.sylow_hypercentral_oracle = (v.hyp_intersection_p_part == v.n_p_part);

  {
    const ElementSubset& op = cache.o_p_of(p);
    bool all_commute = true;
    for (ElementId x : N.members()) {
      if (!is_p_element(G, x, p)) continue;
      for (ElementId y : op.members()) {
        if (G.multiply(x, y) != G.multiply(y, x)) {
          all_commute = false;
          break;
        }
      }
      if (!all_commute) break;
    }
    v.corollary_b_oracle = all_commute;
  }

  {
    std::uint64_t nz = intersect(N, cache.centre).size();
    v.thm_c_a_holds = (v.s_p_prime_size % nz) == 0;

    const ElementSubset& opp = cache.o_p_prime_of(p);
    std::uint64_t cn = intersect(N, centralizer(G, opp)).size();
    v.thm_c_b_holds = (v.s_p_prime_size % cn) == 0;

    const ElementSubset& P = cache.sylow_p(p);
    ElementSubset zp = intersect(P, centralizer(G, P)); // Z(P)
    ElementSubset zp_in_n = intersect(zp, N);
    bool contained = true;
    for (ElementId x : zp_in_n.members()) {
      if (!cache.centre.contains(x)) {
        contained = false;
        break;
      }
    }
    v.thm_c_c_oracle = contained;
  }

  return v;
}

std::pair<std::uint64_t, std::uint64_t> thm_a_part_a(const FiniteGroup& G,
                                                     const ElementSubset& N,
                                                     std::uint64_t p) {
  ClassFrequency freq = frequency_function(G, N);
  std::uint64_t criterion = p_part(s_pi_size(freq, PrimeSet::single(p)), p);
  std::uint64_t oracle = p_part(intersect(N, hypercentre(G)).size(), p);
  return {criterion, oracle};
}

std::pair<bool, bool> corollary_b(const FiniteGroup& G, const ElementSubset& N,
                                  std::uint64_t p) {
  StructureCache cache(G);
  ClassFrequency freq = frequency_function(G, N, cache.classes);
  PrimeVerdict v = evaluate_prime(cache, N, freq, p);
  return {v.corollary_b_criterion, v.corollary_b_oracle};
}

PrimeVerdict thm_c(const FiniteGroup& G, const ElementSubset& N, std::uint64_t p) {
  StructureCache cache(G);
  ClassFrequency freq = frequency_function(G, N, cache.classes);
  return evaluate_prime(cache, N, freq, p);
}

namespace {

Eq1Result eq1_for_generator(const FiniteGroup& G, const ElementSubset& N, std::uint64_t p,
                            ElementId z, std::uint64_t rhs) {
  std::vector<ElementId> gen{z};
  Quotient q = quotient(G, subgroup_closure(G, gen));

  std::vector<ElementId> image;
  for (ElementId n : N.members()) image.push_back(q.coset_map[n]);
  ElementSubset n_bar(q.group, std::move(image));

  ClassFrequency qfreq = frequency_function(q.group, n_bar);
  return Eq1Result{s_pi_size(qfreq, PrimeSet::single(p)) * p, rhs, z};
}

} // namespace

Eq1Result eq1_check(const FiniteGroup& G, const ElementSubset& N, std::uint64_t p) {
  ElementSubset nz = intersect(N, centre(G));
  if (nz.size() % p != 0) {
    throw PreconditionFailed("eq1_check: p does not divide |N ∩ Z(G)|");
  }
  ElementId z = 0;
  for (ElementId cand : nz.members()) {
    if (G.element_order(cand) == p) {
      z = cand;
      break;
    }
  }
  assert(z != 0); // Cauchy inside the abelian group N ∩ Z(G)
  std::uint64_t rhs = s_pi_size(frequency_function(G, N), PrimeSet::single(p));
  return eq1_for_generator(G, N, p, z, rhs);
}

std::vector<Eq1Result> eq1_check_exhaustive(const FiniteGroup& G, const ElementSubset& N,
                                            std::uint64_t p) {
  ElementSubset nz = intersect(N, centre(G));
  if (nz.size() % p != 0) {
    throw PreconditionFailed("eq1_check: p does not divide |N ∩ Z(G)|");
  }
  std::uint64_t rhs = s_pi_size(frequency_function(G, N), PrimeSet::single(p));

  // Distinct order-p subgroups, each reported once via its least generator.
  std::vector<Eq1Result> results;
  std::vector<std::uint8_t> used(G.order(), 0);
  for (ElementId cand : nz.members()) {
    if (used[cand] || G.element_order(cand) != p) continue;
    ElementId power = cand;
    while (power != G.identity()) {
      used[power] = 1;
      power = G.multiply(power, cand);
    }
    results.push_back(eq1_for_generator(G, N, p, cand, rhs));
  }
  return results;
}

bool AnalysisReport::consistent() const {
  if (hypercentral_criterion != hypercentral_oracle) return false;
  for (const auto& v : verdicts) {
    if (!v.consistent()) return false;
  }
  return true;
}

AnalysisReport analyze_with_cache(StructureCache& cache, const ElementSubset& N,
                                  const std::string& group_label,
                                  const std::string& normal_label) {
  const FiniteGroup& G = cache.G;
  AnalysisReport report;
  report.group_spec = group_label;
  report.group_order = G.order();
  report.normal_name = normal_label;
  report.normal_order = N.size();
  report.frequency = frequency_function(G, N, cache.classes);

  for (const auto& term : cache.series.terms) {
    report.z_orders.push_back(intersect(N, term).size());
  }
  report.z_infty_order = intersect(N, cache.hypercentre()).size();

  for (std::uint64_t p : cache.primes) {
    report.verdicts.push_back(evaluate_prime(cache, N, report.frequency, p));
  }

  report.hypercentral_criterion = hypercentral_criterion(report.frequency);
  {
    auto mask = cache.hypercentre().membership_mask();
    bool inside = true;
    for (ElementId n : N.members()) {
      if (!mask[n]) {
        inside = false;
        break;
      }
    }
    report.hypercentral_oracle = inside;
  }
  return report;
}

AnalysisReport analyze(const FiniteGroup& G, const ElementSubset& N,
                       const std::string& group_label, const std::string& normal_label) {
  StructureCache cache(G);
  return analyze_with_cache(cache, N, group_label, normal_label);
}

nlohmann::ordered_json AnalysisReport::to_json() const {
  nlohmann::ordered_json out;
  out["group"] = {{"spec", group_spec}, {"order", group_order}};
  out["normal"] = {{"name", normal_name}, {"order", normal_order}};
  out["frequency"] = frequency.to_json();
  out["z_orders"] = z_orders;
  out["z_infty_order"] = z_infty_order;
  out["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    out["verdicts"].push_back({{"p", v.p},
                               {"s_p", v.s_p_size},
                               {"s_p_p_part", v.s_p_size_p_part},
                               {"n_p_part", v.n_p_part},
                               {"sylow_hyp_criterion", v.sylow_hypercentral_criterion},
                               {"sylow_hyp_oracle", v.sylow_hypercentral_oracle},
                               {"cor_b_criterion", v.corollary_b_criterion},
                               {"cor_b_oracle", v.corollary_b_oracle},
                               {"thm_c_a", v.thm_c_a_holds},
                               {"thm_c_b", v.thm_c_b_holds},
                               {"thm_c_c_criterion", v.thm_c_c_criterion},
                               {"thm_c_c_oracle", v.thm_c_c_oracle}});
  }
  out["hypercentral"] = {{"criterion", hypercentral_criterion},
                         {"oracle", hypercentral_oracle}};
  return out;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  out << "group        " << group_spec << "  (order " << group_order << ")\n";
  out << "normal       " << normal_name << "  (order " << normal_order << ")\n";
  out << "frequency    " << frequency.to_json().dump() << "\n";
  out << "|N ^ Z_i|    [";
  for (std::size_t i = 0; i < z_orders.size(); ++i) {
    if (i) out << ", ";
    out << z_orders[i];
  }
  out << "]\n";
  out << "|N ^ Z_inf|  " << z_infty_order << "\n";
  for (const auto& v : verdicts) {
    out << "p=" << v.p << "  |S_p|=" << v.s_p_size << "  |S_p|_p=" << v.s_p_size_p_part
        << "  |N|_p=" << v.n_p_part << "  |S_p'|=" << v.s_p_prime_size << "\n";
    out << "     sylow-hypercentral criterion=" << yn(v.sylow_hypercentral_criterion)
        << " oracle=" << yn(v.sylow_hypercentral_oracle) << "\n";
    out << "     corollary-b         criterion=" << yn(v.corollary_b_criterion)
        << " oracle=" << yn(v.corollary_b_oracle) << "\n";
    out << "     thm-c               a=" << yn(v.thm_c_a_holds) << " b=" << yn(v.thm_c_b_holds)
        << " c-criterion=" << yn(v.thm_c_c_criterion) << " c-oracle=" << yn(v.thm_c_c_oracle)
        << "\n";
  }
  out << "hypercentral criterion=" << yn(hypercentral_criterion)
      << " oracle=" << yn(hypercentral_oracle) << "\n";
  out << "result: " << (consistent() ? "OK" : "CRITERION/ORACLE MISMATCH") << "\n";
  return out.str();
}

} // namespace hyperclass
