#include "hyperclass/classes.hpp"

#include <algorithm>
#include <cassert>

#include "hyperclass/errors.hpp"

namespace hyperclass {

ClassFrequency::ClassFrequency(std::map<std::uint64_t, std::uint64_t> entries)
    : entries_(std::move(entries)) {
  for (const auto& [size, mult] : entries_) {
    if (size == 0 || mult == 0) {
      throw FormatError("frequency entries need size >= 1 and multiplicity >= 1");
    }
  }
}

std::uint64_t ClassFrequency::multiplicity(std::uint64_t size) const {
  auto it = entries_.find(size);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t ClassFrequency::total() const {
  std::uint64_t sum = 0;
  for (const auto& [size, mult] : entries_) sum += size * mult;
  return sum;
}

nlohmann::ordered_json ClassFrequency::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [size, mult] : entries_) out.push_back({size, mult});
  return out;
}

ClassFrequency ClassFrequency::from_json(const nlohmann::json& fragment) {
  if (!fragment.is_array()) throw FormatError("frequency fragment must be an array");
  std::map<std::uint64_t, std::uint64_t> entries;
  for (const auto& item : fragment) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned()) {
      throw FormatError("frequency entry must be [size, multiplicity]");
    }
    std::uint64_t size = item[0].get<std::uint64_t>();
    std::uint64_t mult = item[1].get<std::uint64_t>();
    if (entries.count(size)) throw FormatError("duplicate frequency size");
    entries[size] = mult;
  }
  return ClassFrequency(std::move(entries));
}

std::vector<ElementSubset> conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<ElementId> gen_inverses;
  for (ElementId g : G.generator_ids()) gen_inverses.push_back(G.inverse(g));

  std::vector<std::uint8_t> visited(n, 0);
  std::vector<ElementSubset> classes;
  std::vector<ElementId> orbit;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (visited[seed]) continue;
    orbit.clear();
    orbit.push_back(static_cast<ElementId>(seed));
    visited[seed] = 1;
    for (std::size_t at = 0; at < orbit.size(); ++at) {
      for (std::size_t gi = 0; gi < gen_inverses.size(); ++gi) {
        ElementId g = G.generator_ids()[gi];
        ElementId conj = G.multiply(G.multiply(gen_inverses[gi], orbit[at]), g);
        if (!visited[conj]) {
          visited[conj] = 1;
          orbit.push_back(conj);
        }
      }
    }
    classes.emplace_back(G, orbit);
  }
  return classes;
}

std::vector<ElementSubset> g_classes_in(const FiniteGroup& G, const ElementSubset& N) {
  return g_classes_in(G, N, conjugacy_classes(G));
}

std::vector<ElementSubset> g_classes_in([[maybe_unused]] const FiniteGroup& G,
                                        const ElementSubset& N,
                                        const std::vector<ElementSubset>& classes) {
  assert(N.parent().same_handle(G));
  auto mask = N.membership_mask();
  std::vector<ElementSubset> inside;
  for (const auto& cls : classes) {
    std::size_t in = 0;
    for (ElementId id : cls.members()) in += mask[id];
    if (in == cls.size()) {
      inside.push_back(cls);
    } else if (in != 0) {
      throw NotNormal("a conjugacy class straddles the subset; it is not normal");
    }
  }
  return inside;
}

ClassFrequency frequency_function(const FiniteGroup& G, const ElementSubset& N) {
  return frequency_function(G, N, conjugacy_classes(G));
}

ClassFrequency frequency_function(const FiniteGroup& G, const ElementSubset& N,
                                  const std::vector<ElementSubset>& classes) {
  std::map<std::uint64_t, std::uint64_t> entries;
  for (const auto& cls : g_classes_in(G, N, classes)) ++entries[cls.size()];
  return ClassFrequency(std::move(entries));
}

PrimeSet PrimeSet::of(std::vector<std::uint64_t> primes) {
  PrimeSet set;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  set.primes_ = std::move(primes);
  return set;
}

PrimeSet PrimeSet::complement_of_single(std::uint64_t p) {
  PrimeSet set = of({p});
  set.complement_ = true;
  return set;
}

bool PrimeSet::contains(std::uint64_t prime) const {
  bool listed = std::binary_search(primes_.begin(), primes_.end(), prime);
  return complement_ ? !listed : listed;
}

std::string PrimeSet::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(primes_[i]);
  }
  out += "}";
  if (complement_) out += "'";
  return out;
}

bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  for (std::uint64_t p : prime_divisors(n)) {
    if (!pi.contains(p)) return false;
  }
  return true;
}

std::uint64_t s_pi_size(const ClassFrequency& freq, const PrimeSet& pi) {
  std::uint64_t sum = 0;
  for (const auto& [size, mult] : freq.entries()) {
    if (is_pi_number(size, pi)) sum += size * mult;
  }
  return sum;
}

ElementSubset s_pi_set(const FiniteGroup& G, const ElementSubset& N, const PrimeSet& pi) {
  return s_pi_set(G, N, pi, conjugacy_classes(G));
}

ElementSubset s_pi_set(const FiniteGroup& G, const ElementSubset& N, const PrimeSet& pi,
                       const std::vector<ElementSubset>& classes) {
  std::vector<ElementId> members;
  for (const auto& cls : g_classes_in(G, N, classes)) {
    if (is_pi_number(cls.size(), pi)) {
      members.insert(members.end(), cls.members().begin(), cls.members().end());
    }
  }
  return ElementSubset(G, std::move(members));
}

} // namespace hyperclass
