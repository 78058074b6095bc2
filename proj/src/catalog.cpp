#include "hyperclass/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hyperclass/central.hpp"
#include "hyperclass/errors.hpp"
#include "json.hpp"

namespace hyperclass {

namespace {

GroupSpec::Atom parse_atom(std::string_view token) {
  if (token == "Q8") return GroupSpec::Quaternion{};
  if (token.size() < 2) throw ParseError("unrecognized group atom '" + std::string(token) + "'");
  char kind = token[0];
  std::uint64_t n = 0;
  for (char c : token.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unrecognized group atom '" + std::string(token) + "'");
    }
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
    if (n > 1000000) throw ParseError("group atom parameter too large");
  }
  switch (kind) {
    case 'C':
      if (n < 1) throw ParseError("cyclic group needs n >= 1");
      return GroupSpec::Cyclic{n};
    case 'D':
      if (n < 4 || n % 2 != 0) {
        throw ParseError("dihedral spec D<order> needs an even order >= 4");
      }
      return GroupSpec::Dihedral{n};
    case 'S':
      if (n < 1) throw ParseError("symmetric group needs n >= 1");
      return GroupSpec::Symmetric{n};
    case 'A':
      if (n < 1) throw ParseError("alternating group needs n >= 1");
      return GroupSpec::Alternating{n};
    default:
      throw ParseError("unrecognized group atom '" + std::string(token) + "'");
  }
}

std::string atom_str(const GroupSpec::Atom& atom) {
  struct {
    std::string operator()(const GroupSpec::Cyclic& a) const { return "C" + std::to_string(a.n); }
    std::string operator()(const GroupSpec::Dihedral& a) const {
      return "D" + std::to_string(a.order);
    }
    std::string operator()(const GroupSpec::Quaternion&) const { return "Q8"; }
    std::string operator()(const GroupSpec::Symmetric& a) const {
      return "S" + std::to_string(a.n);
    }
    std::string operator()(const GroupSpec::Alternating& a) const {
      return "A" + std::to_string(a.n);
    }
    std::string operator()(const GroupSpec::File& a) const { return "file:" + a.path; }
  } printer;
  return std::visit(printer, atom);
}

// Generators of one atom acting on its own points; degree and generator
// order are the documented id-stability contract:
//   C_n : n points, [rotation]
//   D_2n: n points (n >= 3), [rotation, reflection fixing point 0];
//         D4 has no faithful 2-point action and lives on 4 points as
//         [(0 1), (2 3)]
//   Q8  : regular action on 8 points, [right-mult by i, right-mult by j]
//   S_n : n points, [n-cycle, (0 1)]
//   A_n : n points, [(0 1 2), full or (n-1)-cycle by parity]
struct AtomRealization {
  std::size_t degree;
  std::vector<Permutation> generators;
};

Permutation rotation(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>((i + 1) % degree);
  return Permutation(std::move(images));
}

AtomRealization realize_cyclic(std::uint64_t n) {
  AtomRealization r{static_cast<std::size_t>(n), {}};
  if (n > 1) r.generators.push_back(rotation(n));
  return r;
}

AtomRealization realize_dihedral(std::uint64_t order) {
  std::uint64_t n = order / 2;
  if (n == 2) {
    return {4,
            {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}};
  }
  std::vector<Point> mirror(n);
  for (std::uint64_t i = 0; i < n; ++i) mirror[i] = static_cast<Point>((n - i) % n);
  return {static_cast<std::size_t>(n), {rotation(n), Permutation(std::move(mirror))}};
}

AtomRealization realize_quaternion() {
  // Elements indexed [1, i, j, k, -1, -i, -j, -k]; sign bit 4, basis 0..3.
  // basis products with sign: i*i = -1, i*j = k, j*k = i, k*i = j, etc.
  static const int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int basis_sign[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  auto mul = [](int a, int b) {
    int sa = a / 4, ba = a % 4;
    int sb = b / 4, bb = b % 4;
    int sign = (sa + sb) % 2;
    if (basis_sign[ba][bb] < 0) sign ^= 1;
    return sign * 4 + basis_mul[ba][bb];
  };
  auto right_mul_perm = [&](int g) {
    std::vector<Point> images(8);
    for (int e = 0; e < 8; ++e) images[e] = static_cast<Point>(mul(e, g));
    return Permutation(std::move(images));
  };
  return {8, {right_mul_perm(1), right_mul_perm(2)}}; // by i, by j
}

AtomRealization realize_symmetric(std::uint64_t n) {
  AtomRealization r{static_cast<std::size_t>(n), {}};
  if (n == 2) {
    r.generators.push_back(Permutation::from_cycles(2, {{0, 1}}));
  } else if (n >= 3) {
    r.generators.push_back(rotation(n));
    r.generators.push_back(Permutation::from_cycles(n, {{0, 1}}));
  }
  return r;
}

AtomRealization realize_alternating(std::uint64_t n) {
  AtomRealization r{static_cast<std::size_t>(n), {}};
  if (n >= 3) r.generators.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
  if (n >= 4) {
    std::vector<Point> cycle;
    for (std::uint64_t i = (n % 2 == 0) ? 1 : 0; i < n; ++i) cycle.push_back(static_cast<Point>(i));
    r.generators.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return r;
}

AtomRealization realize_atom(const GroupSpec::Atom& atom) {
  struct {
    AtomRealization operator()(const GroupSpec::Cyclic& a) const { return realize_cyclic(a.n); }
    AtomRealization operator()(const GroupSpec::Dihedral& a) const {
      return realize_dihedral(a.order);
    }
    AtomRealization operator()(const GroupSpec::Quaternion&) const {
      return realize_quaternion();
    }
    AtomRealization operator()(const GroupSpec::Symmetric& a) const {
      return realize_symmetric(a.n);
    }
    AtomRealization operator()(const GroupSpec::Alternating& a) const {
      return realize_alternating(a.n);
    }
    AtomRealization operator()(const GroupSpec::File&) const {
      throw ParseError("file specs cannot be product components");
    }
  } realizer;
  return std::visit(realizer, atom);
}

Permutation embed(const Permutation& p, std::size_t offset, std::size_t total_degree) {
  std::vector<Point> images(total_degree);
  for (std::size_t i = 0; i < total_degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    images[offset + i] = static_cast<Point>(offset + p.apply(i));
  }
  return Permutation(std::move(images));
}

struct Realization {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::size_t left_generator_count = 0; // generators of all factors but the last
};

Realization realize(const GroupSpec& spec) {
  std::vector<AtomRealization> parts;
  std::size_t total = 0;
  for (const auto& atom : spec.factors) {
    parts.push_back(realize_atom(atom));
    total += parts.back().degree;
  }
  if (total == 0) total = 1; // trivial group still needs a point to act on

  Realization r;
  r.degree = total;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& g : parts[i].generators) {
      r.generators.push_back(embed(g, offset, total));
    }
    offset += parts[i].degree;
    if (i + 1 < parts.size()) r.left_generator_count = r.generators.size();
  }
  return r;
}

} // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty group spec");
  GroupSpec spec;
  if (text.substr(0, 5) == "file:") {
    spec.factors.push_back(File{std::string(text.substr(5))});
    if (std::get<File>(spec.factors[0]).path.empty()) {
      throw ParseError("file spec needs a path");
    }
    return spec;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find('x', start);
    std::string_view token =
        sep == std::string_view::npos ? text.substr(start) : text.substr(start, sep - start);
    spec.factors.push_back(parse_atom(token));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return spec;
}

std::string GroupSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += atom_str(factors[i]);
  }
  return out;
}

FiniteGroup build(const GroupSpec& spec, std::size_t order_cap) {
  return build_entry(spec, order_cap).group;
}

CatalogEntry build_entry(const GroupSpec& spec, std::size_t order_cap) {
  if (spec.factors.size() == 1 && std::holds_alternative<GroupSpec::File>(spec.factors[0])) {
    return load_group_file(std::get<GroupSpec::File>(spec.factors[0]).path, order_cap);
  }

  Realization r = realize(spec);
  FiniteGroup G = close_generators(r.degree, r.generators, order_cap);

  CatalogEntry entry{spec.str(), G, {}};
  const auto& gens = G.generator_ids();
  if (spec.factors.size() >= 2 && !gens.empty()) {
    std::size_t left_count = std::min<std::size_t>(r.left_generator_count, gens.size());
    std::vector<ElementId> left(gens.begin(), gens.begin() + left_count);
    std::vector<ElementId> right(gens.begin() + left_count, gens.end());
    entry.named.emplace_back("left", subgroup_closure(G, left));
    entry.named.emplace_back("right", subgroup_closure(G, right));
  }
  if (!gens.empty()) {
    std::vector<ElementId> first{gens.front()};
    entry.named.emplace_back("x-cyclic", subgroup_closure(G, first));
  }
  return entry;
}

namespace {

Permutation permutation_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw FormatError("permutation must be an image array");
  std::vector<Point> images;
  for (const auto& v : arr) {
    if (!v.is_number_unsigned()) throw FormatError("permutation images must be non-negative");
    images.push_back(v.get<Point>());
  }
  return Permutation(std::move(images));
}

} // namespace

CatalogEntry load_group_file(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open group file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("group file '" + path + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators")) {
    throw FormatError("group file needs 'degree' and 'generators'");
  }
  if (!doc["degree"].is_number_unsigned()) throw FormatError("'degree' must be a non-negative integer");
  std::size_t degree = doc["degree"].get<std::size_t>();
  if (!doc["generators"].is_array()) throw FormatError("'generators' must be an array");

  std::vector<Permutation> gens;
  try {
    for (const auto& g : doc["generators"]) {
      gens.push_back(permutation_from_json(g));
      if (gens.back().degree() != degree) {
        throw FormatError("generator degree does not match 'degree'");
      }
    }
  } catch (const InvalidPermutation& e) {
    throw FormatError("group file '" + path + "': " + e.what());
  }

  FiniteGroup G = close_generators(degree, gens, order_cap);
  CatalogEntry entry{"file:" + path, G, {}};

  if (doc.contains("subsets")) {
    if (!doc["subsets"].is_object()) throw FormatError("'subsets' must be an object");
    // nlohmann::json objects iterate in sorted key order, which keeps the
    // named list deterministic.
    for (const auto& [name, perms] : doc["subsets"].items()) {
      if (!perms.is_array()) throw FormatError("subset '" + name + "' must be an array");
      std::vector<ElementId> seeds;
      for (const auto& parr : perms) {
        Permutation p = [&] {
          try {
            return permutation_from_json(parr);
          } catch (const InvalidPermutation& e) {
            throw FormatError("subset '" + name + "': " + e.what());
          }
        }();
        auto id = G.find(p);
        if (!id) {
          throw NotSubgroupOfGroup("subset '" + name +
                                   "' lists a permutation outside the group");
        }
        seeds.push_back(*id);
      }
      ElementSubset H = subgroup_closure(G, seeds);
      if (!H.is_normal()) {
        throw NotNormal("subset '" + name + "' generates a non-normal subgroup");
      }
      entry.named.emplace_back(name, std::move(H));
    }
  }

  if (!G.generator_ids().empty()) {
    std::vector<ElementId> first{G.generator_ids().front()};
    entry.named.emplace_back("x-cyclic", subgroup_closure(G, first));
  }
  return entry;
}

ElementSubset resolve_normal(const CatalogEntry& entry, const std::string& text) {
  const FiniteGroup& G = entry.group;
  auto verified = [&](ElementSubset H) {
    if (!H.is_subgroup()) throw NotSubgroup("'" + text + "' is not a subgroup");
    if (!H.is_normal()) throw NotNormal("'" + text + "' is not normal in " + entry.label);
    return H;
  };

  for (const auto& [name, subset] : entry.named) {
    if (name == text) return verified(subset);
  }
  if (text == "1" || text == "trivial") return trivial_subgroup(G);
  if (text == "G" || text == "self") return whole_group(G);

  GroupSpec spec = GroupSpec::parse(text); // ParseError propagates
  FiniteGroup H = build(spec, G.order());
  if (!G.permutation_backed() || !H.permutation_backed() || H.degree() != G.degree()) {
    throw NotSubgroupOfGroup("'" + text + "' does not act on the same points as " +
                             entry.label);
  }
  std::vector<ElementId> members;
  for (std::size_t i = 0; i < H.order(); ++i) {
    auto id = G.find(H.permutation_of(static_cast<ElementId>(i)));
    if (!id) {
      throw NotSubgroupOfGroup("'" + text + "' has elements outside " + entry.label);
    }
    members.push_back(*id);
  }
  return verified(ElementSubset(G, std::move(members)));
}

std::string normal_subgroup_name(std::size_t index, std::size_t order) {
  return "N" + std::to_string(index) + "_o" + std::to_string(order);
}

std::vector<CorpusEntry> default_corpus(std::size_t max_order, std::size_t order_cap,
                                        std::size_t lattice_cap,
                                        std::vector<std::string>* warnings) {
  std::vector<std::string> specs;
  for (int n = 1; n <= 24; ++n) specs.push_back("C" + std::to_string(n));
  for (int n = 2; n <= 16; ++n) specs.push_back("D" + std::to_string(2 * n));
  for (const char* s : {"Q8", "S3", "S4", "S5", "A4", "A5", "D16xD8", "D8xC3", "S3xS3",
                        "Q8xC9", "S3xC3", "S3xC4"}) {
    specs.push_back(s);
  }

  std::vector<CorpusEntry> corpus;
  for (const auto& text : specs) {
    FiniteGroup G = build(GroupSpec::parse(text), order_cap);
    if (G.order() > max_order) continue;
    std::vector<ElementSubset> normals;
    try {
      normals = normal_subgroups(G, lattice_cap);
    } catch (const LatticeCapExceeded& e) {
      if (warnings) warnings->push_back("warning: " + text + ": " + e.what());
      continue;
    }
    CorpusEntry entry{text, G, {}};
    for (std::size_t i = 0; i < normals.size(); ++i) {
      entry.normals.emplace_back(normal_subgroup_name(i, normals[i].size()),
                                 std::move(normals[i]));
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

} // namespace hyperclass
