#include "jinv/jinvariant.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "jinv/fp_subspace.hpp"
#include "jinv/integer_matrix.hpp"

namespace jinv {

namespace {

const std::vector<KacPresentation>& bundled_presentations() {
  static const std::vector<KacPresentation> table = {
      {"E6", "adjoint", 3, {1, 4}, {2, 1}},
  };
  return table;
}

std::string upper_type(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

void check_presentation(const KacPresentation& k) {
  if (k.degrees.size() != k.exponents.size())
    throw std::invalid_argument("presentation " + k.type + "/" + k.lattice +
                                ": degrees and exponents differ in length");
  for (int d : k.degrees)
    if (d < 1) throw std::invalid_argument("presentation " + k.type + ": degrees must be >= 1");
  for (int e : k.exponents)
    if (e < 1) throw std::invalid_argument("presentation " + k.type + ": exponents must be >= 1");
  if (!is_prime(k.prime))
    throw std::invalid_argument("presentation " + k.type + ": prime " + std::to_string(k.prime) +
                                " is not prime");
}

std::string format_set(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << '}';
  return os.str();
}

void cut(GeneratorConstraint& g, auto predicate, const std::string& note) {
  const auto before = g.admissible;
  std::erase_if(g.admissible, predicate);
  if (g.admissible != before) g.notes.push_back(note + ": " + format_set(before) + " -> " +
                                                format_set(g.admissible));
}

}  // namespace

std::size_t KacPresentation::degree_one_count() const {
  return static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), 1));
}

std::vector<KacPresentation> load_kac_data(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Kac data file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("Kac data file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("presentations") || !doc["presentations"].is_array())
    throw std::invalid_argument("Kac data file " + path.string() +
                                ": expected an object with a \"presentations\" array");
  std::vector<KacPresentation> out;
  std::size_t pos = 0;
  for (const auto& entry : doc["presentations"]) {
    const std::string where = path.string() + ": presentations[" + std::to_string(pos++) + "]";
    try {
      for (const auto& [key, value] : entry.items()) {
        (void)value;
        if (key != "type" && key != "lattice" && key != "prime" && key != "degrees" &&
            key != "exponents")
          throw std::invalid_argument("unknown key \"" + key + "\"");
      }
      KacPresentation k;
      k.type = upper_type(entry.at("type").get<std::string>());
      k.lattice = entry.at("lattice").get<std::string>();
      k.prime = entry.at("prime").get<std::int64_t>();
      k.degrees = entry.at("degrees").get<std::vector<int>>();
      k.exponents = entry.at("exponents").get<std::vector<int>>();
      check_presentation(k);
      out.push_back(std::move(k));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(where + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  return out;
}

KacPresentation kac_presentation(const std::string& type, const std::string& lattice,
                                 std::int64_t p, std::span<const KacPresentation> user_entries) {
  const std::string t = upper_type(type);
  auto match = [&](const KacPresentation& k) {
    return k.type == t && k.lattice == lattice && k.prime == p;
  };
  for (const auto& k : user_entries)
    if (match(k)) return k;
  for (const auto& k : bundled_presentations())
    if (match(k)) return k;
  throw std::invalid_argument("no Kac presentation for " + t + " (" + lattice + "), p = " +
                              std::to_string(p) +
                              "; supply one with a data file (kac_data) listing degrees and exponents");
}

std::vector<std::size_t> degree1_generators(const CharacterLattice& lattice, std::int64_t p) {
  const auto& factors = lattice.quotient().group().invariant_factors();
  std::vector<std::size_t> comps;
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (factors[k] % p == 0) comps.push_back(k);
  std::vector<std::size_t> chosen;
  if (comps.empty()) return chosen;
  SubspaceBasis span(p, comps.size());
  for (std::size_t i = 0; i < lattice.rank() && !span.full(); ++i) {
    Weight w(lattice.rank());
    w[i] = 1;
    const auto e = lattice.quotient().classify(w);
    std::vector<std::int64_t> v;
    for (auto k : comps) v.push_back(e[k]);
    if (span.insert(v)) chosen.push_back(i);
  }
  return chosen;
}

std::size_t fp_rank(const CharacterLattice& lattice, std::int64_t p) {
  const auto& factors = lattice.quotient().group().invariant_factors();
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [p](std::int64_t d) { return d % p == 0; }));
}

int weighted_degree(std::span<const int> m, const KacPresentation& pres) {
  if (m.size() != pres.r())
    throw std::invalid_argument("exponent tuple has length " + std::to_string(m.size()) +
                                ", presentation has " + std::to_string(pres.r()) + " generators");
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += pres.degrees[i] * m[i];
  return d;
}

std::strong_ordering deglex_compare(std::span<const int> m, std::span<const int> n,
                                    const KacPresentation& pres) {
  const int dm = weighted_degree(m, pres);
  const int dn = weighted_degree(n, pres);
  if (dm != dn) return dm <=> dn;
  for (std::size_t i = m.size(); i-- > 0;)
    if (m[i] != n[i]) return m[i] <=> n[i];
  return std::strong_ordering::equal;
}

CommonIndexReport common_index(const BrauerModel& model, const RootSystem& rs,
                               const CharacterLattice& lattice) {
  const auto gens = degree1_generators(lattice, model.prime());
  return common_index(model, rs, gens);
}

JConstraint j1_constraints(const BrauerModel& model, const RootSystem& rs,
                           const CharacterLattice& lattice, const KacPresentation& pres) {
  require_valid(model);
  require_compatible(model, rs);
  check_presentation(pres);
  const std::int64_t p = model.prime();
  if (pres.prime != p)
    throw std::invalid_argument("presentation is for p = " + std::to_string(pres.prime) +
                                ", model for p = " + std::to_string(p));
  const auto gens = degree1_generators(lattice, p);
  if (pres.degree_one_count() != gens.size())
    throw std::invalid_argument("presentation has " + std::to_string(pres.degree_one_count()) +
                                " degree-one generators but Lambda/T* (x) F_" + std::to_string(p) +
                                " has dimension " + std::to_string(gens.size()));

  JConstraint out;
  out.common = common_index(model, rs, gens);
  for (auto ind : model.indices()) out.max_tits_valuation = std::max(out.max_tits_valuation, vp(ind, p));

  std::size_t next_weight = 0;
  for (std::size_t l = 0; l < pres.r(); ++l) {
    GeneratorConstraint g;
    g.generator = l;
    g.degree = pres.degrees[l];
    g.exponent = pres.exponents[l];
    for (int j = 0; j <= g.exponent; ++j) g.admissible.push_back(j);
    g.notes.push_back("range 0.." + std::to_string(g.exponent) + " from the relation x^(p^k)");
    if (g.degree == 1) {
      g.weight = gens[next_weight++];
      g.tits_valuation = vp(tits_index(model, rs, rs.fundamental_weight(*g.weight)), p);
    }
    out.generators.push_back(std::move(g));
  }

  if (!out.common.defined) {
    out.vacuous = true;
    out.vacuous_reason = "no degree-one generators; common index undefined";
    return out;
  }

  const int v = out.common.v_p;
  for (auto& g : out.generators) {
    if (g.degree != 1) continue;
    const int bound = std::min(g.exponent, g.tits_valuation);
    cut(g, [bound](int j) { return j > bound; },
        "tits-index bound j <= min(k, v_p(ind A(omega_" + std::to_string(*g.weight + 1) +
            "))) = " + std::to_string(bound));
    for (int m = 0; m <= 1; ++m) {
      if (v > m && g.exponent > m)
        cut(g, [m](int j) { return j <= m; },
            "common-index bound v_p(i_c) = " + std::to_string(v) + " > " + std::to_string(m) +
                " forces j > " + std::to_string(m));
    }
  }

  if (out.max_tits_valuation > 0) {
    std::vector<GeneratorConstraint*> candidates;
    for (auto& g : out.generators)
      if (g.degree == 1 && g.admissible.back() > 0) candidates.push_back(&g);
    if (candidates.empty())
      throw std::logic_error("a Tits algebra of index divisible by p exists but no degree-one "
                             "generator admits j > 0");
    if (candidates.size() == 1)
      cut(*candidates.front(), [](int j) { return j == 0; },
          "non-split Tits algebra needs some j > 0; this generator is the only candidate");
  }

  for (const auto& g : out.generators)
    if (g.admissible.empty())
      throw std::logic_error("constraints on generator " + std::to_string(g.generator + 1) +
                             " are inconsistent");
  return out;
}

IdealComparisonReport compare_ideals(const Workspace& ws, const BrauerModel& model,
                                const CharacterLattice& lattice, std::int64_t p, int max_degree) {
  require_valid(model);
  const RootSystem& rs = ws.root_system();
  require_compatible(model, rs);
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));

  IdealComparisonReport report;
  report.prime = p;
  report.common = common_index(model, rs, lattice);
  const int v = report.common.defined ? report.common.v_p : 0;
  report.split_on_lattice = split_on_lattice(model, lattice);
  report.premise = v > 1 ? "v_p(i_c) > 1" : v > 0 ? "v_p(i_c) > 0" : "vacuous";

  int top = std::min<std::int64_t>(p, ws.chow().max_degree());
  if (max_degree >= 1) top = std::min(top, max_degree);
  for (int m = 1; m <= top; ++m) {
    DegreeComparison d;
    d.m = m;
    d.applicable = m == 1 ? v > 0 : v > 1;
    const auto ideal = ws.chow().ideal_I_degree(lattice, m, p);
    const auto ideal_xi = ws.gamma().ideal_Ixi_degree(m, model, lattice, p);
    d.ambient_dim = ideal.ambient_dim();
    d.dim_I = ideal.dim();
    d.dim_Ixi = ideal_xi.dim();
    d.contains = ideal.is_subspace_of(ideal_xi);
    d.equal = ideal == ideal_xi;
    if (d.applicable && !d.equal) report.verified = false;
    report.degrees.push_back(d);
  }
  return report;
}

}  // namespace jinv
