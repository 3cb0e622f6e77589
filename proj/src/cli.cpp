#include "jinv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jinv/brauer.hpp"
#include "jinv/formal_bundles.hpp"
#include "jinv/integer_matrix.hpp"
#include "jinv/jinvariant.hpp"
#include "jinv/k_gamma.hpp"
#include "jinv/rootdata.hpp"
#include "jinv/schubert.hpp"

namespace jinv::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Report {
  Json body = Json::object();
  std::vector<std::string> header;  // tabular view for tsv output
  std::vector<std::vector<std::string>> rows;
  int exit_code = 0;
};

// ---------------------------------------------------------------- rendering

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string join_flat(const Json& v, const char* sep) {
  std::string s;
  bool first = true;
  for (const auto& x : v) {
    if (!first) s += sep;
    s += scalar_text(x);
    first = false;
  }
  return s;
}

void render_pretty(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_primitive()) {
        os << pad << key << ": " << scalar_text(v) << '\n';
      } else if (is_flat_array(v)) {
        os << pad << key << ": [" << join_flat(v, ", ") << "]\n";
      } else if (v.empty()) {
        os << pad << key << ": {}\n";
      } else {
        os << pad << key << ":\n";
        render_pretty(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << pad << "- " << scalar_text(v) << '\n';
      } else if (is_flat_array(v)) {
        os << pad << "- [" << join_flat(v, ", ") << "]\n";
      } else {
        os << pad << "-\n";
        render_pretty(v, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

std::string tsv_cell(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void flatten_tsv(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_primitive()) {
    os << path << '\t' << tsv_cell(scalar_text(j)) << '\n';
  } else if (is_flat_array(j)) {
    os << path << '\t' << tsv_cell(join_flat(j, ",")) << '\n';
  } else if (j.is_object()) {
    for (const auto& [key, v] : j.items()) flatten_tsv(v, path.empty() ? key : path + "." + key, os);
  } else {
    std::size_t i = 0;
    for (const auto& v : j) flatten_tsv(v, path + "[" + std::to_string(i++) + "]", os);
  }
}

void render(const Report& r, OutputFormat format, std::ostream& os) {
  switch (format) {
    case OutputFormat::json:
      os << r.body.dump(2) << '\n';
      break;
    case OutputFormat::pretty:
      render_pretty(r.body, os, 0);
      break;
    case OutputFormat::tsv:
      if (r.header.empty()) {
        flatten_tsv(r.body, "", os);
      } else {
        for (std::size_t i = 0; i < r.header.size(); ++i) os << (i ? "\t" : "") << r.header[i];
        os << '\n';
        for (const auto& row : r.rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << tsv_cell(row[i]);
          os << '\n';
        }
      }
      break;
  }
}

// ------------------------------------------------------------ scenario data

RootSystem make_root_system(const ScenarioConfig& cfg) {
  if (!cfg.type) throw UsageError("a Dynkin type is required (--type or \"type\" in the config)");
  return RootSystem::parse(*cfg.type);
}

CharacterLattice make_lattice(const RootSystem& rs, const std::string& name) {
  if (name == "adjoint") return CharacterLattice::adjoint(rs);
  if (name == "simply_connected" || name == "sc") return CharacterLattice::simply_connected(rs);
  const std::string prefix = "subgroup:";
  if (name.rfind(prefix, 0) == 0) {
    const std::size_t order = rs.fundamental_group().group().order();
    std::vector<std::size_t> labels;
    std::stringstream ss(name.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(item, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (item.empty() || pos != item.size())
        throw UsageError("lattice: malformed element label \"" + item + "\"");
      if (v >= order)
        throw UsageError("lattice: label " + item + " is not an element of " +
                         rs.fundamental_group().group().describe());
      labels.push_back(v);
    }
    return CharacterLattice::from_subgroup(rs, labels);
  }
  throw UsageError("lattice: expected adjoint, simply_connected or subgroup:<labels>, got \"" + name +
                   "\"");
}

BrauerModel make_model(const RootSystem& rs, const ScenarioConfig& cfg) {
  const auto& group = rs.fundamental_group().group();
  std::optional<BrauerModel> model;
  if (cfg.uniform_index) {
    model = BrauerModel::uniform(group, cfg.prime, *cfg.uniform_index);
  } else if (cfg.ind_map) {
    for (const auto& [label, ind] : *cfg.ind_map) {
      (void)ind;
      if (label >= group.order())
        throw UsageError("brauer.ind: label " + std::to_string(label) + " is not an element of " +
                         group.describe());
    }
    std::vector<std::int64_t> ind(group.order());
    for (std::size_t label = 0; label < group.order(); ++label) {
      auto it = cfg.ind_map->find(label);
      if (it == cfg.ind_map->end())
        throw UsageError("brauer.ind: missing label " + std::to_string(label));
      ind[label] = it->second;
    }
    model.emplace(group, std::move(ind), cfg.prime);
  } else {
    model = BrauerModel::split(group, cfg.prime);
  }
  const auto problems = validate(*model);
  if (!problems.empty()) {
    std::string msg = "brauer.ind violates the index axioms:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw UsageError(msg);
  }
  return *model;
}

Json weight_json(const Weight& w) { return Json(w.coords); }

Json model_json(const BrauerModel& model) {
  Json j;
  j["group"] = model.group().describe();
  Json ind = Json::object();
  for (std::size_t l = 0; l < model.indices().size(); ++l) ind[std::to_string(l)] = model.ind(l);
  j["ind"] = ind;
  return j;
}

Json common_json(const CommonIndexReport& c) {
  Json j;
  j["defined"] = c.defined;
  if (!c.defined) {
    j["reason"] = "no degree-one generators; common index undefined";
    return j;
  }
  j["i_c"] = c.i_c;
  j["v_p"] = c.v_p;
  j["witness"] = c.witness;
  j["tuples"] = c.tuples_considered;
  return j;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x + 1);
  return a;
}

std::string element_word(const WeylGroup& g, std::size_t idx) { return word_to_string(g[idx].word); }

Json scenario_json(const ScenarioConfig& cfg, const RootSystem& rs, const CharacterLattice& lattice) {
  Json j;
  j["type"] = rs.name();
  j["lattice"] = lattice.name();
  j["prime"] = cfg.prime;
  return j;
}

Json subspace_rows(const SubspaceBasis& s) {
  Json a = Json::array();
  for (const auto& r : s.rows()) a.push_back(r);
  return a;
}

// ----------------------------------------------------------------- commands

Report cmd_rootinfo(const ScenarioConfig& cfg) {
  const RootSystem rs = make_root_system(cfg);
  const CharacterLattice lattice = make_lattice(rs, cfg.lattice);
  Report r;
  r.body["type"] = rs.name();
  r.body["rank"] = rs.rank();
  Json cartan = Json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const auto row = rs.cartan().row(i);
    cartan.push_back(std::vector<std::int64_t>(row.begin(), row.end()));
  }
  r.body["cartan"] = cartan;
  r.body["positive_roots"] = rs.positive_roots().size();
  r.body["highest_root"] = weight_json(rs.positive_roots().back().weight);
  r.body["fundamental_degrees"] = rs.fundamental_degrees();
  r.body["weyl_order"] = rs.weyl_order();

  const auto& pi = rs.fundamental_group();
  Json fg;
  fg["structure"] = pi.group().describe();
  fg["order"] = pi.group().order();
  Json elems = Json::array();
  for (std::size_t l = 0; l < pi.group().order(); ++l) {
    Json e;
    e["label"] = l;
    e["residues"] = pi.group().element(l);
    std::vector<std::size_t> weights;
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (pi.group().label(pi.classify(rs.fundamental_weight(i))) == l) weights.push_back(i);
    e["fundamental_weights"] = one_based(weights);
    elems.push_back(e);
  }
  fg["elements"] = elems;
  r.body["fundamental_group"] = fg;

  Json lat;
  lat["name"] = lattice.name();
  Json basis = Json::array();
  for (const auto& b : lattice.basis()) basis.push_back(weight_json(b));
  lat["basis"] = basis;
  lat["quotient"] = lattice.quotient().group().describe();
  lat["prime"] = cfg.prime;
  lat["fp_rank"] = fp_rank(lattice, cfg.prime);
  lat["degree1_generators"] = one_based(degree1_generators(lattice, cfg.prime));
  r.body["lattice"] = lat;
  return r;
}

Report cmd_weyl(const ScenarioConfig& cfg) {
  const RootSystem rs = make_root_system(cfg);
  const WeylGroup g = WeylGroup::enumerate(rs, -1, cfg.guard);
  const auto counts = g.count_by_length();
  Report r;
  r.body["type"] = rs.name();
  r.body["order"] = g.size();
  r.body["degree_product"] = rs.weyl_order();
  r.body["max_length"] = g.max_length();
  r.body["longest_element"] = element_word(g, g.size() - 1);
  if (cfg.count_by_length) {
    r.body["count_by_length"] = counts;
    r.header = {"length", "count"};
    for (std::size_t l = 0; l < counts.size(); ++l)
      r.rows.push_back({std::to_string(l), std::to_string(counts[l])});
  }
  return r;
}

Report cmd_chow(const ScenarioConfig& cfg) {
  if (!cfg.degree) throw UsageError("chow needs --degree");
  const int m = *cfg.degree;
  if (m < 0) throw UsageError("degree must be >= 0");
  const RootSystem rs = make_root_system(cfg);
  const SchubertCalculus chow(rs, cfg.products ? m + 1 : m);
  const auto& g = chow.weyl();
  const auto basis = chow.basis(m);
  Report r;
  r.body["type"] = rs.name();
  r.body["degree"] = m;
  r.body["dimension"] = basis.size();
  if (cfg.basis) {
    Json b = Json::array();
    for (auto u : basis) b.push_back(element_word(g, u));
    r.body["basis"] = b;
    r.header = {"index", "class"};
    for (std::size_t k = 0; k < basis.size(); ++k)
      r.rows.push_back({std::to_string(k), element_word(g, basis[k])});
  }
  if (cfg.products) {
    Json prods = Json::array();
    r.header = {"class", "divisor", "term", "coefficient"};
    r.rows.clear();
    for (auto u : basis) {
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const auto result = chow.chevalley_multiply(chow.schubert(u), rs.fundamental_weight(i));
        Json terms = Json::array();
        for (const auto& [w, c] : result.terms) {
          Json t;
          t["class"] = element_word(g, w);
          t["coefficient"] = c;
          terms.push_back(t);
          r.rows.push_back({element_word(g, u), "h" + std::to_string(i + 1), element_word(g, w),
                            std::to_string(c)});
        }
        Json p;
        p["class"] = element_word(g, u);
        p["divisor"] = "h" + std::to_string(i + 1);
        p["result"] = terms;
        prods.push_back(p);
      }
    }
    r.body["products"] = prods;
  }
  return r;
}

Report cmd_steinberg(const ScenarioConfig& cfg) {
  const RootSystem rs = make_root_system(cfg);
  const BrauerModel model = make_model(rs, cfg);
  const WeylGroup g = WeylGroup::enumerate(rs, -1, cfg.guard);
  const SteinbergTable table(g);
  const auto& pi = rs.fundamental_group().group();
  Report r;
  r.body["type"] = rs.name();
  r.body["model"] = model_json(model);
  r.header = {"element", "rho", "class", "index"};
  Json entries = Json::array();
  for (const auto& e : table.entries()) {
    const std::size_t label = pi.label(e.brauer_class);
    Json j;
    j["element"] = element_word(g, e.element);
    j["rho"] = weight_json(e.rho);
    j["class"] = label;
    j["index"] = model.ind(label);
    entries.push_back(j);
    r.rows.push_back({element_word(g, e.element), to_string(e.rho), std::to_string(label),
                      std::to_string(model.ind(label))});
  }
  r.body["entries"] = entries;
  return r;
}

Report cmd_restriction_image(const ScenarioConfig& cfg) {
  if (!cfg.degree) throw UsageError("restriction-image needs --degree");
  const int m = *cfg.degree;
  if (m < 1 || m > cfg.prime)
    throw UsageError("degree must satisfy 1 <= m <= p (the factor (m-1)! must be a unit mod p)");
  const RootSystem rs = make_root_system(cfg);
  const CharacterLattice lattice = make_lattice(rs, cfg.lattice);
  const BrauerModel model = make_model(rs, cfg);
  Workspace ws(rs, m, cfg.guard);
  const auto image = ws.gamma().restriction_image_degree(m, model, lattice, cfg.prime);
  const auto ideal = ws.chow().ideal_I_degree(lattice, m, cfg.prime);
  const auto ideal_xi = ws.gamma().ideal_Ixi_degree(m, model, lattice, cfg.prime);

  Report r;
  r.body = scenario_json(cfg, rs, lattice);
  r.body["degree"] = m;
  r.body["model"] = model_json(model);
  Json basis_words = Json::array();
  for (auto u : ws.chow().basis(m)) basis_words.push_back(element_word(ws.chow().weyl(), u));
  r.body["schubert_basis"] = basis_words;
  r.body["ambient_dimension"] = image.ambient_dim();
  r.body["dimension"] = image.dim();
  r.body["basis"] = subspace_rows(image);
  r.body["ideal_I_dimension"] = ideal.dim();
  r.body["ideal_Ixi_dimension"] = ideal_xi.dim();
  r.body["ideal_Ixi_contains_I"] = ideal.is_subspace_of(ideal_xi);
  return r;
}

// Index of the degree-27 Tits algebra against the stated E6 equivalences.
std::optional<Json> e6_table_check(const BrauerModel& model, const RootSystem& rs,
                                   const CharacterLattice& lattice, const JConstraint& jc) {
  if (rs.name() != "E6" || lattice.name() != "adjoint" || model.prime() != 3) return std::nullopt;
  const std::int64_t ind = tits_index(model, rs, rs.fundamental_weight(0));
  Json j;
  j["ind_A"] = ind;
  std::vector<int> expected;
  if (ind == 1) expected = {0};
  else if (ind == 3) expected = {1};
  else if (ind == 9 || ind == 27) expected = {2};
  const auto& derived = jc.generators.front().admissible;
  j["derived_j1"] = derived;
  if (expected.empty()) {
    j["expected_j1"] = nullptr;
    j["match"] = nullptr;
  } else {
    j["expected_j1"] = expected;
    j["match"] = derived == expected;
  }
  return j;
}

Report cmd_jconstrain(const ScenarioConfig& cfg) {
  const RootSystem rs = make_root_system(cfg);
  const CharacterLattice lattice = make_lattice(rs, cfg.lattice);
  const BrauerModel model = make_model(rs, cfg);
  std::vector<KacPresentation> user;
  if (cfg.kac_data) user = load_kac_data(*cfg.kac_data);
  const KacPresentation pres = kac_presentation(rs.name(), lattice.name(), cfg.prime, user);
  const JConstraint jc = j1_constraints(model, rs, lattice, pres);

  Report r;
  r.body = scenario_json(cfg, rs, lattice);
  r.body["model"] = model_json(model);
  Json pj;
  pj["degrees"] = pres.degrees;
  pj["exponents"] = pres.exponents;
  r.body["presentation"] = pj;
  r.body["degree1_generators"] = one_based(jc.common.generators);
  r.body["common_index"] = common_json(jc.common);
  r.body["max_tits_valuation"] = jc.max_tits_valuation;
  r.body["vacuous"] = jc.vacuous;
  if (jc.vacuous) r.body["vacuous_reason"] = jc.vacuous_reason;
  Json gens = Json::array();
  r.header = {"generator", "degree", "exponent", "weight", "admissible"};
  for (const auto& g : jc.generators) {
    Json j;
    j["generator"] = g.generator + 1;
    j["degree"] = g.degree;
    j["exponent"] = g.exponent;
    if (g.weight) {
      j["weight"] = "omega_" + std::to_string(*g.weight + 1);
      j["tits_valuation"] = g.tits_valuation;
    }
    j["admissible"] = g.admissible;
    j["notes"] = g.notes;
    gens.push_back(j);
    std::string adm;
    for (std::size_t i = 0; i < g.admissible.size(); ++i)
      adm += (i ? "," : "") + std::to_string(g.admissible[i]);
    r.rows.push_back({std::to_string(g.generator + 1), std::to_string(g.degree),
                      std::to_string(g.exponent),
                      g.weight ? "omega_" + std::to_string(*g.weight + 1) : "-", adm});
  }
  r.body["generators"] = gens;
  if (!jc.vacuous) {
    if (auto check = e6_table_check(model, rs, lattice, jc)) {
      r.body["e6_table_check"] = *check;
      if ((*check)["match"].is_boolean() && !(*check)["match"].get<bool>()) r.exit_code = 1;
    }
  }
  return r;
}

Report cmd_verify_theorem(const ScenarioConfig& cfg) {
  const RootSystem rs = make_root_system(cfg);
  const CharacterLattice lattice = make_lattice(rs, cfg.lattice);
  const BrauerModel model = make_model(rs, cfg);
  const int top = static_cast<int>(cfg.max_degree ? *cfg.max_degree : cfg.prime);
  Workspace ws(rs, top, cfg.guard);
  const IdealComparisonReport t = compare_ideals(ws, model, lattice, cfg.prime, top);

  Report r;
  r.body = scenario_json(cfg, rs, lattice);
  r.body["model"] = model_json(model);
  r.body["common_index"] = common_json(t.common);
  r.body["premise"] = t.premise;
  r.body["split_on_lattice"] = t.split_on_lattice;
  Json degrees = Json::array();
  r.header = {"m", "applicable", "ambient", "dim_I", "dim_Ixi", "verdict"};
  for (const auto& d : t.degrees) {
    Json j;
    j["m"] = d.m;
    j["applicable"] = d.applicable;
    j["ambient_dimension"] = d.ambient_dim;
    j["dim_I"] = d.dim_I;
    j["dim_Ixi"] = d.dim_Ixi;
    j["I_in_Ixi"] = d.contains;
    j["verdict"] = d.equal ? "equal" : "unequal";
    degrees.push_back(j);
    r.rows.push_back({std::to_string(d.m), d.applicable ? "yes" : "no", std::to_string(d.ambient_dim),
                      std::to_string(d.dim_I), std::to_string(d.dim_Ixi),
                      d.equal ? "equal" : "unequal"});
  }
  r.body["degrees"] = degrees;
  r.body["verified"] = t.verified;
  if (!t.verified) r.exit_code = 1;
  return r;
}

std::vector<formal::Exponents> unit_lines(std::size_t n) {
  std::vector<formal::Exponents> out;
  for (std::size_t j = 0; j < n; ++j) {
    formal::Exponents e(n, 0);
    e[j] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<formal::Exponents> compound_lines() {
  return {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {-1, 0, 0}, {2, 0, -1}, {0, -1, 1}};
}

Report cmd_oracle(const ScenarioConfig& cfg) {
  Report r;
  r.body["verify"] = cfg.verify;
  bool all = true;
  Json rows = Json::array();
  if (cfg.verify == "firsteq") {
    const int max_i = cfg.max_i > 0 ? cfg.max_i : 5;
    r.header = {"i", "n", "result"};
    for (int i = 1; i <= max_i; ++i) {
      for (int n = i; n <= std::max(6, i); ++n) {
        const bool ok = formal::verify_firsteq(i, n);
        all = all && ok;
        Json j;
        j["i"] = i;
        j["n"] = n;
        j["coefficient"] = formal::gamma_chern_factor(i).str();
        j["result"] = ok ? "pass" : "fail";
        rows.push_back(j);
        r.rows.push_back({std::to_string(i), std::to_string(n), ok ? "pass" : "fail"});
      }
    }
  } else if (cfg.verify == "gammatoc") {
    const int max_i = cfg.max_i > 0 ? cfg.max_i : 4;
    r.header = {"family", "i", "cases", "passed"};
    const std::vector<std::pair<std::string, std::vector<formal::Exponents>>> families = {
        {"independent", unit_lines(6)}, {"compound", compound_lines()}};
    for (const auto& [name, lines] : families) {
      const auto patterns = formal::multiplicity_patterns(lines, 3);
      for (int i = 1; i <= max_i; ++i) {
        std::size_t passed = 0;
        for (const auto& x : patterns) passed += formal::verify_gammatoc(x, i) ? 1 : 0;
        all = all && passed == patterns.size();
        Json j;
        j["family"] = name;
        j["i"] = i;
        j["cases"] = patterns.size();
        j["passed"] = passed;
        rows.push_back(j);
        r.rows.push_back({name, std::to_string(i), std::to_string(patterns.size()), std::to_string(passed)});
      }
    }
  } else if (cfg.verify == "binomial") {
    const int max_i = cfg.max_i > 0 ? cfg.max_i : 6;
    r.header = {"i_w", "coefficients", "result"};
    for (int iw = 1; iw <= max_i; ++iw) {
      const auto e = formal::binomial_gamma_expansion(iw, iw);
      all = all && e.verified;
      Json coeffs = Json::array();
      std::string text;
      for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
        coeffs.push_back(e.coefficients[k].str());
        text += (k ? "," : "") + e.coefficients[k].str();
      }
      Json j;
      j["i_w"] = iw;
      j["coefficients"] = coeffs;
      j["result"] = e.verified ? "pass" : "fail";
      rows.push_back(j);
      r.rows.push_back({std::to_string(iw), text, e.verified ? "pass" : "fail"});
    }
  } else {
    throw UsageError("oracle needs --verify firsteq|gammatoc|binomial");
  }
  r.body["rows"] = rows;
  r.body["all_passed"] = all;
  if (!all) r.exit_code = 1;
  return r;
}

// ------------------------------------------------------------ config files

std::int64_t json_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw UsageError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::string json_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw UsageError(where + ": expected a string");
  return v.get<std::string>();
}

std::map<std::size_t, std::int64_t> parse_ind_map(const Json& v, const std::string& where) {
  if (!v.is_object()) throw UsageError(where + ": expected an object mapping labels to indices");
  std::map<std::size_t, std::int64_t> out;
  for (const auto& [key, value] : v.items()) {
    std::size_t pos = 0;
    unsigned long label = 0;
    try {
      label = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (key.empty() || pos != key.size() || !std::isdigit(static_cast<unsigned char>(key[0])))
      throw UsageError(where + ": label \"" + key + "\" is not a non-negative integer");
    const std::int64_t ind = json_int(value, where + "." + key);
    if (ind < 1) throw UsageError(where + "." + key + ": index must be a positive integer");
    out[label] = ind;
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "tsv") return OutputFormat::tsv;
  if (s == "pretty") return OutputFormat::pretty;
  throw UsageError("format: expected json, tsv or pretty, got \"" + s + "\"");
}

void apply_config_json(const std::string& text, const std::string& source, ScenarioConfig& cfg) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(source + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError(source + ": top level must be an object");
  for (const auto& [key, v] : doc.items()) {
    const std::string where = source + ": field \"" + key + "\"";
    if (key == "type") {
      cfg.type = json_string(v, where);
    } else if (key == "lattice") {
      cfg.lattice = json_string(v, where);
    } else if (key == "prime") {
      cfg.prime = json_int(v, where);
    } else if (key == "format") {
      cfg.format = parse_format(json_string(v, where));
    } else if (key == "degree") {
      cfg.degree = static_cast<int>(json_int(v, where));
    } else if (key == "max_degree") {
      cfg.max_degree = static_cast<int>(json_int(v, where));
    } else if (key == "kac_data") {
      cfg.kac_data = json_string(v, where);
    } else if (key == "brauer") {
      if (!v.is_object()) throw UsageError(where + ": expected an object");
      for (const auto& [bkey, bv] : v.items()) {
        if (bkey != "ind") throw UsageError(source + ": unknown key \"brauer." + bkey + "\"");
        cfg.ind_map = parse_ind_map(bv, source + ": field \"brauer.ind\"");
      }
    } else {
      throw UsageError(source + ": unknown key \"" + key + "\"");
    }
  }
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  ScenarioConfig cfg;
  apply_config_json(ss.str(), path.string(), cfg);
  if (cfg.kac_data && std::filesystem::path(*cfg.kac_data).is_relative())
    cfg.kac_data = (path.parent_path() / *cfg.kac_data).string();
  return cfg;
}

void validate_config(const ScenarioConfig& cfg) {
  if (!is_prime(cfg.prime)) throw UsageError("p must be prime, got " + std::to_string(cfg.prime));
  if (cfg.degree && *cfg.degree < 0) throw UsageError("degree must be non-negative");
  if (cfg.max_degree && (*cfg.max_degree < 1 || *cfg.max_degree > cfg.prime))
    throw UsageError("max_degree must satisfy 1 <= max_degree <= p");
  if (cfg.uniform_index && *cfg.uniform_index < 1) throw UsageError("--index must be positive");
  if (cfg.ind_map)
    for (const auto& [label, ind] : *cfg.ind_map)
      if (ind < 1) throw UsageError("brauer.ind." + std::to_string(label) + ": index must be positive");
  if (cfg.guard == 0) throw UsageError("--guard must be positive");
}

int run(const ScenarioConfig& cfg, std::ostream& out) {
  validate_config(cfg);
  Report r;
  if (cfg.command == "rootinfo") r = cmd_rootinfo(cfg);
  else if (cfg.command == "weyl") r = cmd_weyl(cfg);
  else if (cfg.command == "chow") r = cmd_chow(cfg);
  else if (cfg.command == "steinberg") r = cmd_steinberg(cfg);
  else if (cfg.command == "restriction-image") r = cmd_restriction_image(cfg);
  else if (cfg.command == "jconstrain") r = cmd_jconstrain(cfg);
  else if (cfg.command == "verify-theorem") r = cmd_verify_theorem(cfg);
  else if (cfg.command == "oracle") r = cmd_oracle(cfg);
  else throw UsageError("unknown command \"" + cfg.command + "\"");
  render(r, cfg.format, out);
  return r.exit_code;
}

namespace {

struct Flags {
  std::optional<std::string> config, type, lattice, format, kac_data, verify;
  std::optional<std::int64_t> prime, index;
  std::optional<int> degree, max_degree, max_i;
  std::optional<std::size_t> guard;
  bool no_banner = false, count_by_length = false, basis = false, products = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON scenario file; flags override its values");
  sub->add_option("--type", f.type, "Dynkin type, e.g. E6, A2, B3");
  sub->add_option("--lattice", f.lattice, "adjoint, simply_connected or subgroup:<labels>");
  sub->add_option("--prime,-p", f.prime, "coefficient prime (default 3)");
  sub->add_option("--index", f.index, "Tits index assigned to every non-identity class");
  sub->add_option("--format", f.format, "json, tsv or pretty (default pretty)");
  sub->add_option("--guard", f.guard, "largest Weyl group to enumerate in full");
  sub->add_flag("--no-banner", f.no_banner, "suppress the version banner");
}

ScenarioConfig build_config(const std::string& command, const Flags& f) {
  ScenarioConfig cfg = f.config ? load_config(*f.config) : ScenarioConfig{};
  cfg.command = command;
  if (f.type) cfg.type = *f.type;
  if (f.lattice) cfg.lattice = *f.lattice;
  if (f.prime) cfg.prime = *f.prime;
  if (f.index) {
    cfg.uniform_index = *f.index;
    cfg.ind_map.reset();
  }
  if (f.format) cfg.format = parse_format(*f.format);
  if (f.kac_data) cfg.kac_data = *f.kac_data;
  if (f.degree) cfg.degree = *f.degree;
  if (f.max_degree) cfg.max_degree = *f.max_degree;
  if (f.guard) cfg.guard = *f.guard;
  if (f.verify) cfg.verify = *f.verify;
  if (f.max_i) cfg.max_i = *f.max_i;
  cfg.no_banner = f.no_banner;
  cfg.count_by_length = f.count_by_length;
  cfg.basis = f.basis;
  cfg.products = f.products;
  return cfg;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root data, Schubert calculus and J-invariant constraints for torsors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Flags f;

  auto* rootinfo = app.add_subcommand("rootinfo", "Cartan matrix, fundamental group and lattice data");
  add_common(rootinfo, f);

  auto* weyl = app.add_subcommand("weyl", "Enumerate the Weyl group");
  add_common(weyl, f);
  weyl->add_flag("--count-by-length", f.count_by_length, "number of elements of each length");

  auto* chow = app.add_subcommand("chow", "Schubert basis and Chevalley products of CH^m(G/B)");
  add_common(chow, f);
  chow->add_option("--degree,-m", f.degree, "Chow degree")->required();
  chow->add_flag("--basis", f.basis, "list the Schubert basis");
  chow->add_flag("--products", f.products, "Chevalley products with the divisors h_i");

  auto* steinberg = app.add_subcommand("steinberg", "Steinberg weights with their Tits indices");
  add_common(steinberg, f);

  auto* restriction = app.add_subcommand("restriction-image", "Image of the restriction in CH^m mod p");
  add_common(restriction, f);
  restriction->add_option("--degree,-m", f.degree, "degree m, 1 <= m <= p")->required();

  auto* jconstrain = app.add_subcommand("jconstrain", "Constraints on the degree-one J-invariant");
  add_common(jconstrain, f);
  jconstrain->add_option("--kac-data", f.kac_data, "JSON file with Kac presentations");

  auto* verify = app.add_subcommand("verify-theorem", "Compare I_xi with I in degrees 1..p");
  add_common(verify, f);
  verify->add_option("--max-degree", f.max_degree, "highest degree to compare (<= p)");

  auto* oracle = app.add_subcommand("oracle", "Formal-bundle identity checks");
  add_common(oracle, f);
  oracle->add_option("--verify", f.verify, "firsteq, gammatoc or binomial")
      ->required()
      ->check(CLI::IsMember({"firsteq", "gammatoc", "binomial"}));
  oracle->add_option("--max-i", f.max_i, "largest i to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const auto subs = app.get_subcommands();
  const std::string command = subs.front()->get_name();
  try {
    const ScenarioConfig cfg = build_config(command, f);
    if (!cfg.no_banner) err << "jinv " << kVersion << '\n';
    return run(cfg, out);
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace jinv::cli
