#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jinv/brauer.hpp"
#include "jinv/k_gamma.hpp"
#include "jinv/rootdata.hpp"

namespace jinv {

// Ch(G) = F_p[x_1..x_r] / (x_l^{p^{k_l}}) with deg x_l = d_l.
struct KacPresentation {
  std::string type;     // e.g. "E6"
  std::string lattice;  // lattice name, e.g. "adjoint"
  std::int64_t prime = 0;
  std::vector<int> degrees;
  std::vector<int> exponents;

  std::size_t r() const { return degrees.size(); }
  std::size_t degree_one_count() const;
};

// Reads {"presentations": [{"type", "lattice", "prime", "degrees", "exponents"}, ...]}.
std::vector<KacPresentation> load_kac_data(const std::filesystem::path& path);

// User entries take precedence over the bundled table.
KacPresentation kac_presentation(const std::string& type, const std::string& lattice,
                                 std::int64_t p, std::span<const KacPresentation> user_entries = {});

// Smallest-index omega_i whose classes form a basis of Lambda/T* (x) F_p.
std::vector<std::size_t> degree1_generators(const CharacterLattice& lattice, std::int64_t p);
std::size_t fp_rank(const CharacterLattice& lattice, std::int64_t p);

int weighted_degree(std::span<const int> m, const KacPresentation& pres);
std::strong_ordering deglex_compare(std::span<const int> m, std::span<const int> n,
                                    const KacPresentation& pres);

struct GeneratorConstraint {
  std::size_t generator = 0;  // position in the presentation
  int degree = 0;
  int exponent = 0;           // k_l
  std::optional<std::size_t> weight;  // omega_{i_l} for degree-one generators
  int tits_valuation = 0;     // v_p(ind A(omega_{i_l}))
  std::vector<int> admissible;
  std::vector<std::string> notes;
};

struct JConstraint {
  bool vacuous = false;
  std::string vacuous_reason;
  CommonIndexReport common;
  int max_tits_valuation = 0;  // max over all Tits algebras
  std::vector<GeneratorConstraint> generators;
};

JConstraint j1_constraints(const BrauerModel& model, const RootSystem& rs,
                           const CharacterLattice& lattice, const KacPresentation& pres);

CommonIndexReport common_index(const BrauerModel& model, const RootSystem& rs,
                               const CharacterLattice& lattice);

struct DegreeComparison {
  int m = 0;
  bool applicable = false;  // the v_p(i_c) premise holds in this degree
  std::size_t ambient_dim = 0;
  std::size_t dim_I = 0;
  std::size_t dim_Ixi = 0;
  bool contains = false;  // I <= I_xi
  bool equal = false;
};

struct IdealComparisonReport {
  std::int64_t prime = 0;
  CommonIndexReport common;
  std::string premise;  // "v_p(i_c) > 1", "v_p(i_c) > 0" or "vacuous"
  bool split_on_lattice = true;
  std::vector<DegreeComparison> degrees;
  bool verified = true;  // every applicable degree is equal
};

// Compares I_xi^(m) with I^(m) for m = 1..min(p, max_degree, Chow cap).
IdealComparisonReport compare_ideals(const Workspace& ws, const BrauerModel& model,
                                const CharacterLattice& lattice, std::int64_t p,
                                int max_degree = -1);

}  // namespace jinv
