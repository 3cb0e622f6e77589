#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "jinv/fp_subspace.hpp"
#include "jinv/rootdata.hpp"
#include "jinv/weyl.hpp"

namespace jinv {

// Integer combination of Schubert classes sigma_w, all with length(w) == degree.
// Keys are element indices of the owning SchubertCalculus's Weyl table.
struct SchubertClass {
  int degree = 0;
  std::map<std::size_t, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(std::size_t element, std::int64_t coeff);
  SchubertClass& operator+=(const SchubertClass& o);
  friend SchubertClass operator*(std::int64_t k, SchubertClass a);
  bool operator==(const SchubertClass&) const = default;
};

// Low-degree Chow groups CH^m(G/B), m <= max_degree, in the Schubert basis.
// Divisor products follow the Chevalley formula
//   sigma_u . c_1(L(lambda)) = sum_{alpha>0, l(u s_alpha) = l(u)+1} <lambda, alpha^vee> sigma_{u s_alpha}.
class SchubertCalculus {
public:
  static constexpr int kDefaultMaxDegree = 4;

  explicit SchubertCalculus(const RootSystem& rs, int max_degree = kDefaultMaxDegree);

  const RootSystem& root_system() const { return *rs_; }
  const WeylGroup& weyl() const { return weyl_; }
  int max_degree() const { return max_degree_; }

  // Ordered Schubert basis of CH^m as Weyl-table indices.
  std::vector<std::size_t> basis(int m) const;
  std::size_t basis_size(int m) const;

  SchubertClass unit() const;
  SchubertClass schubert(std::size_t element) const;
  // h_i = c_1(L(omega_i)) = sigma_{s_i}
  SchubertClass divisor(std::size_t i) const;

  SchubertClass chevalley_multiply(const SchubertClass& sigma, const Weight& lambda) const;
  // c_1(L(lambda_1)) ... c_1(L(lambda_k)) starting from the given class.
  SchubertClass multiply_divisors(SchubertClass sigma, std::span<const Weight> lambdas) const;
  SchubertClass monomial_class(std::span<const Weight> lambdas) const;

  // Degree-one characteristic map T* -> CH^1, sum a_i omega_i -> sum a_i h_i.
  SchubertClass char_map_deg1(const CharacterLattice& lattice, const Weight& lambda) const;

  // Dense integer coordinates over basis(sigma.degree).
  std::vector<std::int64_t> coordinates(const SchubertClass& sigma) const;

  // I^(m) (x) F_p, spanned by sigma_u . c(lambda), l(u) = m-1, lambda in a basis of T*.
  SubspaceBasis ideal_I_degree(const CharacterLattice& lattice, int m, std::int64_t p) const;

  struct Cover {
    std::size_t target;
    std::size_t root;  // index into positive_roots()
  };
  const std::vector<Cover>& covers(std::size_t element) const;

private:
  void check_degree(int m) const;
  std::pair<std::size_t, std::size_t> degree_range(int m) const;

  const RootSystem* rs_;
  int max_degree_;
  WeylGroup weyl_;
  std::vector<std::vector<Cover>> covers_;
};

}  // namespace jinv
