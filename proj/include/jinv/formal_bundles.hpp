#pragma once

// Splitting-principle model of K_0: formal sums of line bundles
// L_1^{a_1} (x) ... (x) L_n^{a_n} with integer multiplicities, and truncated
// Chern polynomials in the Chern roots t_j = c_1(L_j).

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jinv::formal {

using Integer = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

class FormalBundle {
public:
  explicit FormalBundle(std::size_t num_roots) : n_(num_roots) {}

  static FormalBundle zero(std::size_t num_roots) { return FormalBundle(num_roots); }
  static FormalBundle trivial(std::size_t num_roots);
  static FormalBundle line(Exponents exponents);

  std::size_t num_roots() const { return n_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // exactly one monomial with multiplicity one
  bool is_line_bundle() const;

  void add_term(const Exponents& e, const Integer& mult);
  FormalBundle& operator+=(const FormalBundle& o);
  FormalBundle& operator-=(const FormalBundle& o);
  friend FormalBundle operator+(FormalBundle a, const FormalBundle& b) { return a += b; }
  friend FormalBundle operator-(FormalBundle a, const FormalBundle& b) { return a -= b; }
  friend FormalBundle operator*(const FormalBundle& a, const FormalBundle& b);
  friend FormalBundle operator*(const Integer& k, FormalBundle a);
  bool operator==(const FormalBundle&) const = default;

private:
  std::size_t n_;
  std::map<Exponents, Integer> terms_;
};

struct MonomialTable;

// Polynomial in t_1..t_n with integer coefficients, all terms of total degree <= D.
class TruncatedChowPoly {
public:
  TruncatedChowPoly(std::size_t num_vars, int max_degree);

  static TruncatedChowPoly constant(std::size_t num_vars, int max_degree, const Integer& c);
  static TruncatedChowPoly variable(std::size_t num_vars, int max_degree, std::size_t j);
  // sum_j a_j t_j
  static TruncatedChowPoly linear(int max_degree, const Exponents& a);

  std::size_t num_vars() const;
  int max_degree() const;

  Integer coefficient(const Exponents& e) const;
  TruncatedChowPoly homogeneous_part(int k) const;
  bool is_zero() const;

  TruncatedChowPoly& operator+=(const TruncatedChowPoly& o);
  TruncatedChowPoly& operator-=(const TruncatedChowPoly& o);
  friend TruncatedChowPoly operator+(TruncatedChowPoly a, const TruncatedChowPoly& b) { return a += b; }
  friend TruncatedChowPoly operator-(TruncatedChowPoly a, const TruncatedChowPoly& b) { return a -= b; }
  friend TruncatedChowPoly operator*(const TruncatedChowPoly& a, const TruncatedChowPoly& b);
  friend TruncatedChowPoly operator*(const Integer& k, TruncatedChowPoly a);
  friend bool operator==(const TruncatedChowPoly& a, const TruncatedChowPoly& b);

  // Non-zero terms keyed by exponent vector.
  std::map<Exponents, Integer> terms() const;
  std::string to_string() const;

private:
  std::shared_ptr<const MonomialTable> table_;
  std::vector<Integer> coeffs_;
};

// gamma_1([L]) = 1 - [L^vee]
FormalBundle gamma1(const FormalBundle& line_bundle);

// gamma_i(L_1 + ... + L_N) = e_i(gamma_1(L_1), ..., gamma_1(L_N)); zero for i > N.
FormalBundle gamma_of_sum(std::span<const Exponents> lines, int i, std::size_t num_roots);

// Multiplicative extension of c([L]) = 1 + c_1(L), exact through degree D.
TruncatedChowPoly total_chern(const FormalBundle& x, int max_degree);
TruncatedChowPoly chern_class(const FormalBundle& x, int i);

// (-1)^{i-1} (i-1)!
Integer gamma_chern_factor(int i);

// c_i(gamma_1(L_1) ... gamma_1(L_i)) == (-1)^{i-1}(i-1)! t_1 ... t_i  with n >= i roots.
bool verify_firsteq(int i, int n);

struct Summand {
  Exponents line;
  int multiplicity = 1;
};

// c_i(gamma_i(x)) == (-1)^{i-1}(i-1)! c_i(x) for x = sum of line bundles.
bool verify_gammatoc(std::span<const Summand> x, int i);

// m_1 L_1 + ... + m_N L_N over the first N of `lines`, N >= 1, with
// max_mult >= m_1 >= ... >= m_N >= 1.
std::vector<std::vector<Summand>> multiplicity_patterns(std::span<const Exponents> lines, int max_mult);

struct BinomialExpansion {
  std::vector<Integer> coefficients;  // binom(i_w, k), k = 0..min(i_w, cap)
  bool verified = false;              // matches gamma_k(i_w [L]) in the formal ring
};

BinomialExpansion binomial_gamma_expansion(int i_w, int cap);

}  // namespace jinv::formal
