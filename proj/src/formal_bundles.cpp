#include "jinv/formal_bundles.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace jinv::formal {

// ---------------------------------------------------------------------------
// FormalBundle

FormalBundle FormalBundle::trivial(std::size_t num_roots) {
  FormalBundle b(num_roots);
  b.add_term(Exponents(num_roots, 0), 1);
  return b;
}

FormalBundle FormalBundle::line(Exponents exponents) {
  FormalBundle b(exponents.size());
  b.add_term(exponents, 1);
  return b;
}

bool FormalBundle::is_line_bundle() const {
  return terms_.size() == 1 && terms_.begin()->second == 1;
}

void FormalBundle::add_term(const Exponents& e, const Integer& mult) {
  if (e.size() != n_) throw std::invalid_argument("exponent vector has wrong length");
  if (mult == 0) return;
  auto [it, inserted] = terms_.emplace(e, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalBundle& FormalBundle::operator+=(const FormalBundle& o) {
  for (const auto& [e, m] : o.terms_) add_term(e, m);
  return *this;
}

FormalBundle& FormalBundle::operator-=(const FormalBundle& o) {
  for (const auto& [e, m] : o.terms_) add_term(e, -m);
  return *this;
}

FormalBundle operator*(const FormalBundle& a, const FormalBundle& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("formal bundles over different root sets");
  FormalBundle out(a.n_);
  Exponents e(a.n_);
  for (const auto& [ea, ma] : a.terms_)
    for (const auto& [eb, mb] : b.terms_) {
      for (std::size_t j = 0; j < a.n_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ma * mb);
    }
  return out;
}

FormalBundle operator*(const Integer& k, FormalBundle a) {
  if (k == 0) return FormalBundle(a.n_);
  for (auto& [e, m] : a.terms_) m *= k;
  return a;
}

// ---------------------------------------------------------------------------
// Monomial bookkeeping for truncated polynomials

struct MonomialTable {
  std::size_t n = 0;
  int max_degree = 0;
  std::vector<Exponents> monomials;          // graded, lex-descending inside a degree
  std::vector<int> degree;
  std::vector<std::size_t> degree_end;       // degree_end[d] = first index of degree > d
  std::map<Exponents, std::size_t> index;
  std::vector<std::int32_t> product;         // N x N, -1 when the product is truncated
};

namespace {

void fill_degree(std::size_t n, int d, std::size_t pos, Exponents& cur, std::vector<Exponents>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = k;
    fill_degree(n, d - k, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::shared_ptr<const MonomialTable> build_table(std::size_t n, int max_degree) {
  auto t = std::make_shared<MonomialTable>();
  t->n = n;
  t->max_degree = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    if (n == 0) {
      if (d == 0) t->monomials.emplace_back();
    } else {
      Exponents cur(n, 0);
      fill_degree(n, d, 0, cur, t->monomials);
    }
    while (t->degree.size() < t->monomials.size()) t->degree.push_back(d);
    t->degree_end.push_back(t->monomials.size());
  }
  for (std::size_t i = 0; i < t->monomials.size(); ++i) t->index.emplace(t->monomials[i], i);
  const std::size_t count = t->monomials.size();
  t->product.assign(count * count, -1);
  Exponents e(n);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (t->degree[i] + t->degree[j] > max_degree) continue;
      for (std::size_t k = 0; k < n; ++k) e[k] = t->monomials[i][k] + t->monomials[j][k];
      t->product[i * count + j] = static_cast<std::int32_t>(t->index.at(e));
    }
  return t;
}

std::shared_ptr<const MonomialTable> table_for(std::size_t n, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const MonomialTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, max_degree}];
  if (!slot) slot = build_table(n, max_degree);
  return slot;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncatedChowPoly

TruncatedChowPoly::TruncatedChowPoly(std::size_t num_vars, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
  table_ = table_for(num_vars, max_degree);
  coeffs_.assign(table_->monomials.size(), 0);
}

TruncatedChowPoly TruncatedChowPoly::constant(std::size_t num_vars, int max_degree, const Integer& c) {
  TruncatedChowPoly p(num_vars, max_degree);
  p.coeffs_[0] = c;
  return p;
}

TruncatedChowPoly TruncatedChowPoly::variable(std::size_t num_vars, int max_degree, std::size_t j) {
  if (j >= num_vars) throw std::out_of_range("variable index out of range");
  TruncatedChowPoly p(num_vars, max_degree);
  if (max_degree >= 1) {
    Exponents e(num_vars, 0);
    e[j] = 1;
    p.coeffs_[p.table_->index.at(e)] = 1;
  }
  return p;
}

TruncatedChowPoly TruncatedChowPoly::linear(int max_degree, const Exponents& a) {
  TruncatedChowPoly p(a.size(), max_degree);
  if (max_degree >= 1) {
    Exponents e(a.size(), 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      e[j] = 1;
      p.coeffs_[p.table_->index.at(e)] = a[j];
      e[j] = 0;
    }
  }
  return p;
}

std::size_t TruncatedChowPoly::num_vars() const { return table_->n; }
int TruncatedChowPoly::max_degree() const { return table_->max_degree; }

Integer TruncatedChowPoly::coefficient(const Exponents& e) const {
  auto it = table_->index.find(e);
  return it == table_->index.end() ? Integer(0) : coeffs_[it->second];
}

TruncatedChowPoly TruncatedChowPoly::homogeneous_part(int k) const {
  TruncatedChowPoly out(num_vars(), max_degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (table_->degree[i] == k) out.coeffs_[i] = coeffs_[i];
  return out;
}

bool TruncatedChowPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

TruncatedChowPoly& TruncatedChowPoly::operator+=(const TruncatedChowPoly& o) {
  if (o.table_ != table_) throw std::invalid_argument("truncated polynomials of different shapes");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedChowPoly& TruncatedChowPoly::operator-=(const TruncatedChowPoly& o) {
  if (o.table_ != table_) throw std::invalid_argument("truncated polynomials of different shapes");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedChowPoly operator*(const TruncatedChowPoly& a, const TruncatedChowPoly& b) {
  if (a.table_ != b.table_) throw std::invalid_argument("truncated polynomials of different shapes");
  const auto& t = *a.table_;
  const std::size_t count = t.monomials.size();
  TruncatedChowPoly out(t.n, t.max_degree);
  for (std::size_t i = 0; i < count; ++i) {
    if (a.coeffs_[i] == 0) continue;
    const std::size_t limit = t.degree_end[static_cast<std::size_t>(t.max_degree - t.degree[i])];
    for (std::size_t j = 0; j < limit; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[static_cast<std::size_t>(t.product[i * count + j])] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedChowPoly operator*(const Integer& k, TruncatedChowPoly a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

bool operator==(const TruncatedChowPoly& a, const TruncatedChowPoly& b) {
  return a.table_ == b.table_ && a.coeffs_ == b.coeffs_;
}

std::map<Exponents, Integer> TruncatedChowPoly::terms() const {
  std::map<Exponents, Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(table_->monomials[i], coeffs_[i]);
  return out;
}

std::string TruncatedChowPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const Integer& c = coeffs_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Integer mag = c < 0 ? Integer(-c) : c;
    const bool unit_term = table_->degree[i] == 0;
    if (mag != 1 || unit_term) os << mag;
    for (std::size_t j = 0; j < table_->n; ++j) {
      const int e = table_->monomials[i][j];
      if (e == 0) continue;
      os << "t" << (j + 1);
      if (e > 1) os << '^' << e;
    }
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Characteristic classes

FormalBundle gamma1(const FormalBundle& line_bundle) {
  if (!line_bundle.is_line_bundle())
    throw std::invalid_argument("gamma1 expects the class of a single line bundle");
  Exponents dual = line_bundle.terms().begin()->first;
  for (auto& x : dual) x = -x;
  FormalBundle out = FormalBundle::trivial(line_bundle.num_roots());
  out.add_term(dual, -1);
  return out;
}

FormalBundle gamma_of_sum(std::span<const Exponents> lines, int i, std::size_t num_roots) {
  if (i < 0) throw std::invalid_argument("gamma degree must be non-negative");
  if (i == 0) return FormalBundle::trivial(num_roots);
  if (static_cast<std::size_t>(i) > lines.size()) return FormalBundle::zero(num_roots);
  // e_k(g_1, ..., g_j) built one summand at a time
  std::vector<FormalBundle> e(static_cast<std::size_t>(i) + 1, FormalBundle::zero(num_roots));
  e[0] = FormalBundle::trivial(num_roots);
  std::size_t seen = 0;
  for (const auto& l : lines) {
    if (l.size() != num_roots) throw std::invalid_argument("line bundle has wrong number of roots");
    const FormalBundle g = gamma1(FormalBundle::line(l));
    ++seen;
    for (std::size_t k = std::min(seen, static_cast<std::size_t>(i)); k >= 1; --k) e[k] += e[k - 1] * g;
  }
  return e[static_cast<std::size_t>(i)];
}

TruncatedChowPoly total_chern(const FormalBundle& x, int max_degree) {
  const std::size_t n = x.num_roots();
  TruncatedChowPoly total = TruncatedChowPoly::constant(n, max_degree, 1);
  for (const auto& [exps, mult] : x.terms()) {
    if (std::all_of(exps.begin(), exps.end(), [](int a) { return a == 0; })) continue;
    // (1 + l)^m = sum_k binom(m, k) l^k, generalised binomials for m < 0
    const TruncatedChowPoly l = TruncatedChowPoly::linear(max_degree, exps);
    TruncatedChowPoly factor = TruncatedChowPoly::constant(n, max_degree, 1);
    TruncatedChowPoly power = factor;
    Integer binom = 1;
    for (int k = 1; k <= max_degree; ++k) {
      binom = binom * (mult - (k - 1)) / k;
      if (binom == 0) break;
      power = power * l;
      factor += binom * power;
    }
    total = total * factor;
  }
  return total;
}

TruncatedChowPoly chern_class(const FormalBundle& x, int i) {
  if (i < 0) throw std::invalid_argument("Chern class degree must be non-negative");
  return total_chern(x, i).homogeneous_part(i);
}

Integer gamma_chern_factor(int i) {
  if (i < 1) throw std::invalid_argument("factor defined for i >= 1");
  Integer f = 1;
  for (int k = 2; k < i; ++k) f *= k;
  return (i % 2 == 1) ? f : Integer(-f);
}

bool verify_firsteq(int i, int n) {
  if (i < 1 || n < i) throw std::invalid_argument("verify_firsteq needs 1 <= i <= n");
  const auto roots = static_cast<std::size_t>(n);
  FormalBundle product = FormalBundle::trivial(roots);
  for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) {
    Exponents e(roots, 0);
    e[j] = 1;
    product = product * gamma1(FormalBundle::line(e));
  }
  const TruncatedChowPoly lhs = chern_class(product, i);
  Exponents mono(roots, 0);
  std::fill(mono.begin(), mono.begin() + i, 1);
  TruncatedChowPoly rhs(roots, i);
  rhs += gamma_chern_factor(i) * [&] {
    TruncatedChowPoly m = TruncatedChowPoly::constant(roots, i, 1);
    for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j)
      m = m * TruncatedChowPoly::variable(roots, i, j);
    return m;
  }();
  return lhs == rhs;
}

bool verify_gammatoc(std::span<const Summand> x, int i) {
  if (x.empty()) throw std::invalid_argument("verify_gammatoc needs at least one summand");
  if (i < 1) throw std::invalid_argument("verify_gammatoc needs i >= 1");
  const std::size_t n = x.front().line.size();
  std::vector<Exponents> expanded;
  FormalBundle bundle(n);
  for (const auto& s : x) {
    if (s.multiplicity < 0) throw std::invalid_argument("summand multiplicities must be non-negative");
    if (s.line.size() != n) throw std::invalid_argument("summands over different root sets");
    for (int k = 0; k < s.multiplicity; ++k) expanded.push_back(s.line);
    bundle.add_term(s.line, s.multiplicity);
  }
  const TruncatedChowPoly lhs = chern_class(gamma_of_sum(expanded, i, n), i);
  const TruncatedChowPoly rhs = gamma_chern_factor(i) * chern_class(bundle, i);
  return lhs == rhs;
}

std::vector<std::vector<Summand>> multiplicity_patterns(std::span<const Exponents> lines, int max_mult) {
  std::vector<std::vector<Summand>> out;
  std::vector<Summand> current;
  auto extend = [&](auto&& self, int cap) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == lines.size()) return;
    for (int m = cap; m >= 1; --m) {
      current.push_back(Summand{lines[current.size()], m});
      self(self, m);
      current.pop_back();
    }
  };
  extend(extend, max_mult);
  return out;
}

BinomialExpansion binomial_gamma_expansion(int i_w, int cap) {
  if (i_w < 1) throw std::invalid_argument("index must be positive");
  if (cap < 0) throw std::invalid_argument("negative cap");
  BinomialExpansion out;
  const int top = std::min(i_w, cap);
  Integer binom = 1;
  out.coefficients.push_back(binom);
  for (int k = 1; k <= top; ++k) {
    binom = binom * (i_w - k + 1) / k;
    out.coefficients.push_back(binom);
  }
  // gamma_t(i_w [L]) = gamma_t([L])^{i_w}, read off term by term
  const std::vector<Exponents> copies(static_cast<std::size_t>(i_w), Exponents{1});
  const FormalBundle g = gamma1(FormalBundle::line({1}));
  FormalBundle g_power = FormalBundle::trivial(1);
  out.verified = true;
  for (int k = 0; k <= top; ++k) {
    if (k > 0) g_power = g_power * g;
    if (gamma_of_sum(copies, k, 1) != out.coefficients[static_cast<std::size_t>(k)] * g_power)
      out.verified = false;
  }
  return out;
}

}  // namespace jinv::formal
