#include "jinv/schubert.hpp"

#include <stdexcept>
#include <string>

namespace jinv {

void SchubertClass::add_term(std::size_t element, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(element, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  if (!o.is_zero() && !is_zero() && o.degree != degree)
    throw std::invalid_argument("adding Schubert classes of different degrees");
  if (is_zero()) degree = o.degree;
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

SchubertClass operator*(std::int64_t k, SchubertClass a) {
  if (k == 0) {
    a.terms.clear();
    return a;
  }
  for (auto& [w, c] : a.terms) c *= k;
  return a;
}

SchubertCalculus::SchubertCalculus(const RootSystem& rs, int max_degree)
    : rs_(&rs), max_degree_(max_degree), weyl_(WeylGroup::enumerate(rs, max_degree)) {
  if (max_degree < 0) throw std::invalid_argument("negative degree cap");
  const std::size_t n = rs.rank();
  const auto& roots = rs.positive_roots();
  covers_.resize(weyl_.size());
  for (std::size_t u = 0; u < weyl_.size(); ++u) {
    const auto& elem = weyl_[u];
    if (elem.length >= max_degree_) continue;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      // u * s_alpha = U - (U beta) (alpha^vee)^T  in omega-coordinates
      const auto y = act(elem, roots[a].weight);
      std::vector<std::int64_t> m = elem.matrix;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r * n + c] -= y[r] * roots[a].coroot_coords[c];
      const auto target = weyl_.find(m);
      if (target && weyl_[*target].length == elem.length + 1) covers_[u].push_back({*target, a});
    }
  }
}

void SchubertCalculus::check_degree(int m) const {
  if (m < 0 || m > max_degree_)
    throw std::out_of_range("degree " + std::to_string(m) + " outside computed range 0.." +
                            std::to_string(max_degree_));
}

std::pair<std::size_t, std::size_t> SchubertCalculus::degree_range(int m) const {
  check_degree(m);
  // past the top degree of a finite group CH^m is zero
  if (m > weyl_.max_length()) return {weyl_.size(), weyl_.size()};
  return weyl_.length_range(m);
}

std::vector<std::size_t> SchubertCalculus::basis(int m) const {
  const auto [first, last] = degree_range(m);
  std::vector<std::size_t> out;
  for (std::size_t i = first; i < last; ++i) out.push_back(i);
  return out;
}

std::size_t SchubertCalculus::basis_size(int m) const {
  const auto [first, last] = degree_range(m);
  return last - first;
}

SchubertClass SchubertCalculus::unit() const { return schubert(0); }

SchubertClass SchubertCalculus::schubert(std::size_t element) const {
  SchubertClass s;
  s.degree = weyl_[element].length;
  s.add_term(element, 1);
  return s;
}

SchubertClass SchubertCalculus::divisor(std::size_t i) const {
  return chevalley_multiply(unit(), rs_->fundamental_weight(i));
}

const std::vector<SchubertCalculus::Cover>& SchubertCalculus::covers(std::size_t element) const {
  return covers_.at(element);
}

SchubertClass SchubertCalculus::chevalley_multiply(const SchubertClass& sigma,
                                                   const Weight& lambda) const {
  if (lambda.rank() != rs_->rank()) throw std::invalid_argument("weight rank mismatch");
  check_degree(sigma.degree + 1);
  const auto& roots = rs_->positive_roots();
  SchubertClass out;
  out.degree = sigma.degree + 1;
  for (const auto& [u, coeff] : sigma.terms) {
    for (const auto& cov : covers_[u]) {
      const std::int64_t pairing = roots[cov.root].pair(lambda);
      out.add_term(cov.target, coeff * pairing);
    }
  }
  return out;
}

SchubertClass SchubertCalculus::multiply_divisors(SchubertClass sigma,
                                                  std::span<const Weight> lambdas) const {
  for (const auto& l : lambdas) sigma = chevalley_multiply(sigma, l);
  return sigma;
}

SchubertClass SchubertCalculus::monomial_class(std::span<const Weight> lambdas) const {
  return multiply_divisors(unit(), lambdas);
}

SchubertClass SchubertCalculus::char_map_deg1(const CharacterLattice& lattice,
                                              const Weight& lambda) const {
  if (!lattice.contains(lambda))
    throw std::invalid_argument("weight " + to_string(lambda) + " is not in the character lattice " +
                                lattice.name());
  return chevalley_multiply(unit(), lambda);
}

std::vector<std::int64_t> SchubertCalculus::coordinates(const SchubertClass& sigma) const {
  const auto [first, last] = degree_range(sigma.degree);
  std::vector<std::int64_t> v(last - first, 0);
  for (const auto& [w, c] : sigma.terms) {
    if (w < first || w >= last) throw std::logic_error("Schubert term of wrong degree");
    v[w - first] = c;
  }
  return v;
}

SubspaceBasis SchubertCalculus::ideal_I_degree(const CharacterLattice& lattice, int m,
                                               std::int64_t p) const {
  if (m < 1) throw std::invalid_argument("ideal degree must be >= 1");
  SubspaceBasis span(p, basis_size(m), m);
  for (std::size_t u : basis(m - 1)) {
    const auto sigma = schubert(u);
    for (const auto& lambda : lattice.basis()) {
      span.insert(coordinates(chevalley_multiply(sigma, lambda)));
      if (span.full()) return span;
    }
  }
  return span;
}

}  // namespace jinv
