#include "jinv/k_gamma.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "jinv/integer_matrix.hpp"

namespace jinv {

Weight steinberg_weight(const WeylGroup& group, std::size_t element) {
  const RootSystem& rs = group.root_system();
  Weight sum(rs.rank());
  for (auto i : group.descent_set(element)) sum += rs.fundamental_weight(i);
  return group.act(element, sum);
}

SteinbergTable::SteinbergTable(const WeylGroup& group) {
  if (!group.complete())
    throw std::invalid_argument("Steinberg table needs the complete Weyl group");
  const auto& pi = group.root_system().fundamental_group();
  entries_.reserve(group.size());
  for (std::size_t w = 0; w < group.size(); ++w) {
    SteinbergEntry e;
    e.element = w;
    e.rho = steinberg_weight(group, w);
    e.c1 = e.rho.coords;
    e.brauer_class = pi.classify(e.rho);
    entries_.push_back(std::move(e));
  }
}

GammaGeneratorProducts::GammaGeneratorProducts(std::size_t group_size, int m)
    : n_(group_size), m_(m) {
  if (m < 0) throw std::invalid_argument("product degree must be >= 0");
}

std::uint64_t GammaGeneratorProducts::count() const {
  using boost::multiprecision::cpp_int;
  if (m_ == 0) return 1;
  if (n_ == 0) return 0;
  cpp_int c = 1;
  for (int k = 1; k <= m_; ++k) c = c * (cpp_int(n_) + k - 1) / k;
  const cpp_int cap = std::numeric_limits<std::uint64_t>::max();
  return c > cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(c);
}

bool GammaGeneratorProducts::next(std::vector<std::size_t>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (m_ > 0 && n_ == 0) {
      done_ = true;
      return false;
    }
    current_.assign(static_cast<std::size_t>(m_), 0);
    out = current_;
    if (m_ == 0) done_ = true;
    return true;
  }
  std::size_t pos = current_.size();
  while (pos > 0 && current_[pos - 1] + 1 == n_) --pos;
  if (pos == 0) {
    done_ = true;
    return false;
  }
  const std::size_t v = ++current_[pos - 1];
  for (std::size_t j = pos; j < current_.size(); ++j) current_[j] = v;
  out = current_;
  return true;
}

GammaGeneratorProducts gamma_generator_products(const WeylGroup& group, int m) {
  if (!group.complete())
    throw std::invalid_argument("gamma generators need the complete Weyl group");
  return GammaGeneratorProducts(group.size(), m);
}

namespace {

// Monomials of degree k in n variables, in lexicographically decreasing order.
struct HomogeneousMonomials {
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, std::size_t> index;

  HomogeneousMonomials(std::size_t n, int k) {
    std::vector<int> e(n, 0);
    build(e, 0, k);
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }

  void build(std::vector<int>& e, std::size_t pos, int left) {
    if (pos + 1 == e.size() || e.empty()) {
      if (!e.empty()) e[pos] = left;
      if (!e.empty() || left == 0) monomials.push_back(e);
      if (!e.empty()) e[pos] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[pos] = a;
      build(e, pos + 1, left - a);
    }
    e[pos] = 0;
  }
};

std::vector<std::int64_t> multiply_polys(const HomogeneousMonomials& ma, std::span<const std::int64_t> a,
                                         const HomogeneousMonomials& mb, std::span<const std::int64_t> b,
                                         const HomogeneousMonomials& mc, std::int64_t p) {
  std::vector<std::int64_t> out(mc.monomials.size(), 0);
  std::vector<int> e;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      e = ma.monomials[i];
      for (std::size_t t = 0; t < e.size(); ++t) e[t] += mb.monomials[j][t];
      auto& slot = out[mc.index.at(e)];
      slot = (slot + a[i] * b[j]) % p;
    }
  }
  return out;
}

std::int64_t binomial_mod(std::int64_t n, int k, std::int64_t p) {
  using boost::multiprecision::cpp_int;
  cpp_int c = 1;
  for (int j = 1; j <= k; ++j) c = c * (cpp_int(n) - j + 1) / j;
  return static_cast<std::int64_t>(cpp_int(c % p));
}

std::vector<Weight> monomial_weights(const RootSystem& rs, const std::vector<int>& e) {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int t = 0; t < e[i]; ++t) out.push_back(rs.fundamental_weight(i));
  return out;
}

std::vector<std::int64_t> reduce_mod(std::vector<std::int64_t> v, std::int64_t p) {
  for (auto& x : v) x = floor_mod(x, p);
  return v;
}

// Mod-p coordinates in CH^{deg u + k} of sigma_u times each degree-k monomial in the h_i.
std::vector<std::vector<std::int64_t>> monomial_images(const SchubertCalculus& chow,
                                                       const SchubertClass& sigma,
                                                       const HomogeneousMonomials& mons,
                                                       std::int64_t p) {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(mons.monomials.size());
  const RootSystem& rs = chow.root_system();
  for (const auto& e : mons.monomials) {
    const auto weights = monomial_weights(rs, e);
    out.push_back(reduce_mod(chow.coordinates(chow.multiply_divisors(sigma, weights)), p));
  }
  return out;
}

void add_image(SubspaceBasis& span, std::span<const std::int64_t> poly,
               const std::vector<std::vector<std::int64_t>>& images, std::int64_t p) {
  std::vector<std::int64_t> v(span.ambient_dim(), 0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = (v[c] + poly[i] * images[i][c]) % p;
  }
  span.insert(v);
}

}  // namespace

// Span of restriction generators of degree k as polynomials in the h_i.
struct GammaEngine::PolySpan {
  HomogeneousMonomials monomials;
  SubspaceBasis span;
};

GammaEngine::GammaEngine(const SchubertCalculus& chow, const WeylGroup& full_group)
    : chow_(&chow), group_(&full_group), table_(full_group) {
  if (&chow.root_system() != &full_group.root_system())
    throw std::invalid_argument("Chow data and Weyl group belong to different root systems");
}

std::int64_t GammaEngine::restriction_index(std::size_t element, const BrauerModel& model) const {
  require_compatible(model, chow_->root_system());
  return model.ind(table_[element].brauer_class);
}

void GammaEngine::check_request(int m, const BrauerModel& model, std::int64_t p) const {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("degree must be >= 1");
  if (m > p)
    throw std::invalid_argument("degree " + std::to_string(m) + " exceeds p = " + std::to_string(p) +
                                "; the factor (m-1)! is a unit mod p only for m <= p");
  if (m > chow_->max_degree())
    throw std::out_of_range("degree " + std::to_string(m) + " exceeds the Chow degree cap " +
                            std::to_string(chow_->max_degree()));
  require_compatible(model, chow_->root_system());
}

std::shared_ptr<const std::vector<GammaEngine::PolySpan>> GammaEngine::restriction_polys(
    int m, const BrauerModel& model, std::int64_t p) const {
  CacheKey key{model.indices(), p};
  std::lock_guard lock(mutex_);
  auto& slot = poly_cache_[key];
  if (slot && static_cast<int>(slot->size()) > m) return slot;

  const std::size_t n = chow_->root_system().rank();
  // Generators only see w through (rho_w mod p, i_w).
  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> keyed;
  for (const auto& e : table_.entries())
    keyed.emplace(reduce_mod(e.rho.coords, p), model.ind(e.brauer_class));

  auto polys = std::make_shared<std::vector<PolySpan>>();
  for (int k = 0; k <= m; ++k) {
    HomogeneousMonomials mons(n, k);
    const std::size_t dim = mons.monomials.size();
    polys->push_back(PolySpan{std::move(mons), SubspaceBasis(p, dim, k)});
  }
  polys->at(0).span.insert(std::vector<std::int64_t>{1});

  // V_k: binom(i_w, k) rho_w^k
  std::vector<SubspaceBasis> powers;
  powers.emplace_back(p, 1, 0);
  const HomogeneousMonomials linear(n, 1);
  for (int k = 1; k <= m; ++k) {
    SubspaceBasis v(p, (*polys)[k].monomials.monomials.size(), k);
    for (const auto& [rho, ind] : keyed) {
      const std::int64_t b = binomial_mod(ind, k, p);
      if (b == 0) continue;
      std::vector<std::int64_t> poly{1};
      for (int t = 0; t < k; ++t)
        poly = multiply_polys((*polys)[t].monomials, poly, linear, rho, (*polys)[t + 1].monomials, p);
      for (auto& x : poly) x = (x * b) % p;
      v.insert(poly);
      if (v.full()) break;
    }
    powers.push_back(std::move(v));
  }

  // Q_j = sum_k V_k Q_{j-k}
  for (int j = 1; j <= m; ++j) {
    auto& target = (*polys)[j];
    for (int k = 1; k <= j && !target.span.full(); ++k) {
      const auto& lower = (*polys)[j - k];
      for (const auto& a : powers[k].rows()) {
        for (const auto& b : lower.span.rows()) {
          target.span.insert(multiply_polys((*polys)[k].monomials, a, lower.monomials, b,
                                            target.monomials, p));
          if (target.span.full()) break;
        }
        if (target.span.full()) break;
      }
    }
  }
  slot = polys;
  return polys;
}

SubspaceBasis GammaEngine::restriction_image_degree(int m, const BrauerModel& model,
                                                    const CharacterLattice& lattice,
                                                    std::int64_t p) const {
  check_request(m, model, p);
  if (lattice.rank() != chow_->root_system().rank())
    throw std::invalid_argument("lattice rank does not match the root system");
  const auto polys = restriction_polys(m, model, p);
  const auto& top = (*polys)[m];
  SubspaceBasis span(p, chow_->basis_size(m), m);
  const auto images = monomial_images(*chow_, chow_->unit(), top.monomials, p);
  for (const auto& f : top.span.rows()) {
    add_image(span, f, images, p);
    if (span.full()) break;
  }
  return span;
}

SubspaceBasis GammaEngine::ideal_Ixi_degree(int m, const BrauerModel& model,
                                            const CharacterLattice& lattice, std::int64_t p) const {
  SubspaceBasis span = restriction_image_degree(m, model, lattice, p);
  const auto polys = restriction_polys(m, model, p);
  for (int j = 1; j < m && !span.full(); ++j) {
    const auto& lower = (*polys)[j];
    if (lower.span.dim() == 0) continue;
    for (std::size_t u : chow_->basis(m - j)) {
      const auto images = monomial_images(*chow_, chow_->schubert(u), lower.monomials, p);
      for (const auto& f : lower.span.rows()) {
        add_image(span, f, images, p);
        if (span.full()) return span;
      }
    }
  }
  return span;
}

Workspace::Workspace(RootSystem rs, int max_degree, std::size_t guard)
    : rs_(std::make_unique<RootSystem>(std::move(rs))), max_degree_(max_degree), guard_(guard) {}

const SchubertCalculus& Workspace::chow() const {
  std::call_once(chow_once_, [this] { chow_ = std::make_unique<SchubertCalculus>(*rs_, max_degree_); });
  return *chow_;
}

const WeylGroup& Workspace::weyl() const {
  std::call_once(weyl_once_, [this] {
    weyl_ = std::make_unique<WeylGroup>(WeylGroup::enumerate(*rs_, -1, guard_));
  });
  return *weyl_;
}

const GammaEngine& Workspace::gamma() const {
  std::call_once(gamma_once_, [this] { gamma_ = std::make_unique<GammaEngine>(chow(), weyl()); });
  return *gamma_;
}

}  // namespace jinv
