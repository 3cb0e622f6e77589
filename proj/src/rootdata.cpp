#include "jinv/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jinv {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& x : a.coords) x = -x;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& x : a.coords) x *= k;
  return a;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

std::size_t VectorHash::operator()(const std::vector<std::int64_t>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::int64_t PositiveRoot::pair(const Weight& lambda) const {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < coroot_coords.size(); ++j) acc += coroot_coords[j] * lambda[j];
  return acc;
}

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw std::invalid_argument("invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisor chain");
  }
}

std::size_t FiniteAbelianGroup::order() const {
  std::size_t n = 1;
  for (auto d : factors_) n *= static_cast<std::size_t>(d);
  return n;
}

std::int64_t FiniteAbelianGroup::exponent() const {
  return factors_.empty() ? 1 : factors_.back();
}

FiniteAbelianGroup::Element FiniteAbelianGroup::normalize(const Element& a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("group element has wrong length");
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = floor_mod(a[i], factors_[i]);
  return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = floor_mod(a[i] + b[i], factors_[i]);
  return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::negate(const Element& a) const {
  return scale(-1, a);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(std::int64_t k, const Element& a) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = floor_mod(k * a[i], factors_[i]);
  return out;
}

std::size_t FiniteAbelianGroup::label(const Element& e) const {
  const Element n = normalize(e);
  std::size_t lbl = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    lbl = lbl * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(n[i]);
  return lbl;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(std::size_t label) const {
  if (label >= order()) throw std::out_of_range("group element label out of range");
  Element e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e[i] = static_cast<std::int64_t>(label % static_cast<std::size_t>(factors_[i]));
    label /= static_cast<std::size_t>(factors_[i]);
  }
  return e;
}

std::string FiniteAbelianGroup::describe() const {
  if (factors_.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << "Z/" << factors_[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// LatticeQuotient

LatticeQuotient::LatticeQuotient(const IntMatrix& generators) : dim_(generators.rows()) {
  const SmithForm snf = smith_normal_form(generators);
  if (snf.diagonal.size() < dim_)
    throw std::invalid_argument("sublattice generators do not have full rank");

  std::vector<std::size_t> keep;
  std::vector<std::int64_t> factors;
  for (std::size_t t = 0; t < dim_; ++t) {
    const std::int64_t d = snf.diagonal[t];
    if (d == 0) throw std::invalid_argument("sublattice has infinite index");
    if (d > 1) {
      keep.push_back(t);
      factors.push_back(d);
    }
  }
  group_ = FiniteAbelianGroup(factors);
  u_ = IntMatrix(keep.size(), dim_);
  u_inverse_ = IntMatrix(dim_, keep.size());
  scale_.assign(keep.size(), 1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (std::size_t c = 0; c < dim_; ++c) u_(k, c) = snf.u(keep[k], c);
    for (std::size_t r = 0; r < dim_; ++r) u_inverse_(r, k) = snf.u_inverse(r, keep[k]);
    // Normalise each cyclic coordinate so the first basis vector mapping to a
    // unit maps to 1; makes labels independent of elimination details.
    for (std::size_t c = 0; c < dim_; ++c) {
      const std::int64_t r = floor_mod(u_(k, c), factors[k]);
      if (std::gcd(r, factors[k]) == 1) {
        scale_[k] = inverse_mod(r, factors[k]);
        break;
      }
    }
  }
}

FiniteAbelianGroup::Element LatticeQuotient::classify(std::span<const std::int64_t> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  const auto& f = group_.invariant_factors();
  FiniteAbelianGroup::Element e(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < dim_; ++c) acc += floor_mod(u_(k, c), f[k]) * floor_mod(v[c], f[k]);
    e[k] = floor_mod(floor_mod(acc, f[k]) * scale_[k], f[k]);
  }
  return e;
}

std::vector<std::int64_t> LatticeQuotient::lift(const FiniteAbelianGroup::Element& e) const {
  const auto& f = group_.invariant_factors();
  const auto n = group_.normalize(e);
  std::vector<std::int64_t> v(dim_, 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const std::int64_t r = floor_mod(n[k] * inverse_mod(scale_[k], f[k]), f[k]);
    for (std::size_t row = 0; row < dim_; ++row) v[row] += u_inverse_(row, k) * r;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Cartan data

namespace {

void link(IntMatrix& c, std::size_t i, std::size_t j) {
  c(i, j) = -1;
  c(j, i) = -1;
}

bool valid_type(char type, int rank) {
  if (rank < 1 || rank > 8) return false;
  switch (type) {
    case 'A': return true;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace

IntMatrix cartan_matrix(char type, int rank) {
  if (!valid_type(type, rank))
    throw std::invalid_argument("invalid Dynkin type " + std::string(1, type) + std::to_string(rank));
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4.
      link(c, 0, 2);
      link(c, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case 'F':
      link(c, 0, 1);
      link(c, 2, 3);
      c(1, 2) = -1;
      c(2, 1) = -2;
      break;
    case 'G':
      c(0, 1) = -3;  // alpha_1 short
      c(1, 0) = -1;
      break;
  }
  return c;
}

RootSystem::RootSystem(char type, std::size_t rank, IntMatrix cartan)
    : type_(type), rank_(rank), cartan_(std::move(cartan)) {
  close_roots();
  fundamental_group_ = LatticeQuotient(cartan_);
}

RootSystem RootSystem::build(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  return RootSystem(type, static_cast<std::size_t>(rank), cartan_matrix(type, rank));
}

RootSystem RootSystem::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("malformed Dynkin type '" + name + "'");
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("malformed Dynkin type '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
    if (rank > 99) throw std::invalid_argument("malformed Dynkin type '" + name + "'");
  }
  return build(name[0], rank);
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

void RootSystem::close_roots() {
  const std::size_t n = rank_;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> found;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    found.emplace_back(e, e);
    queue.push_back(found.size() - 1);
  }
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto [b, c] = found[idx];
      std::int64_t k = 0, kc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        k += cartan_(i, j) * b[j];
        kc += c[j] * cartan_(j, i);
      }
      b[i] -= k;
      c[i] -= kc;
      if (std::any_of(b.begin(), b.end(), [](std::int64_t x) { return x < 0; })) continue;
      if (seen.insert(b).second) {
        found.emplace_back(b, c);
        queue.push_back(found.size() - 1);
      }
    }
  }

  for (auto& [b, c] : found) {
    PositiveRoot r;
    r.simple_coords = b;
    r.coroot_coords = c;
    r.height = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    r.weight = Weight(cartan_.apply(b));
    roots_.push_back(std::move(r));
  }
  std::sort(roots_.begin(), roots_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coords > b.simple_coords;
  });
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    root_index_.emplace(roots_[i].weight.coords, RootRef{i, 1});
    root_index_.emplace((-roots_[i].weight).coords, RootRef{i, -1});
  }
}

Weight RootSystem::simple_root(std::size_t i) const {
  if (i >= rank_) throw std::out_of_range("simple root index out of range");
  return Weight(cartan_.column(i));
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  if (i >= rank_) throw std::out_of_range("fundamental weight index out of range");
  Weight w(rank_);
  w[i] = 1;
  return w;
}

Weight RootSystem::rho() const { return Weight(std::vector<std::int64_t>(rank_, 1)); }

std::optional<RootSystem::RootRef> RootSystem::find_root(const Weight& w) const {
  auto it = root_index_.find(w.coords);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> RootSystem::fundamental_degrees() const {
  const int n = static_cast<int>(rank_);
  std::vector<int> d;
  switch (type_) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
  }
  return d;
}

std::uint64_t RootSystem::weyl_order() const {
  std::uint64_t order = 1;
  for (int d : fundamental_degrees()) order *= static_cast<std::uint64_t>(d);
  return order;
}

// ---------------------------------------------------------------------------
// CharacterLattice

CharacterLattice::CharacterLattice(const RootSystem& rs, std::vector<std::size_t> generator_labels,
                                   std::string name)
    : name_(std::move(name)), rank_(rs.rank()) {
  const auto& pi = rs.fundamental_group();
  const auto& group = pi.group();

  std::set<std::size_t> closure{group.label(group.identity())};
  std::deque<std::size_t> queue(closure.begin(), closure.end());
  for (auto g : generator_labels) group.element(g);  // range check
  while (!queue.empty()) {
    const auto cur = group.element(queue.front());
    queue.pop_front();
    for (auto g : generator_labels) {
      const auto next = group.label(group.add(cur, group.element(g)));
      if (closure.insert(next).second) queue.push_back(next);
    }
  }
  subgroup_.assign(closure.begin(), closure.end());

  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t i = 0; i < rank_; ++i) gens.push_back(rs.simple_root(i).coords);
  for (auto g : generator_labels) gens.push_back(pi.lift(group.element(g)));
  for (auto& row : lattice_basis(gens)) basis_.emplace_back(std::move(row));

  IntMatrix cols(rank_, basis_.size());
  for (std::size_t c = 0; c < basis_.size(); ++c)
    for (std::size_t r = 0; r < rank_; ++r) cols(r, c) = basis_[c][r];
  quotient_ = LatticeQuotient(cols);

  if (name_.empty()) {
    std::ostringstream os;
    os << "subgroup{";
    for (std::size_t i = 0; i < subgroup_.size(); ++i) os << (i ? "," : "") << subgroup_[i];
    os << '}';
    name_ = os.str();
  }
}

CharacterLattice CharacterLattice::simply_connected(const RootSystem& rs) {
  std::vector<std::size_t> all(rs.fundamental_group().group().order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return CharacterLattice(rs, all, "simply_connected");
}

CharacterLattice CharacterLattice::adjoint(const RootSystem& rs) {
  return CharacterLattice(rs, {}, "adjoint");
}

CharacterLattice CharacterLattice::from_subgroup(const RootSystem& rs,
                                                 const std::vector<std::size_t>& generator_labels) {
  CharacterLattice l(rs, generator_labels, "");
  const std::size_t order = rs.fundamental_group().group().order();
  if (l.subgroup_.size() == 1) l.name_ = "adjoint";
  else if (l.subgroup_.size() == order) l.name_ = "simply_connected";
  else {
    l.name_ = "subgroup:";
    for (std::size_t i = 0; i < l.subgroup_.size(); ++i)
      l.name_ += (i ? "," : "") + std::to_string(l.subgroup_[i]);
  }
  return l;
}

bool CharacterLattice::contains(const Weight& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
  const auto e = quotient_.classify(w);
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

FiniteAbelianGroup::Element class_mod_lattice(const Weight& lambda, const CharacterLattice& l) {
  return l.quotient().classify(lambda);
}

}  // namespace jinv
