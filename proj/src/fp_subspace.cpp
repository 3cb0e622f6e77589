#include "jinv/fp_subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "jinv/integer_matrix.hpp"

namespace jinv {

SubspaceBasis::SubspaceBasis(std::int64_t prime, std::size_t ambient_dim, int degree)
    : p_(prime), n_(ambient_dim), degree_(degree) {
  if (prime < 2) throw std::invalid_argument("modulus must be a prime >= 2");
}

void SubspaceBasis::check(std::span<const std::int64_t> v) const {
  if (v.size() != n_) throw std::invalid_argument("vector does not match ambient dimension");
}

std::vector<std::int64_t> SubspaceBasis::reduce(std::span<const std::int64_t> v) const {
  check(v);
  std::vector<std::int64_t> r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = floor_mod(v[i], p_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::int64_t c = r[pivots_[k]];
    if (c == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t i = pivots_[k]; i < n_; ++i) r[i] = floor_mod(r[i] - c * row[i], p_);
  }
  return r;
}

bool SubspaceBasis::insert(std::span<const std::int64_t> v) {
  auto r = reduce(v);
  const auto it = std::find_if(r.begin(), r.end(), [](std::int64_t x) { return x != 0; });
  if (it == r.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - r.begin());
  const std::int64_t inv = inverse_mod(r[pivot], p_);
  for (auto& x : r) x = (x * inv) % p_;
  // keep existing rows reduced in the new pivot column
  for (auto& row : rows_) {
    const std::int64_t c = row[pivot];
    if (c == 0) continue;
    for (std::size_t i = pivot; i < n_; ++i) row[i] = floor_mod(row[i] - c * r[i], p_);
  }
  const auto pos = static_cast<std::size_t>(
      std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  return true;
}

bool SubspaceBasis::contains(std::span<const std::int64_t> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

bool SubspaceBasis::is_subspace_of(const SubspaceBasis& other) const {
  if (other.p_ != p_ || other.n_ != n_) return false;
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const auto& row) { return other.contains(row); });
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
  // reduced echelon form is unique
  return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
}

}  // namespace jinv
