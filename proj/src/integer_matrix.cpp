#include "jinv/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace jinv {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t x = 0, y = 0;
  if (extended_gcd(floor_mod(a, m), m, x, y) != 1)
    throw std::invalid_argument("element is not a unit modulo m");
  return floor_mod(x, m);
}

namespace {

// Elementary operations on the working matrix, mirrored into the transforms.
struct SmithState {
  IntMatrix a, u, u_inv, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(a.row(i).begin(), a.row(i).end(), a.row(j).begin());
    std::swap_ranges(u.row(i).begin(), u.row(i).end(), u.row(j).begin());
    for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv(r, i), u_inv(r, j));
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, std::int64_t c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) += c * a(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) += c * u(j, k);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, j) -= c * u_inv(r, i);
  }
  void negate_row(std::size_t i) {
    for (auto& x : a.row(i)) x = -x;
    for (auto& x : u.row(i)) x = -x;
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, std::int64_t c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += c * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += c * v(r, j);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  SmithState st{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  auto& a = st.a;
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pr = m, pc = n;
      std::int64_t best = 0;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          const std::int64_t x = std::llabs(a(r, c));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) break;
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        st.add_row(r, t, -(a(r, t) / a(t, t)));
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        st.add_col(c, t, -(a(t, c) / a(t, t)));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole remaining block.
      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            st.add_row(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) st.negate_row(t);
  }

  SmithForm out{std::move(st.u), std::move(st.u_inv), std::move(st.v), {}};
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a(t, t);
  return out;
}

std::vector<std::vector<std::int64_t>> lattice_basis(
    const std::vector<std::vector<std::int64_t>>& generators) {
  if (generators.empty()) return {};
  auto rows = generators;
  const std::size_t n = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < n && pivot_row < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (rows[r][c] != 0 &&
            (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool reduced = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        const std::int64_t q = rows[r][c] / rows[pivot_row][c];
        if (q != 0)
          for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[pivot_row][k];
        if (rows[r][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    // Hermite-style reduction of the entries above the pivot.
    for (std::size_t r = 0; r < pivot_row; ++r) {
      const std::int64_t q = floor_mod(rows[r][c], rows[pivot_row][c]) - rows[r][c];
      if (q != 0) {
        const std::int64_t mult = q / rows[pivot_row][c];
        for (std::size_t k = 0; k < n; ++k) rows[r][k] += mult * rows[pivot_row][k];
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace jinv
