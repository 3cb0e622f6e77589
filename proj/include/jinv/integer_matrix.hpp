#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jinv {

// Dense row-major integer matrix. Only what the lattice code needs.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<std::int64_t> column(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;

  const std::vector<std::int64_t>& data() const { return data_; }
  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
// u_inverse is carried along so quotient classes can be lifted back.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inverse;
  IntMatrix v;
  std::vector<std::int64_t> diagonal;  // length min(rows, cols)
};

SmithForm smith_normal_form(const IntMatrix& a);

// Echelon basis of the Z-span of the given row vectors (zero rows dropped).
std::vector<std::vector<std::int64_t>> lattice_basis(
    const std::vector<std::vector<std::int64_t>>& generators);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);

// Returns g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

// Inverse of a modulo m; requires gcd(a, m) == 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

}  // namespace jinv
