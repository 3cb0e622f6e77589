#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jinv {

// A subspace of F_p^n kept as rows in reduced echelon form.
class SubspaceBasis {
public:
  SubspaceBasis() = default;
  SubspaceBasis(std::int64_t prime, std::size_t ambient_dim, int degree = 0);

  std::int64_t prime() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Entries may be arbitrary integers; they are reduced mod p.
  // Returns true if the dimension grew.
  bool insert(std::span<const std::int64_t> v);
  bool contains(std::span<const std::int64_t> v) const;
  bool is_subspace_of(const SubspaceBasis& other) const;
  bool full() const { return rows_.size() == n_; }

  // Residual of v after elimination against the current rows.
  std::vector<std::int64_t> reduce(std::span<const std::int64_t> v) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

private:
  void check(std::span<const std::int64_t> v) const;

  std::int64_t p_ = 2;
  std::size_t n_ = 0;
  int degree_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

}  // namespace jinv
