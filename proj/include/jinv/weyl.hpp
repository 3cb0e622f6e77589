#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "jinv/rootdata.hpp"

namespace jinv {

inline constexpr std::size_t kDefaultWeylGuard = 1'000'000;

// Thrown when an enumeration would exceed the configured element bound.
class SizeGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
Weight simple_reflection_action(const RootSystem& rs, std::size_t i, const Weight& lambda);

struct WeylElement {
  // Row-major n x n action on omega-coordinates; column j is w(omega_j).
  std::vector<std::int64_t> matrix;
  int length = 0;
  // Lexicographically least reduced word, 0-based simple indices,
  // read left to right as a product s_{word[0]} s_{word[1]} ...
  std::vector<std::uint8_t> word;
};

std::string word_to_string(std::span<const std::uint8_t> word);

// Weyl group elements, closed under right multiplication by simple
// reflections, ordered by (length, lexicographically least reduced word).
class WeylGroup {
public:
  // max_length < 0 means the whole group.
  static WeylGroup enumerate(const RootSystem& rs, int max_length = -1,
                             std::size_t guard = kDefaultWeylGuard);

  const RootSystem& root_system() const { return *rs_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return elements_.size(); }
  bool complete() const { return complete_; }
  int max_length() const { return static_cast<int>(level_offsets_.size()) - 2; }

  const WeylElement& operator[](std::size_t idx) const { return elements_[idx]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  // Index range [first, last) of elements of the given length.
  std::pair<std::size_t, std::size_t> length_range(int length) const;
  std::vector<std::size_t> count_by_length() const;

  std::optional<std::size_t> find(std::span<const std::int64_t> matrix) const;
  std::optional<std::size_t> find_word(std::span<const std::uint8_t> word) const;

  Weight act(std::size_t idx, const Weight& lambda) const;
  Weight act_inverse(std::size_t idx, const Weight& lambda) const;
  std::vector<std::int64_t> multiply(std::size_t a, std::size_t b) const;

  // {i : w(alpha_i) is a negative root}
  std::vector<std::size_t> descent_set(std::size_t idx) const;
  // Number of positive roots sent to negative roots.
  int inversion_count(std::size_t idx) const;

private:
  WeylGroup() = default;

  const RootSystem* rs_ = nullptr;
  std::size_t rank_ = 0;
  bool complete_ = false;
  std::vector<WeylElement> elements_;
  std::vector<std::size_t> level_offsets_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, VectorHash> index_;
};

Weight act(const WeylElement& w, const Weight& lambda);

}  // namespace jinv
