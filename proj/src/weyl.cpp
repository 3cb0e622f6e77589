#include "jinv/weyl.hpp"

#include <sstream>

namespace jinv {

Weight simple_reflection_action(const RootSystem& rs, std::size_t i, const Weight& lambda) {
  if (i >= rs.rank()) throw std::out_of_range("simple reflection index out of range");
  if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = lambda;
  const std::int64_t k = lambda[i];
  for (std::size_t r = 0; r < rs.rank(); ++r) out[r] -= k * rs.cartan()(r, i);
  return out;
}

std::string word_to_string(std::span<const std::uint8_t> word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << (word[k] + 1);
  return os.str();
}

Weight act(const WeylElement& w, const Weight& lambda) {
  const std::size_t n = lambda.rank();
  if (w.matrix.size() != n * n) throw std::invalid_argument("weight rank mismatch");
  Weight out(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc += w.matrix[r * n + c] * lambda[c];
    out[r] = acc;
  }
  return out;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, int max_length, std::size_t guard) {
  const std::size_t n = rs.rank();
  if (max_length < 0 && rs.weyl_order() > guard) {
    throw SizeGuardError("refusing to enumerate W(" + rs.name() + ") of order " +
                         std::to_string(rs.weyl_order()) + ": exceeds size guard of " +
                         std::to_string(guard) + " elements");
  }

  WeylGroup g;
  g.rs_ = &rs;
  g.rank_ = n;

  WeylElement id;
  id.matrix.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id.matrix[i * n + i] = 1;
  g.index_.emplace(id.matrix, 0);
  g.elements_.push_back(std::move(id));
  g.level_offsets_ = {0, 1};

  const auto& cartan = rs.cartan();
  for (int len = 0; max_length < 0 || len < max_length; ++len) {
    const std::size_t begin = g.level_offsets_[static_cast<std::size_t>(len)];
    const std::size_t end = g.level_offsets_[static_cast<std::size_t>(len) + 1];
    // Parents are visited in lexicographic order of their words and the
    // generator index increases, so first discovery is the lex-least word.
    for (std::size_t p = begin; p < end; ++p) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> m = g.elements_[p].matrix;
        // right multiplication by s_i only rewrites column i
        for (std::size_t r = 0; r < n; ++r) {
          std::int64_t acc = m[r * n + i];
          for (std::size_t k = 0; k < n; ++k) acc -= cartan(k, i) * g.elements_[p].matrix[r * n + k];
          m[r * n + i] = acc;
        }
        if (g.index_.contains(m)) continue;
        if (g.elements_.size() >= guard)
          throw SizeGuardError("Weyl enumeration of " + rs.name() + " exceeds size guard of " +
                               std::to_string(guard) + " elements");
        WeylElement e;
        e.length = len + 1;
        e.word = g.elements_[p].word;
        e.word.push_back(static_cast<std::uint8_t>(i));
        e.matrix = std::move(m);
        g.index_.emplace(e.matrix, g.elements_.size());
        g.elements_.push_back(std::move(e));
      }
    }
    if (g.elements_.size() == end) {
      g.complete_ = true;
      break;
    }
    g.level_offsets_.push_back(g.elements_.size());
  }
  if (!g.complete_ && g.elements_.size() == rs.weyl_order()) g.complete_ = true;
  return g;
}

std::pair<std::size_t, std::size_t> WeylGroup::length_range(int length) const {
  if (length < 0 || static_cast<std::size_t>(length) + 1 >= level_offsets_.size())
    throw std::out_of_range("length " + std::to_string(length) + " not enumerated");
  return {level_offsets_[static_cast<std::size_t>(length)],
          level_offsets_[static_cast<std::size_t>(length) + 1]};
}

std::vector<std::size_t> WeylGroup::count_by_length() const {
  std::vector<std::size_t> counts;
  for (std::size_t l = 0; l + 1 < level_offsets_.size(); ++l)
    counts.push_back(level_offsets_[l + 1] - level_offsets_[l]);
  return counts;
}

std::optional<std::size_t> WeylGroup::find(std::span<const std::int64_t> matrix) const {
  auto it = index_.find(std::vector<std::int64_t>(matrix.begin(), matrix.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeylGroup::find_word(std::span<const std::uint8_t> word) const {
  const std::size_t n = rank_;
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  const auto& cartan = rs_->cartan();
  for (auto i : word) {
    if (i >= n) throw std::out_of_range("simple reflection index out of range");
    std::vector<std::int64_t> next = m;
    for (std::size_t r = 0; r < n; ++r) {
      std::int64_t acc = m[r * n + i];
      for (std::size_t k = 0; k < n; ++k) acc -= cartan(k, i) * m[r * n + k];
      next[r * n + i] = acc;
    }
    m = std::move(next);
  }
  return find(m);
}

Weight WeylGroup::act(std::size_t idx, const Weight& lambda) const {
  return jinv::act(elements_.at(idx), lambda);
}

Weight WeylGroup::act_inverse(std::size_t idx, const Weight& lambda) const {
  // w = s_{a1} ... s_{ak}  =>  w^{-1} = s_{ak} ... s_{a1}
  Weight out = lambda;
  for (auto i : elements_.at(idx).word) out = simple_reflection_action(*rs_, i, out);
  return out;
}

std::vector<std::int64_t> WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const std::size_t n = rank_;
  const auto& x = elements_.at(a).matrix;
  const auto& y = elements_.at(b).matrix;
  std::vector<std::int64_t> out(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t v = x[r * n + k];
      if (v == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out[r * n + c] += v * y[k * n + c];
    }
  return out;
}

std::vector<std::size_t> WeylGroup::descent_set(std::size_t idx) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank_; ++i) {
    const auto ref = rs_->find_root(act(idx, rs_->simple_root(i)));
    if (!ref) throw std::logic_error("Weyl element does not map roots to roots");
    if (ref->sign < 0) out.push_back(i);
  }
  return out;
}

int WeylGroup::inversion_count(std::size_t idx) const {
  int count = 0;
  for (const auto& root : rs_->positive_roots()) {
    const auto ref = rs_->find_root(act(idx, root.weight));
    if (!ref) throw std::logic_error("Weyl element does not map roots to roots");
    if (ref->sign < 0) ++count;
  }
  return count;
}

}  // namespace jinv
