#include <doctest.h>

#include <algorithm>
#include <set>

#include "jinv/weyl.hpp"
#include "oracles/poincare.hpp"
#include "oracles/weyl_closure.hpp"

using namespace jinv;

namespace {

oracle::Mat as_mat(const WeylElement& w, std::size_t n) {
  oracle::Mat m(n, oracle::IVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = w.matrix[i * n + j];
  return m;
}

}  // namespace

TEST_CASE("group orders match the product of degrees") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::parse(name);
    const WeylGroup w = WeylGroup::enumerate(rs);
    CHECK(w.complete());
    CHECK(w.size() == rs.weyl_order());
    CHECK(w.size() == oracle::product(oracle::degrees_of(rs.type(), static_cast<int>(rs.rank()))));
    CHECK(w.max_length() == static_cast<int>(rs.positive_roots().size()));
  }
}

TEST_CASE("length counts follow the Poincare polynomial") {
  for (const char* name : {"A3", "B3", "G2", "D4", "F4", "E6"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::parse(name);
    const WeylGroup w = WeylGroup::enumerate(rs);
    const auto expected = oracle::poincare_coefficients(oracle::degrees_of(rs.type(), static_cast<int>(rs.rank())));
    const auto counts = w.count_by_length();
    REQUIRE(counts.size() == expected.size());
    for (std::size_t l = 0; l < counts.size(); ++l) CHECK(counts[l] == expected[l]);
  }
}

TEST_CASE("elements agree with brute-force closure") {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::parse(name);
    const WeylGroup w = WeylGroup::enumerate(rs);
    std::set<oracle::Mat> ours;
    for (const auto& e : w.elements()) ours.insert(as_mat(e, rs.rank()));
    const auto closure = oracle::weyl_closure(rs.cartan());
    CHECK(ours == std::set<oracle::Mat>(closure.begin(), closure.end()));
  }
}

TEST_CASE("reduced words, descents and inversions") {
  const RootSystem rs = RootSystem::parse("B3");
  const WeylGroup w = WeylGroup::enumerate(rs);
  for (std::size_t idx = 0; idx < w.size(); ++idx) {
    const auto& e = w[idx];
    CHECK(e.word.size() == static_cast<std::size_t>(e.length));
    CHECK(w.inversion_count(idx) == e.length);
    CHECK(w.find_word(e.word) == idx);
    CHECK(w.find(e.matrix) == idx);
    // i is a descent exactly when w s_i is shorter
    const auto desc = w.descent_set(idx);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto word = e.word;
      word.push_back(static_cast<std::uint8_t>(i));
      const auto prod = w.find_word(word);
      REQUIRE(prod.has_value());
      const bool shorter = w[*prod].length < e.length;
      CHECK(shorter == (std::find(desc.begin(), desc.end(), i) != desc.end()));
    }
    // act and act_inverse are mutually inverse
    const Weight lambda{3, -1, 2};
    CHECK(w.act_inverse(idx, w.act(idx, lambda)) == lambda);
  }
  CHECK(word_to_string(w[w.size() - 1].word).size() > 0);
}

TEST_CASE("simple reflection action") {
  const RootSystem a2 = RootSystem::parse("A2");
  CHECK(simple_reflection_action(a2, 0, a2.fundamental_weight(0)) == Weight{-1, 1});
  CHECK(simple_reflection_action(a2, 0, a2.simple_root(0)) == -a2.simple_root(0));
  const WeylGroup w = WeylGroup::enumerate(a2);
  const auto s1s2 = w.find_word(std::vector<std::uint8_t>{0, 1});
  REQUIRE(s1s2);
  CHECK(w.act(*s1s2, a2.fundamental_weight(1)) ==
        simple_reflection_action(a2, 0, simple_reflection_action(a2, 1, a2.fundamental_weight(1))));
}

TEST_CASE("truncated enumeration and guard") {
  const RootSystem e8 = RootSystem::parse("E8");
  const WeylGroup low = WeylGroup::enumerate(e8, 3);
  CHECK_FALSE(low.complete());
  const auto expected = oracle::poincare_coefficients(oracle::degrees_of('E', 8));
  const auto counts = low.count_by_length();
  REQUIRE(counts.size() == 4);
  for (std::size_t l = 0; l < 4; ++l) CHECK(counts[l] == expected[l]);
  CHECK_THROWS_AS(WeylGroup::enumerate(e8, -1, 1000), SizeGuardError);
}
