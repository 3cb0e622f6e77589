#include <doctest.h>

#include "jinv/schubert.hpp"
#include "oracles/borel.hpp"
#include "oracles/poincare.hpp"

using namespace jinv;

namespace {

std::size_t element(const SchubertCalculus& chow, std::vector<std::uint8_t> word) {
  const auto idx = chow.weyl().find_word(word);
  REQUIRE(idx.has_value());
  return *idx;
}

}  // namespace

TEST_CASE("A2 divisor products") {
  const RootSystem a2 = RootSystem::parse("A2");
  const SchubertCalculus chow(a2, 3);
  const auto h1 = chow.divisor(0);
  const auto h2 = chow.divisor(1);
  const auto s2s1 = element(chow, {1, 0});
  const auto s1s2 = element(chow, {0, 1});

  const auto h1sq = chow.chevalley_multiply(h1, a2.fundamental_weight(0));
  CHECK(h1sq == chow.schubert(s2s1));
  CHECK(chow.chevalley_multiply(h1sq, a2.fundamental_weight(0)).is_zero());

  SchubertClass mixed = chow.schubert(s1s2);
  mixed += chow.schubert(s2s1);
  CHECK(chow.chevalley_multiply(h1, a2.fundamental_weight(1)) == mixed);
  CHECK(chow.chevalley_multiply(h2, a2.fundamental_weight(0)) == mixed);
  // the point class
  const auto top = chow.chevalley_multiply(mixed, a2.fundamental_weight(0));
  CHECK(top.terms.size() == 1);
  CHECK(top.terms.begin()->second == 1);
}

TEST_CASE("Chevalley products commute") {
  for (const char* name : {"B3", "G2", "D4"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::parse(name);
    const SchubertCalculus chow(rs, 3);
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j)
        for (std::size_t k = 0; k < rs.rank(); ++k) {
          const std::vector<Weight> a{rs.fundamental_weight(i), rs.fundamental_weight(j), rs.fundamental_weight(k)};
          const std::vector<Weight> b{rs.fundamental_weight(k), rs.fundamental_weight(i), rs.fundamental_weight(j)};
          CHECK(chow.monomial_class(a) == chow.monomial_class(b));
        }
  }
}

TEST_CASE("basis sizes match length counts") {
  const RootSystem f4 = RootSystem::parse("F4");
  const SchubertCalculus chow(f4, 4);
  const auto expected = oracle::poincare_coefficients(oracle::degrees_of('F', 4));
  for (int m = 0; m <= 4; ++m) CHECK(chow.basis_size(m) == expected[static_cast<std::size_t>(m)]);
  CHECK_THROWS(chow.basis(5));
}

TEST_CASE("Borel presentation agrees in low degree") {
  const std::vector<std::pair<std::string, int>> cases = {{"A2", 3}, {"B2", 4}, {"G2", 3}, {"A3", 3}, {"B3", 2}};
  for (const auto& [name, top] : cases) {
    const RootSystem rs = RootSystem::parse(name);
    const SchubertCalculus chow(rs, top);
    for (int d = 1; d <= top; ++d) {
      CAPTURE(name);
      CAPTURE(d);
      const auto r = oracle::borel_check(chow, d);
      CHECK(r.kills_invariants);
      CHECK(r.onto());
      CHECK(r.kernel_matches());
    }
  }
}

TEST_CASE("characteristic ideal dimensions") {
  const RootSystem a2 = RootSystem::parse("A2");
  const SchubertCalculus a2chow(a2, 3);
  CHECK(a2chow.ideal_I_degree(CharacterLattice::adjoint(a2), 1, 3).dim() == 1);
  CHECK(a2chow.ideal_I_degree(CharacterLattice::simply_connected(a2), 1, 3).dim() == 2);
  CHECK(a2chow.ideal_I_degree(CharacterLattice::adjoint(a2), 1, 2).dim() == 2);

  const RootSystem e6 = RootSystem::parse("E6");
  const SchubertCalculus e6chow(e6, 2);
  const auto adj = CharacterLattice::adjoint(e6);
  CHECK(e6chow.ideal_I_degree(adj, 1, 3).dim() == 5);
  CHECK(e6chow.ideal_I_degree(adj, 1, 2).dim() == 6);
  // degree-2 part contains the products of degree-1 generators
  const auto i2 = e6chow.ideal_I_degree(adj, 2, 3);
  CHECK(i2.dim() <= e6chow.basis_size(2));
  for (const auto& beta : adj.basis()) {
    const auto sq = e6chow.multiply_divisors(e6chow.char_map_deg1(adj, beta), std::vector<Weight>{beta});
    CHECK(i2.contains(e6chow.coordinates(sq)));
  }
}

TEST_CASE("degree-one characteristic map") {
  const RootSystem b2 = RootSystem::parse("B2");
  const SchubertCalculus chow(b2, 2);
  const auto adj = CharacterLattice::adjoint(b2);
  const auto c = chow.char_map_deg1(adj, b2.simple_root(0));
  CHECK(chow.coordinates(c) == std::vector<std::int64_t>{2, -2});
  CHECK(adj.contains(b2.fundamental_weight(0)));
  CHECK_THROWS(chow.char_map_deg1(adj, b2.fundamental_weight(1)));
}
