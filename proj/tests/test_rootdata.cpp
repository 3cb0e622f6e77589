#include <doctest.h>

#include <random>

#include "jinv/rootdata.hpp"

using namespace jinv;

TEST_CASE("positive root counts") {
  const std::vector<std::tuple<char, int, std::size_t>> cases = {
      {'A', 1, 1}, {'A', 2, 3}, {'B', 2, 4}, {'G', 2, 6},  {'A', 3, 6},  {'B', 3, 9},
      {'C', 3, 9}, {'D', 4, 12}, {'F', 4, 24}, {'E', 6, 36}, {'E', 7, 63}, {'E', 8, 120}};
  for (const auto& [t, n, count] : cases) {
    CAPTURE(t);
    CAPTURE(n);
    const RootSystem rs = RootSystem::build(t, n);
    CHECK(rs.positive_roots().size() == count);
    // heights are non-decreasing and simple roots come first
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) CHECK(rs.positive_roots()[i].height == 1);
    for (std::size_t i = 1; i < rs.positive_roots().size(); ++i)
      CHECK(rs.positive_roots()[i - 1].height <= rs.positive_roots()[i].height);
  }
}

TEST_CASE("Cartan conventions") {
  const RootSystem b2 = RootSystem::build('B', 2);
  CHECK(b2.cartan()(1, 0) == -2);
  const RootSystem c3 = RootSystem::build('C', 3);
  CHECK(c3.cartan()(1, 2) == -2);
  const RootSystem g2 = RootSystem::build('G', 2);
  CHECK(g2.cartan()(0, 1) == -3);
  CHECK(g2.cartan()(1, 0) == -1);
  const RootSystem f4 = RootSystem::build('F', 4);
  CHECK(f4.cartan()(1, 2) == -1);
  CHECK(f4.cartan()(2, 1) == -2);
  // simple root alpha_1 of A2 is 2 w_1 - w_2
  CHECK(RootSystem::build('A', 2).simple_root(0) == Weight{2, -1});
}

TEST_CASE("root pairing is integral and reflections permute roots") {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::parse(name);
    for (const auto& beta : rs.positive_roots()) {
      CHECK(beta.pair(beta.weight) == 2);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const Weight image = beta.weight - beta.weight[i] * rs.simple_root(i);
        CHECK(rs.find_root(image).has_value());
      }
    }
  }
}

TEST_CASE("highest roots") {
  CHECK(RootSystem::parse("E8").positive_roots().back().weight == Weight{0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(RootSystem::parse("E6").positive_roots().back().weight == Weight{0, 1, 0, 0, 0, 0});
  CHECK(RootSystem::parse("A3").positive_roots().back().weight == Weight{1, 0, 1});
}

TEST_CASE("fundamental groups") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"A1", "Z/2"}, {"A2", "Z/3"}, {"A4", "Z/5"},          {"B3", "Z/2"}, {"C2", "Z/2"},
      {"D4", "Z/2 x Z/2"}, {"D5", "Z/4"}, {"E6", "Z/3"}, {"E7", "Z/2"},
      {"E8", "trivial"}, {"F4", "trivial"}, {"G2", "trivial"}};
  for (const auto& [name, structure] : cases) {
    CAPTURE(name);
    CHECK(RootSystem::parse(name).fundamental_group().group().describe() == structure);
  }
}

TEST_CASE("classes are constant on root lattice cosets") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (const char* name : {"A3", "D4", "E6", "B2"}) {
    const RootSystem rs = RootSystem::parse(name);
    const auto& pi = rs.fundamental_group();
    for (int t = 0; t < 50; ++t) {
      Weight lambda(rs.rank());
      for (auto& x : lambda.coords) x = d(rng);
      Weight shifted = lambda;
      for (std::size_t i = 0; i < rs.rank(); ++i) shifted += d(rng) * rs.simple_root(i);
      CHECK(pi.classify(lambda) == pi.classify(shifted));
      // lifting returns a representative of the same class
      const auto e = pi.classify(lambda);
      CHECK(pi.classify(pi.lift(e)) == e);
    }
    for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(pi.group().label(pi.classify(rs.simple_root(i))) == 0);
  }
}

TEST_CASE("E6 class normalisation") {
  const RootSystem e6 = RootSystem::parse("E6");
  const auto& pi = e6.fundamental_group();
  CHECK(pi.classify(e6.fundamental_weight(0)) == FiniteAbelianGroup::Element{1});
  CHECK(pi.classify(e6.fundamental_weight(5)) == FiniteAbelianGroup::Element{2});
  CHECK(pi.classify(3 * e6.fundamental_weight(0)) == FiniteAbelianGroup::Element{0});
}

TEST_CASE("finite abelian group labels") {
  const FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  for (std::size_t l = 0; l < g.order(); ++l) CHECK(g.label(g.element(l)) == l);
  CHECK(g.element(1) == FiniteAbelianGroup::Element{0, 1});
  CHECK(g.add({1, 3}, {1, 2}) == FiniteAbelianGroup::Element{0, 1});
  CHECK(g.negate({1, 1}) == FiniteAbelianGroup::Element{1, 3});
  CHECK(FiniteAbelianGroup().trivial());
}

TEST_CASE("character lattices") {
  const RootSystem a2 = RootSystem::parse("A2");
  const auto adj = CharacterLattice::adjoint(a2);
  const auto sc = CharacterLattice::simply_connected(a2);
  CHECK(adj.name() == "adjoint");
  CHECK(adj.quotient().group().describe() == "Z/3");
  CHECK(sc.quotient().group().trivial());
  CHECK(adj.contains(a2.simple_root(0)));
  CHECK_FALSE(adj.contains(a2.fundamental_weight(0)));
  CHECK(sc.contains(a2.fundamental_weight(0)));

  const RootSystem d4 = RootSystem::parse("D4");
  const auto mid = CharacterLattice::from_subgroup(d4, {1});
  CHECK(mid.subgroup_labels().size() == 2);
  CHECK(mid.quotient().group().describe() == "Z/2");
  CHECK(mid.basis().size() == 4);
  CHECK(CharacterLattice::from_subgroup(d4, {1, 2}).name() == "simply_connected");
}

TEST_CASE("invalid root system requests") {
  CHECK_THROWS(RootSystem::build('E', 5));
  CHECK_THROWS(RootSystem::build('D', 3));
  CHECK_THROWS(RootSystem::build('B', 1));
  CHECK_THROWS(RootSystem::build('A', 9));
  CHECK_THROWS(RootSystem::parse("X3"));
  CHECK_THROWS(RootSystem::parse("E"));
  CHECK(RootSystem::parse("e6").name() == "E6");
}
