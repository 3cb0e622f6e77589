#include <doctest.h>

#include <algorithm>
#include <random>

#include "jinv/jinvariant.hpp"

using namespace jinv;

namespace {

const std::string kData = JINV_TEST_DATA;

std::vector<int> j1_set(std::int64_t index) {
  const RootSystem e6 = RootSystem::parse("E6");
  const auto model = BrauerModel::uniform(e6.fundamental_group().group(), 3, index);
  const auto pres = kac_presentation("E6", "adjoint", 3);
  const auto c = j1_constraints(model, e6, CharacterLattice::adjoint(e6), pres);
  REQUIRE(c.generators.size() == 2);
  return c.generators[0].admissible;
}

}  // namespace

TEST_CASE("bundled and user presentations") {
  const auto e6 = kac_presentation("e6", "adjoint", 3);
  CHECK(e6.degrees == std::vector<int>{1, 4});
  CHECK(e6.exponents == std::vector<int>{2, 1});
  CHECK(e6.degree_one_count() == 1);
  try {
    kac_presentation("A2", "adjoint", 3);
    FAIL("expected a missing-entry error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("kac_data") != std::string::npos);
  }
  const auto user = load_kac_data(kData + "/synthetic_presentation.json");
  REQUIRE(user.size() == 1);
  CHECK(kac_presentation("A2", "adjoint", 3, user).degrees == std::vector<int>{1, 3});
  CHECK_THROWS(load_kac_data(kData + "/does_not_exist.json"));
  CHECK_THROWS(load_kac_data(kData + "/e6_minimal.json"));
}

TEST_CASE("degree-one generators") {
  const RootSystem e6 = RootSystem::parse("E6");
  CHECK(degree1_generators(CharacterLattice::adjoint(e6), 3) == std::vector<std::size_t>{0});
  CHECK(degree1_generators(CharacterLattice::adjoint(e6), 2).empty());
  CHECK(degree1_generators(CharacterLattice::simply_connected(e6), 3).empty());
  const RootSystem d4 = RootSystem::parse("D4");
  CHECK(fp_rank(CharacterLattice::adjoint(d4), 2) == 2);
  CHECK(degree1_generators(CharacterLattice::adjoint(d4), 2).size() == 2);
  const RootSystem a3 = RootSystem::parse("A3");
  CHECK(fp_rank(CharacterLattice::adjoint(a3), 2) == 1);
  CHECK(degree1_generators(CharacterLattice::adjoint(a3), 2) == std::vector<std::size_t>{0});
}

TEST_CASE("DegLex ordering") {
  KacPresentation pres{"X", "adjoint", 3, {1, 1, 2}, {1, 1, 1}};
  const std::vector<int> a{2, 0, 0}, b{0, 2, 0}, c{0, 0, 1}, d{1, 0, 0};
  CHECK(deglex_compare(d, a, pres) == std::strong_ordering::less);
  // equal degree: compare at the last differing position
  CHECK(deglex_compare(a, b, pres) == std::strong_ordering::less);
  CHECK(deglex_compare(b, c, pres) == std::strong_ordering::less);
  CHECK(deglex_compare(c, c, pres) == std::strong_ordering::equal);
  CHECK(weighted_degree(c, pres) == 2);
  CHECK_THROWS(weighted_degree(std::vector<int>{1}, pres));
}

TEST_CASE("DegLex is a total order compatible with degree") {
  KacPresentation pres{"X", "adjoint", 3, {1, 2, 3}, {3, 3, 3}};
  std::vector<std::vector<int>> all;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) all.push_back({x, y, z});
  std::mt19937 rng(3);
  std::shuffle(all.begin(), all.end(), rng);
  std::sort(all.begin(), all.end(), [&](const auto& m, const auto& n) { return deglex_compare(m, n, pres) < 0; });
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(deglex_compare(all[i - 1], all[i], pres) < 0);
    CHECK(weighted_degree(all[i - 1], pres) <= weighted_degree(all[i], pres));
    CHECK(deglex_compare(all[i], all[i - 1], pres) > 0);
  }
}

TEST_CASE("j_1 for E6 at p = 3") {
  CHECK(j1_set(1) == std::vector<int>{0});
  CHECK(j1_set(3) == std::vector<int>{1});
  CHECK(j1_set(9) == std::vector<int>{2});
  CHECK(j1_set(27) == std::vector<int>{2});
}

TEST_CASE("degree-four generator keeps its full range") {
  const RootSystem e6 = RootSystem::parse("E6");
  for (std::int64_t index : {1, 3, 9, 27}) {
    const auto model = BrauerModel::uniform(e6.fundamental_group().group(), 3, index);
    const auto c = j1_constraints(model, e6, CharacterLattice::adjoint(e6), kac_presentation("E6", "adjoint", 3));
    CHECK(c.generators[1].admissible == std::vector<int>{0, 1});
    CHECK_FALSE(c.generators[1].weight.has_value());
    CHECK(c.common.i_c == index);
    CHECK_FALSE(c.generators[0].notes.empty());
  }
}

TEST_CASE("constraint preconditions") {
  const RootSystem e6 = RootSystem::parse("E6");
  const auto& g = e6.fundamental_group().group();
  const auto pres = kac_presentation("E6", "adjoint", 3);
  CHECK_THROWS(j1_constraints(BrauerModel(g, {1, 3, 9}, 3), e6, CharacterLattice::adjoint(e6), pres));
  CHECK_THROWS(j1_constraints(BrauerModel::uniform(g, 2, 3), e6, CharacterLattice::adjoint(e6), pres));
  // wrong number of degree-one generators for the simply connected lattice
  CHECK_THROWS(j1_constraints(BrauerModel::uniform(g, 3, 3), e6, CharacterLattice::simply_connected(e6), pres));

  const RootSystem a2 = RootSystem::parse("A2");
  const auto user = load_kac_data(kData + "/synthetic_presentation.json");
  const auto c = j1_constraints(BrauerModel::uniform(a2.fundamental_group().group(), 3, 3), a2,
                                CharacterLattice::adjoint(a2), kac_presentation("A2", "adjoint", 3, user));
  CHECK(c.generators[0].admissible == std::vector<int>{1});
}

TEST_CASE("ideal comparison") {
  Workspace e6(RootSystem::parse("E6"), 3);
  const auto lattice = CharacterLattice::adjoint(e6.root_system());
  const auto& g = e6.root_system().fundamental_group().group();

  const auto nine = compare_ideals(e6, BrauerModel::uniform(g, 3, 9), lattice, 3);
  CHECK(nine.premise == "v_p(i_c) > 1");
  CHECK(nine.verified);
  REQUIRE(nine.degrees.size() == 3);
  const std::vector<std::pair<std::size_t, std::size_t>> dims = {{5, 5}, {19, 19}, {49, 49}};
  for (std::size_t m = 0; m < 3; ++m) {
    CHECK(nine.degrees[m].applicable);
    CHECK(nine.degrees[m].equal);
    CHECK(nine.degrees[m].dim_I == dims[m].first);
    CHECK(nine.degrees[m].dim_Ixi == dims[m].second);
  }

  const auto three = compare_ideals(e6, BrauerModel::uniform(g, 3, 3), lattice, 3);
  CHECK(three.premise == "v_p(i_c) > 0");
  CHECK(three.verified);
  CHECK(three.degrees[0].applicable);
  CHECK(three.degrees[0].equal);
  CHECK_FALSE(three.degrees[2].applicable);

  const auto split = compare_ideals(e6, BrauerModel::split(g, 3), lattice, 3, 1);
  CHECK(split.premise == "vacuous");
  CHECK(split.degrees.size() == 1);
  CHECK_FALSE(split.degrees[0].applicable);

  Workspace a1(RootSystem::parse("A1"), 1);
  const auto pgl2 = compare_ideals(a1, BrauerModel::uniform(a1.root_system().fundamental_group().group(), 2, 2),
                                   CharacterLattice::adjoint(a1.root_system()), 2);
  REQUIRE(pgl2.degrees.size() == 1);
  CHECK(pgl2.degrees[0].dim_I == 0);
  CHECK(pgl2.degrees[0].dim_Ixi == 0);
  CHECK(pgl2.verified);
}

TEST_CASE("models that do not split on the lattice are reported") {
  Workspace a2(RootSystem::parse("A2"), 1);
  const auto model = BrauerModel::uniform(a2.root_system().fundamental_group().group(), 3, 9);
  const auto r = compare_ideals(a2, model, CharacterLattice::simply_connected(a2.root_system()), 3);
  CHECK_FALSE(r.split_on_lattice);
  CHECK(r.premise == "vacuous");
}
