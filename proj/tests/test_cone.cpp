#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "copx/cone.hpp"
#include "copx/errors.hpp"
#include "copx/hull.hpp"
#include "copx/instances.hpp"
#include "copx/rng.hpp"
#include "copx/sign_lattice.hpp"

using namespace copx;

namespace {

Instance fig1() { return gen_spanning_trees(Graph::complete(3)); }

std::vector<SignVector> fig1_cube_gens() {
  return select_generators(fig1(), Lattice::cube(3), 0, {}, DominanceSel::all()).members;
}

std::vector<SignVector> fig1_full_gens() {
  return select_generators(fig1(), Lattice::full(3), 0, {}, DominanceSel::all()).members;
}

RatVec rvec(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

RatVec random_target(Rng& rng, int n) {
  RatVec t(n);
  for (auto& x : t) x = rng.rat(-10, 10, 8);
  return t;
}

std::vector<SignVector> random_gens(Rng& rng, int n, int count) {
  std::set<SignVector> out;
  while (static_cast<int>(out.size()) < count) {
    SignVector h(n);
    bool nonzero = false;
    for (auto& e : h) {
      e = static_cast<std::int8_t>(rng.uniform(-1, 1));
      nonzero |= e != 0;
    }
    if (nonzero) out.insert(h);
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("membership basics") {
  std::vector<SignVector> gens{{1, 0}, {0, 1}};

  auto zero = cone_member(gens, rvec({0, 0}));
  REQUIRE(is_member(zero));
  CHECK(std::get<ConeCertificate>(zero).gamma.empty());

  auto inside = cone_member(gens, {Rat(3), Rat(mpz_class(1), mpz_class(2))});
  REQUIRE(is_member(inside));
  verify_member_result(gens, {Rat(3), Rat(mpz_class(1), mpz_class(2))}, inside);

  auto outside = cone_member(gens, rvec({-1, 1}));
  REQUIRE(!is_member(outside));
  verify_member_result(gens, rvec({-1, 1}), outside);

  auto none = cone_member(std::vector<SignVector>{}, rvec({1, 0}));
  CHECK(!is_member(none));
  CHECK(is_member(cone_member(std::vector<SignVector>{}, rvec({0, 0}))));

  CHECK_THROWS_AS(cone_member(gens, rvec({1, 0, 0})), DimensionError);
}

TEST_CASE("certificates have canonical structure") {
  auto gens = fig1_cube_gens();
  Rng rng(17);
  for (int it = 0; it < 50; ++it) {
    RatVec t = random_target(rng, 3);
    auto r = cone_member(gens, t);
    verify_member_result(gens, t, r);
    if (is_member(r)) {
      const auto& gamma = std::get<ConeCertificate>(r).gamma;
      for (std::size_t i = 0; i < gamma.size(); ++i) {
        CHECK(gamma[i].second.sgn() > 0);
        CHECK(gamma[i].first >= 0);
        CHECK(gamma[i].first < static_cast<int>(gens.size()));
        if (i) CHECK(gamma[i - 1].first < gamma[i].first);
      }
    } else {
      const auto& y = std::get<FarkasCertificate>(r).y;
      CHECK(dot(y, t).sgn() > 0);
      for (const auto& g : gens) CHECK(dot_rat(g, y).sgn() <= 0);
    }
  }
}

TEST_CASE("membership agrees with the halfspace description of the cone") {
  Rng rng(91);
  for (int round = 0; round < 30; ++round) {
    int n = static_cast<int>(rng.uniform(2, 4));
    auto gens = random_gens(rng, n, static_cast<int>(rng.uniform(2, 6)));
    HRep hs = cone_halfspaces(gens);
    for (int it = 0; it < 35; ++it) {
      RatVec t = random_target(rng, n);
      auto r = cone_member(gens, t);
      verify_member_result(gens, t, r);
      CHECK(is_member(r) == hrep_satisfied(hs, t));
    }
  }
}

TEST_CASE("irreducible subset spans the same cone") {
  GeneratorSet gs;
  gs.lattice = Lattice::full(3);
  gs.members = fig1_full_gens();
  REQUIRE(gs.members.size() == 13);

  GeneratorSet irr = irreducible_subset(gs);
  CHECK(irr.members ==
        std::vector<SignVector>{{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}, {1, 1, 1}});

  for (const auto& g : gs.members) {
    if (std::count(irr.members.begin(), irr.members.end(), g)) continue;
    CHECK(is_member(cone_member(irr.members, to_ratvec(g))));
  }
  for (std::size_t i = 0; i < irr.members.size(); ++i)
    CHECK(requires_generator(irr.members, to_ratvec(irr.members[i]),
                             static_cast<int>(i)));

  Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    RatVec t = random_target(rng, 3);
    CHECK(is_member(cone_member(gs.members, t)) ==
          is_member(cone_member(irr.members, t)));
  }
}

TEST_CASE("elementwise thinning equals the irreducible subset on pointed cones") {
  GeneratorSet gs;
  gs.lattice = Lattice::cube(3);
  gs.members = fig1_cube_gens();

  GeneratorSet elem = elementwise_minimal(gs);
  CHECK(elem.members == std::vector<SignVector>{{0, 0, 1}, {0, 1, 0}, {1, 1, 1}});
  CHECK(elem.members == irreducible_subset(gs).members);
  CHECK(lineality_basis(gs.members).empty());
}

TEST_CASE("elementwise thinning under-generates when the cone has lineality") {
  GeneratorSet gs;
  gs.lattice = Lattice::full(3);
  gs.members = fig1_full_gens();

  GeneratorSet elem = elementwise_minimal(gs);
  CHECK(elem.members == std::vector<SignVector>{{-1, -1, -1}, {1, 1, 1}});

  auto lin = lineality_basis(gs.members);
  REQUIRE(lin.size() == 1);
  CHECK(lin[0] == rvec({1, 1, 1}));

  RatVec lost = rvec({0, 0, 1});
  CHECK(is_member(cone_member(gs.members, lost)));
  CHECK(!is_member(cone_member(elem.members, lost)));
}

TEST_CASE("conformal reduction preserves the cone") {
  auto gens = fig1_full_gens();
  std::vector<int> keep = conformal_reduce(gens);
  CHECK(std::is_sorted(keep.begin(), keep.end()));
  CHECK(keep.size() < gens.size());

  std::vector<SignVector> kept;
  for (int i : keep) kept.push_back(gens[static_cast<std::size_t>(i)]);
  for (const auto& g : gens)
    CHECK(is_member(cone_member(kept, to_ratvec(g))));

  Rng rng(23);
  for (int it = 0; it < 100; ++it) {
    RatVec t = random_target(rng, 3);
    CHECK(is_member(cone_member(gens, t)) == is_member(cone_member(kept, t)));
  }
}

TEST_CASE("subset membership reports indices into the full list") {
  std::vector<SignVector> gens{{1, 0}, {0, 1}, {1, 1}};
  auto r = cone_member_subset(gens, {0, 2}, rvec({2, 1}));
  REQUIRE(is_member(r));
  for (const auto& [idx, coef] : std::get<ConeCertificate>(r).gamma) {
    CHECK((idx == 0 || idx == 2));
    CHECK(coef.sgn() > 0);
  }
  verify_member_result(gens, rvec({2, 1}), r);

  auto miss = cone_member_subset(gens, {0}, rvec({0, 1}));
  CHECK(!is_member(miss));
}

TEST_CASE("requires_generator distinguishes load-bearing members") {
  auto gens = fig1_cube_gens();
  REQUIRE(gens == std::vector<SignVector>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}});

  CHECK(!requires_generator(gens, rvec({0, 1, 1}), 2));
  CHECK(requires_generator(gens, rvec({1, 1, 1}), 3));
  CHECK(!requires_generator(gens, rvec({1, 1, 1}), 0));
  CHECK_THROWS_AS(requires_generator(gens, rvec({-1, 0, 0}), 1), std::invalid_argument);
}

TEST_CASE("verify_member_result rejects forged certificates") {
  std::vector<SignVector> gens{{1, 0}, {0, 1}};
  MemberResult bad_gamma = ConeCertificate{{{0, Rat(1)}}};
  CHECK_THROWS_AS(verify_member_result(gens, rvec({2, 0}), bad_gamma), std::logic_error);
  MemberResult bad_farkas = FarkasCertificate{rvec({1, 0})};
  CHECK_THROWS_AS(verify_member_result(gens, rvec({2, 0}), bad_farkas), std::logic_error);
  MemberResult ok = ConeCertificate{{{0, Rat(2)}}};
  CHECK_NOTHROW(verify_member_result(gens, rvec({2, 0}), ok));
}
