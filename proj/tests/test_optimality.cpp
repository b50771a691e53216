#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "copx/instances.hpp"
#include "copx/optimality.hpp"
#include "copx/rng.hpp"

using namespace copx;

namespace {

Instance fig1() { return gen_spanning_trees(Graph::complete(3)); }

RatVec rvec(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

constexpr Regime kRegimes[] = {Regime::nonneg, Regime::signed_support,
                               Regime::general};

}  // namespace

TEST_CASE("regime names and lattices") {
  CHECK(regime_from_name("nonneg") == Regime::nonneg);
  CHECK(regime_from_name("signed_support") == Regime::signed_support);
  CHECK(regime_from_name("general") == Regime::general);
  CHECK_THROWS(regime_from_name("fastest"));
  for (Regime r : kRegimes) CHECK(regime_from_name(regime_name(r)) == r);

  RatVec c{Rat(1), Rat(-2), Rat(0), Rat(mpz_class(-1), mpz_class(3))};
  CHECK(negative_support(c) == std::vector<int>{1, 3});
  Lattice lat = regime_lattice(Regime::signed_support, c);
  CHECK(lat.kind == LatticeKind::shifted_cube);
  CHECK(lat.support == std::vector<int>{1, 3});
  CHECK(regime_lattice(Regime::nonneg, rvec({1, 0})).kind == LatticeKind::cube);
  CHECK(regime_lattice(Regime::general, c).kind == LatticeKind::full);
  CHECK_THROWS_AS(regime_lattice(Regime::nonneg, c), std::invalid_argument);
}

TEST_CASE("unique optimum is certified, non-optima get separators") {
  Instance inst = fig1();
  RatVec c = rvec({0, 1, 1});
  for (Regime r : kRegimes) {
    CAPTURE(regime_name(r));
    auto v0 = decide_optimal(inst, c, 0, r);
    CHECK(v0.optimal);
    CHECK(v0.cross_check);
    CHECK(is_member(v0.witness));
    for (int k : {1, 2}) {
      auto vk = decide_optimal(inst, c, k, r);
      CHECK(!vk.optimal);
      CHECK(vk.cross_check);
      CHECK(!is_member(vk.witness));
    }
  }
}

TEST_CASE("ties are reported on both sides") {
  Instance inst = fig1();
  auto rep = optimal_set(inst, rvec({1, 0, 0}), Regime::nonneg);
  CHECK(rep.optimal == std::vector<int>{1, 2});
  CHECK(rep.brute == std::vector<int>{1, 2});
  CHECK(rep.agree);
  CHECK(rep.verdicts.size() == 3);
  CHECK(!rep.verdicts[0].optimal);

  auto zero = optimal_set(inst, rvec({0, 0, 0}), Regime::general);
  CHECK(zero.optimal == std::vector<int>{0, 1, 2});
  CHECK(zero.agree);
}

TEST_CASE("signed weights shift the lattice by the negative support") {
  Instance inst = fig1();
  RatVec c = rvec({-1, 1, 1});
  auto v = decide_optimal(inst, c, 0, Regime::signed_support);
  CHECK(v.shift_support == std::vector<int>{0});
  CHECK(v.optimal);
  CHECK(v.cross_check);
  auto v1 = decide_optimal(inst, c, 1, Regime::signed_support);
  CHECK(!v1.optimal);
  CHECK(v1.shift_support == std::vector<int>{0});
}

TEST_CASE("verdicts are invariant under positive scaling") {
  Instance inst = gen_tsp_tours(4);
  Rng rng(77);
  for (int it = 0; it < 10; ++it) {
    RatVec c(inst.n);
    for (auto& x : c) x = rng.rat(-6, 6, 4);
    Rat s = rng.rat(1, 9, 5);
    RatVec sc(inst.n);
    for (int i = 0; i < inst.n; ++i) sc[i] = s * c[i];
    for (Regime r : {Regime::signed_support, Regime::general})
      for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k)
        CHECK(decide_optimal(inst, c, k, r).optimal ==
              decide_optimal(inst, sc, k, r).optimal);
  }
}

TEST_CASE("regimes agree wherever they apply") {
  Instance inst = fig1();
  Rng rng(402);
  for (int it = 0; it < 25; ++it) {
    RatVec nonneg_c(3), any_c(3);
    for (auto& x : nonneg_c) x = rng.rat(0, 8, 5);
    for (auto& x : any_c) x = rng.rat(-8, 8, 5);
    for (int k = 0; k < 3; ++k) {
      bool a = decide_optimal(inst, nonneg_c, k, Regime::nonneg).optimal;
      bool b = decide_optimal(inst, nonneg_c, k, Regime::signed_support).optimal;
      bool g = decide_optimal(inst, nonneg_c, k, Regime::general).optimal;
      CHECK(a == b);
      CHECK(b == g);
      CHECK(decide_optimal(inst, any_c, k, Regime::signed_support).optimal ==
            decide_optimal(inst, any_c, k, Regime::general).optimal);
    }
  }
}

TEST_CASE("nonneg regime rejects negative weights") {
  Instance inst = fig1();
  CHECK_THROWS_AS(decide_optimal(inst, rvec({-1, 1, 1}), 0, Regime::nonneg),
                  std::invalid_argument);
}

TEST_CASE("shared cache changes nothing") {
  Instance inst = gen_perfect_matchings(Graph::complete(4));
  GeneratorCache cache(inst);
  Rng rng(9);
  for (int it = 0; it < 15; ++it) {
    RatVec c(inst.n);
    for (auto& x : c) x = rng.rat(-5, 5, 3);
    for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k)
      for (Regime r : {Regime::signed_support, Regime::general}) {
        auto with = decide_optimal(inst, c, k, r, cache);
        auto without = decide_optimal(inst, c, k, r);
        CHECK(with.optimal == without.optimal);
        CHECK(with.cross_check);
        CHECK(without.cross_check);
      }
  }
}

TEST_CASE("random equivalence trials pass and are seed stable") {
  Instance inst = fig1();
  for (Regime r : kRegimes) {
    auto rep = equivalence_trial(inst, r, 40, 1234);
    CHECK(rep.ok);
    CHECK(rep.trials == 40);
    CHECK(rep.checks == 120);
    CHECK(rep.mismatches.empty());
    CHECK(rep.seed == 1234);
    CHECK(rep.regime == r);
  }

  Config two;
  two.workers = 2;
  auto a = equivalence_trial(inst, Regime::general, 25, 99);
  auto b = equivalence_trial(inst, Regime::general, 25, 99, two);
  CHECK(a.checks == b.checks);
  CHECK(a.ok == b.ok);
}
