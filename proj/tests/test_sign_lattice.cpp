#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "copx/errors.hpp"
#include "copx/instances.hpp"
#include "copx/sign_lattice.hpp"

using namespace copx;

namespace {

Instance fig1() { return gen_spanning_trees(Graph::complete(3)); }

std::set<SignVector> as_set(const std::vector<SignVector>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("lattice enumeration sizes and lex order") {
  CHECK(lattice_size(Lattice::cube(3)) == 8);
  CHECK(lattice_size(Lattice::full(3)) == 27);
  CHECK(lattice_size(Lattice::shifted(4, {1, 3})) == 16);

  auto cube = enum_lattice(Lattice::cube(2));
  CHECK(cube == std::vector<SignVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  auto full = enum_lattice(Lattice::full(2));
  CHECK(full.size() == 9);
  CHECK(full.front() == SignVector{-1, -1});
  CHECK(full.back() == SignVector{1, 1});
  CHECK(std::is_sorted(full.begin(), full.end()));

  auto shifted = enum_lattice(Lattice::shifted(2, {0}));
  CHECK(shifted == std::vector<SignVector>{{-1, 0}, {-1, 1}, {0, 0}, {0, 1}});
}

TEST_CASE("enumeration respects size caps") {
  LatticeCaps caps;
  caps.full_lattice_cap = 3;
  caps.cube_cap = 5;
  CHECK_THROWS_AS(enum_lattice(Lattice::full(4), caps), SizeCapError);
  CHECK_THROWS_AS(enum_lattice(Lattice::cube(6), caps), SizeCapError);
  CHECK_NOTHROW(enum_lattice(Lattice::full(3), caps));
  CHECK_NOTHROW(enum_lattice(Lattice::cube(5), caps));
}

TEST_CASE("support shift maps the cube onto the shifted cube") {
  SignVector h{1, 0, 1, 1};
  CHECK(shift_by_support(h, {0, 2}) == SignVector{0, 0, 0, 1});
  CHECK(shift_by_support(h, {}) == h);
  CHECK(shift_by_support(h, {1}) == SignVector{1, -1, 1, 1});

  std::vector<int> C{0, 3};
  std::set<SignVector> mapped;
  for (const auto& g : enum_lattice(Lattice::cube(4)))
    mapped.insert(shift_by_support(g, C));
  CHECK(mapped == as_set(enum_lattice(Lattice::shifted(4, C))));
}

TEST_CASE("generator selection matches hand-filtered sets") {
  Instance inst = fig1();

  auto hk = select_generators(inst, Lattice::cube(3), 0, {}, DominanceSel::all());
  CHECK(hk.members ==
        std::vector<SignVector>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  CHECK(hk.constraints.anchor == 0);

  auto hkj = select_generators(inst, Lattice::cube(3), 0, {2}, DominanceSel::none());
  CHECK(hkj.members == std::vector<SignVector>{{0, 1, 0}, {1, 0, 1}, {1, 1, 1}});

  auto hk_full = select_generators(inst, Lattice::full(3), 0, {}, DominanceSel::all());
  CHECK(hk_full.members.size() == 13);

  for (const auto& gens : {hk, hkj, hk_full}) {
    CHECK(std::is_sorted(gens.members.begin(), gens.members.end()));
    CHECK(std::count(gens.members.begin(), gens.members.end(),
                     SignVector(3, 0)) == 0);
  }
}

TEST_CASE("equality filter does not imply dominance over all vertices") {
  Instance inst = fig1();
  auto hk = as_set(select_generators(inst, Lattice::cube(3), 0, {},
                                     DominanceSel::all()).members);
  auto hkj = as_set(select_generators(inst, Lattice::cube(3), 0, {2},
                                      DominanceSel::none()).members);
  SignVector h{1, 0, 1};
  CHECK(hkj.count(h) == 1);
  CHECK(hk.count(h) == 0);
  CHECK(dot_int(h, inst.vertex(0)) == dot_int(h, inst.vertex(2)));
  CHECK(dot_int(h, inst.vertex(1)) > dot_int(h, inst.vertex(0)));
}

TEST_CASE("inclusion chain holds on small instances") {
  Instance inst = fig1();
  for (int j : {1, 2}) {
    auto rep = chain_check(inst, 0, j, 3 - j, {1, 2});
    CHECK(rep.all_hold);
    CHECK(rep.checks.size() == 5);
    for (const auto& c : rep.checks) CHECK(c.applicable);
    CHECK(rep.size_hkj_x <= rep.size_hkj_y);
    CHECK(rep.size_hkj_y <= rep.size_hkj_l);
    CHECK(rep.size_hkj_l <= rep.size_hkj);
  }

  Instance tsp = gen_tsp_tours(4);
  auto rep = chain_check(tsp, 0, 1, 2, {1});
  CHECK(rep.all_hold);
  CHECK(!rep.checks[0].applicable);

  Instance k4m = gen_perfect_matchings(Graph::complete(4));
  CHECK(chain_check(k4m, 2, 0, 1, {0, 1}).all_hold);
}

TEST_CASE("dominance over all vertices tolerates the anchor itself") {
  Instance inst = fig1();
  for (int k = 0; k < 3; ++k) {
    auto gens = select_generators(inst, Lattice::cube(3), k, {}, DominanceSel::all());
    for (const auto& h : gens.members)
      for (int j = 0; j < 3; ++j)
        CHECK(dot_int(h, inst.vertex(k)) >= dot_int(h, inst.vertex(j)));
    CHECK(!gens.members.empty());
  }
}

TEST_CASE("filter results are worker independent") {
  Instance inst = gen_tsp_tours(4);
  auto one = select_generators(inst, Lattice::full(6), 0, {1}, DominanceSel::all(),
                               LatticeCaps{}, 1);
  auto four = select_generators(inst, Lattice::full(6), 0, {1}, DominanceSel::all(),
                                LatticeCaps{}, 4);
  CHECK(one.members == four.members);
}

TEST_CASE("sign vector helpers") {
  SignVector h{-1, 0, 1};
  CHECK(to_ratvec(h) == RatVec{Rat(-1), Rat(0), Rat(1)});
  CHECK(sign_vec_str(h) == "(-1,0,1)");
  CHECK(dot_rat(h, {Rat(1), Rat(7), Rat(mpz_class(1), mpz_class(2))}) ==
        Rat(mpz_class(-1), mpz_class(2)));
  std::vector<int> p{3, -2, 5};
  CHECK(dot_int(h, p) == 2);
}
