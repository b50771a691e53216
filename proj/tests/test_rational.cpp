#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copx/errors.hpp"
#include "copx/rational.hpp"
#include "copx/rng.hpp"

using namespace copx;

namespace {

Rat rq(long p, long q) { return Rat(mpz_class(p), mpz_class(q)); }

RatVec random_vec(Rng& rng, int n) {
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.rat(-50, 50, 20);
  return v;
}

}  // namespace

TEST_CASE("construction canonicalizes") {
  CHECK(rq(2, 4).str() == "1/2");
  CHECK(rq(-2, 4).str() == "-1/2");
  CHECK(rq(1, -2).str() == "-1/2");
  CHECK(rq(0, 7).str() == "0");
  CHECK(rq(6, 3).str() == "2");
  CHECK(rq(6, 3).is_integer());
  CHECK_THROWS_AS(rq(1, 0), std::domain_error);
}

TEST_CASE("parse accepts canonical and reducible forms") {
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-7/2") == rq(-7, 2));
  CHECK(Rat::parse("2/4") == rq(1, 2));
  CHECK(Rat::parse(rq(-123, 456).str()) == rq(-123, 456));
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(rq(1, 3) + rq(1, 6) == rq(1, 2));
  CHECK(rq(1, 3) - rq(1, 2) == rq(-1, 6));
  CHECK(rq(2, 3) * rq(3, 4) == rq(1, 2));
  CHECK(rq(2, 3) / rq(4, 3) == rq(1, 2));
  CHECK((-rq(5, 7)).str() == "-5/7");
  CHECK(rq(1, 3).sgn() == 1);
  CHECK(rq(-1, 3).sgn() == -1);
  CHECK(Rat().sgn() == 0);
  CHECK(rq(1, 3) < rq(1, 2));
}

TEST_CASE("dot product is bilinear") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng.uniform(0, 5));
    RatVec a = random_vec(rng, n), b = random_vec(rng, n), x = random_vec(rng, n);
    Rat s = rng.rat(-20, 20, 10);
    CHECK(dot(vec_add(a, b), x) == dot(a, x) + dot(b, x));
    CHECK(dot(vec_scale(s, a), x) == s * dot(a, x));
    CHECK(dot(a, x) == dot(x, a));
  }
  CHECK_THROWS_AS(dot(RatVec{Rat(1)}, RatVec{Rat(1), Rat(2)}), DimensionError);
}

TEST_CASE("linear rank on explicit matrices") {
  CHECK(linear_rank({}) == 0);
  CHECK(linear_rank({{Rat(0), Rat(0)}}) == 0);
  CHECK(linear_rank({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(linear_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(linear_rank({{Rat(1), Rat(1), Rat(0)},
                     {Rat(0), Rat(1), Rat(1)},
                     {Rat(1), Rat(2), Rat(1)}}) == 2);
}

TEST_CASE("affine rank is invariant under translation and coordinate permutation") {
  Rng rng(23);
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng.uniform(0, 2));
    int m = 1 + static_cast<int>(rng.uniform(0, 4));
    std::vector<RatVec> pts;
    for (int i = 0; i < m; ++i) pts.push_back(random_vec(rng, n));
    int r = affine_rank(pts);
    CHECK(r >= 1);
    CHECK(r <= std::min(m, n + 1));

    RatVec t = random_vec(rng, n);
    std::vector<RatVec> moved;
    for (const auto& p : pts) moved.push_back(vec_add(p, t));
    CHECK(affine_rank(moved) == r);

    std::vector<RatVec> flipped;
    for (const auto& p : pts) {
      RatVec q(p.rbegin(), p.rend());
      flipped.push_back(q);
    }
    CHECK(affine_rank(flipped) == r);
  }
  CHECK(affine_rank({{Rat(5), Rat(5)}}) == 1);
  CHECK_THROWS_AS(affine_rank({}), std::invalid_argument);
}

TEST_CASE("row space basis is canonical") {
  auto b1 = row_space_basis({{Rat(2), Rat(4)}, {Rat(1), Rat(2)}});
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == RatVec{Rat(1), Rat(2)});
  auto b2 = row_space_basis({{Rat(0), Rat(3)}, {Rat(2), Rat(0)}});
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == RatVec{Rat(1), Rat(0)});
  CHECK(b2[1] == RatVec{Rat(0), Rat(1)});
}

TEST_CASE("primitive scale produces coprime integers") {
  RatVec v{rq(1, 2), rq(1, 3)};
  CHECK(primitive_scale(v) == RatVec{Rat(3), Rat(2)});
  RatVec z{Rat(0), Rat(0)};
  CHECK(primitive_scale(z) == z);
  CHECK(primitive_scale(RatVec{Rat(-4), Rat(6)}) == RatVec{Rat(-2), Rat(3)});
}
