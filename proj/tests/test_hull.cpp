#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "copx/errors.hpp"
#include "copx/hull.hpp"
#include "copx/instances.hpp"
#include "copx/rng.hpp"
#include "copx/sign_lattice.hpp"

using namespace copx;

namespace {

Instance fig1() { return gen_spanning_trees(Graph::complete(3)); }

RatVec rvec(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

VRep instance_vrep(const Instance& inst) {
  VRep v;
  for (std::size_t k = 0; k < inst.vertices.size(); ++k)
    v.vertices.push_back(inst.vertex_rat(static_cast<int>(k)));
  std::sort(v.vertices.begin(), v.vertices.end());
  return v;
}

VRep cube_vrep(int n) {
  VRep v;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = Rat(static_cast<int>((mask >> i) & 1u));
    v.vertices.push_back(std::move(x));
  }
  std::sort(v.vertices.begin(), v.vertices.end());
  return v;
}

struct IneqKey {
  RatVec a;
  Rat b;
  bool operator<(const IneqKey& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const IneqKey& o) const { return a == o.a && b == o.b; }
};

std::set<IneqKey> ineq_set(const HRep& h) {
  std::set<IneqKey> out;
  for (const auto& c : h.inequalities) out.insert({c.a, c.b});
  return out;
}

}  // namespace

TEST_CASE("unit cube facets are the coordinate bounds") {
  HRep h = vrep_to_hrep(cube_vrep(3));
  CHECK(h.equalities.empty());
  std::set<IneqKey> expect{
      {rvec({-1, 0, 0}), Rat(0)}, {rvec({0, -1, 0}), Rat(0)},
      {rvec({0, 0, -1}), Rat(0)}, {rvec({1, 0, 0}), Rat(1)},
      {rvec({0, 1, 0}), Rat(1)},  {rvec({0, 0, 1}), Rat(1)},
  };
  CHECK(ineq_set(h) == expect);
}

TEST_CASE("triangle hull has one affine equality and three facets") {
  HRep h = vrep_to_hrep(instance_vrep(fig1()));
  REQUIRE(h.equalities.size() == 1);
  CHECK(h.equalities[0].a == rvec({1, 1, 1}));
  CHECK(h.equalities[0].b == Rat(2));
  std::set<IneqKey> expect{
      {rvec({0, -1, -1}), Rat(-1)},
      {rvec({0, 0, 1}), Rat(1)},
      {rvec({0, 1, 0}), Rat(1)},
  };
  CHECK(ineq_set(h) == expect);
}

TEST_CASE("vertex and halfspace forms round trip exactly") {
  std::vector<VRep> cases;
  for (int n = 1; n <= 5; ++n) cases.push_back(cube_vrep(n));
  cases.push_back(instance_vrep(fig1()));
  cases.push_back(instance_vrep(gen_spanning_trees(Graph::complete(4))));
  cases.push_back(instance_vrep(gen_tsp_tours(4)));
  for (const auto& v : cases) {
    VRep back = hrep_to_vrep(vrep_to_hrep(v));
    CHECK(back.vertices == v.vertices);
  }
}

TEST_CASE("degenerate inputs") {
  HRep infeasible;
  infeasible.inequalities = {{rvec({1}), Rat(-1)}, {rvec({-1}), Rat(0)}};
  CHECK(hrep_to_vrep(infeasible).vertices.empty());

  VRep point;
  point.vertices = {rvec({2, 3})};
  HRep h = vrep_to_hrep(point);
  CHECK(h.equalities.size() == 2);
  CHECK(h.inequalities.empty());
  CHECK(hrep_to_vrep(h).vertices == point.vertices);
}

TEST_CASE("unbounded systems report a recession ray unless boxed") {
  HRep half;
  half.inequalities = {{rvec({-1, 0}), Rat(0)}, {rvec({0, -1}), Rat(0)}};
  bool threw = false;
  try {
    hrep_to_vrep(half);
  } catch (const UnboundedError& e) {
    threw = true;
    CHECK(!e.ray_text().empty());
  }
  CHECK(threw);

  VRep boxed = hrep_to_vrep(half, Box::unit(2));
  CHECK(boxed.vertices == cube_vrep(2).vertices);
}

TEST_CASE("every output vertex is basic") {
  Rng rng(321);
  for (int round = 0; round < 12; ++round) {
    int n = static_cast<int>(rng.uniform(2, 4));
    std::set<std::vector<std::uint8_t>> pts;
    long want = std::min(rng.uniform(3, 6), 1L << n);
    while (static_cast<long>(pts.size()) < want) {
      std::vector<std::uint8_t> x(n);
      for (auto& e : x) e = rng.coin() ? 1 : 0;
      pts.insert(x);
    }
    Instance inst = gen_explicit({pts.begin(), pts.end()});
    HRep h = vrep_to_hrep(instance_vrep(inst));
    int ambient_eqs = static_cast<int>(h.equalities.size());
    for (const auto& v : hrep_to_vrep(h).vertices) {
      CHECK(hrep_satisfied(h, v));
      int tight = 0;
      for (const auto& c : h.inequalities)
        if (dot(c.a, v) == c.b) ++tight;
      CHECK(tight >= n - ambient_eqs);
    }
  }
}

TEST_CASE("lattice boxes") {
  Box cube = Box::for_lattice(Lattice::cube(2));
  CHECK(cube.lo == rvec({0, 0}));
  CHECK(cube.hi == rvec({1, 1}));
  Box shifted = Box::for_lattice(Lattice::shifted(3, {0, 2}));
  CHECK(shifted.lo == rvec({-1, 0, -1}));
  CHECK(shifted.hi == rvec({0, 1, 0}));
  Box full = Box::for_lattice(Lattice::full(2));
  CHECK(full.lo == rvec({-1, -1}));
  CHECK(full.hi == rvec({1, 1}));
}

TEST_CASE("anchored regions carve the expected lattice boxes") {
  Instance inst = fig1();

  VRep mk = region_vertices(inst, Lattice::cube(3), 0, {}, DominanceSel::all());
  CHECK(mk.vertices == std::vector<RatVec>{rvec({0, 0, 0}), rvec({0, 0, 1}),
                                           rvec({0, 1, 0}), rvec({0, 1, 1}),
                                           rvec({1, 1, 1})});

  VRep bkj = region_vertices(inst, Lattice::cube(3), 0, {2}, DominanceSel::none());
  CHECK(bkj.vertices == std::vector<RatVec>{rvec({0, 0, 0}), rvec({0, 1, 0}),
                                            rvec({1, 0, 1}), rvec({1, 1, 1})});

  std::vector<std::vector<int>> pts;
  for (const auto& v : inst.vertices) pts.emplace_back(v.begin(), v.end());
  VRep via_points = region_vertices_points(Box::for_lattice(Lattice::cube(3)), pts, 0,
                                           {}, DominanceSel::all());
  CHECK(via_points.vertices == mk.vertices);
}

TEST_CASE("face classification against the triangle") {
  Instance inst = fig1();

  FaceInfo facet = face_classify(inst, {0, 0, 1}, Rat(1));
  CHECK(facet.cls == FaceClass::facet);
  CHECK(facet.tight == std::vector<int>{0, 1});
  CHECK(facet.dim == 1);

  CHECK(face_classify(inst, {1, 1, 1}, Rat(2)).cls == FaceClass::improper);
  CHECK(face_classify(inst, {1, 1, 1}, Rat(1)).cls == FaceClass::invalid);
  CHECK(face_classify(inst, {1, 1, 1}, Rat(3)).cls == FaceClass::non_tight);

  FaceInfo vtx = face_classify(inst, {0, 1, 1}, Rat(2));
  CHECK(vtx.cls == FaceClass::vertex_only);
  CHECK(vtx.tight == std::vector<int>{0});
  CHECK(vtx.dim == 0);
}

TEST_CASE("cone halfspaces cut out exactly the cone") {
  std::vector<SignVector> rays{{1, 0}, {1, 1}};
  HRep h = cone_halfspaces(rays);
  CHECK(hrep_satisfied(h, rvec({2, 1})));
  CHECK(hrep_satisfied(h, rvec({0, 0})));
  CHECK(!hrep_satisfied(h, rvec({0, 1})));
  CHECK(!hrep_satisfied(h, rvec({-1, 0})));

  std::vector<SignVector> planar{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}};
  HRep p = cone_halfspaces(planar);
  CHECK(!p.equalities.empty());
  CHECK(hrep_satisfied(p, rvec({-5, 3, 0})));
  CHECK(!hrep_satisfied(p, rvec({0, 0, 1})));
  CHECK(!hrep_satisfied(p, rvec({0, -1, 0})));
}

TEST_CASE("hull dimension cap is enforced") {
  HullCaps caps;
  caps.hull_dim_cap = 3;
  CHECK_THROWS_AS(vrep_to_hrep(cube_vrep(4), caps), SizeCapError);
  CHECK_NOTHROW(vrep_to_hrep(cube_vrep(3), caps));
}
