#include "copx/hull.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>
#include <tuple>

namespace copx {

namespace {

constexpr std::size_t kMaxConstraints = 256;
using TightSet = std::bitset<kMaxConstraints>;

struct Ray {
  RatVec v;
  TightSet tight;
};

/// Double description state for a cone {x : dot(a_i, x) <= 0}. The cone is
/// span(lin) + cone(rays) with lin a basis of the current lineality space and
/// rays the extreme rays modulo lin. Invariant: every lin vector is tight at
/// every processed constraint, and each ray records its tight constraint set.
struct DDCone {
  int dim;
  std::vector<RatVec> lin;
  std::vector<Ray> rays;
  int processed = 0;

  explicit DDCone(int d) : dim(d) {
    lin.reserve(d);
    for (int i = 0; i < d; ++i) {
      RatVec e(d);
      e[i] = Rat(1);
      lin.push_back(std::move(e));
    }
  }

  void insert(const RatVec& a) {
    if (processed >= static_cast<int>(kMaxConstraints))
      throw SizeCapError("double description: more than " +
                         std::to_string(kMaxConstraints) + " constraints");
    const int idx = processed;

    int pivot = -1;
    Rat sp;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      Rat s = dot(a, lin[i]);
      if (!s.is_zero()) {
        pivot = static_cast<int>(i);
        sp = s;
        break;
      }
    }

    if (pivot >= 0) {
      // The new hyperplane cuts the lineality space: one basis direction
      // becomes an extreme ray on the feasible side, the rest (and all
      // existing rays) are slid along it onto the hyperplane.
      RatVec lstar = lin[pivot];
      std::vector<RatVec> new_lin;
      new_lin.reserve(lin.size() - 1);
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        Rat s = dot(a, lin[i]);
        new_lin.push_back(s.is_zero() ? lin[i]
                                      : vec_sub(lin[i], vec_scale(s / sp, lstar)));
      }
      lin = std::move(new_lin);

      for (Ray& r : rays) {
        Rat t = dot(a, r.v);
        if (!t.is_zero()) r.v = primitive_scale(vec_sub(r.v, vec_scale(t / sp, lstar)));
        r.tight.set(idx);
      }
      Ray rstar;
      rstar.v = primitive_scale(sp.sgn() > 0 ? vec_scale(Rat(-1), lstar) : lstar);
      for (int i = 0; i < idx; ++i) rstar.tight.set(i);
      rays.push_back(std::move(rstar));
    } else {
      std::vector<Rat> t(rays.size());
      std::vector<int> pos, neg;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        t[i] = dot(a, rays[i].v);
        if (t[i].sgn() > 0)
          pos.push_back(static_cast<int>(i));
        else if (t[i].sgn() < 0)
          neg.push_back(static_cast<int>(i));
        else
          rays[i].tight.set(idx);
      }
      if (!pos.empty()) {
        std::vector<Ray> born;
        for (int p : pos) {
          for (int q : neg) {
            if (!adjacent(p, q)) continue;
            Ray nr;
            nr.v = primitive_scale(
                vec_sub(vec_scale(t[p], rays[q].v), vec_scale(t[q], rays[p].v)));
            nr.tight = (rays[p].tight & rays[q].tight);
            nr.tight.set(idx);
            born.push_back(std::move(nr));
          }
        }
        std::vector<Ray> kept;
        kept.reserve(rays.size() - pos.size() + born.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
          if (t[i].sgn() <= 0) kept.push_back(std::move(rays[i]));
        for (Ray& r : born) kept.push_back(std::move(r));
        rays = std::move(kept);
      }
    }
    ++processed;
  }

  // Combinatorial adjacency: p and q are adjacent extreme rays iff no other
  // ray is tight at every constraint where both are tight. Exact as long as
  // the ray list stays minimal, which the insertion loop maintains.
  bool adjacent(int p, int q) const {
    TightSet common = rays[p].tight & rays[q].tight;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (static_cast<int>(r) == p || static_cast<int>(r) == q) continue;
      if ((common & ~rays[r].tight).none()) return false;
    }
    return true;
  }
};

struct ConeGenerators {
  std::vector<RatVec> lin;
  std::vector<RatVec> rays;
};

ConeGenerators dd_cone(int dim, const std::vector<RatVec>& constraints) {
  DDCone st(dim);
  for (const RatVec& a : constraints) {
    if (static_cast<int>(a.size()) != dim)
      throw DimensionError("double description: constraint length != dimension");
    st.insert(a);
  }
  ConeGenerators out;
  out.lin = row_space_basis(st.lin);
  out.rays.reserve(st.rays.size());
  for (Ray& r : st.rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

void check_dim_cap(int n, const HullCaps& caps, const char* what) {
  if (n > caps.hull_dim_cap)
    throw SizeCapError(std::string(what) + " at dimension " + std::to_string(n) +
                       " exceeds hull_dim_cap = " + std::to_string(caps.hull_dim_cap));
}

RatVec homogenize(const RatVec& a, const Rat& b) {
  RatVec row = a;
  row.push_back(-b);
  return row;
}

// All instance vertices, or the subset at `idx`, as rational points.
std::vector<RatVec> to_points(const Instance& inst, const std::vector<int>& idx,
                              bool all) {
  std::vector<RatVec> pts;
  if (all) {
    pts.reserve(inst.vertices.size());
    for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k)
      pts.push_back(inst.vertex_rat(k));
  } else {
    pts.reserve(idx.size());
    for (int k : idx) pts.push_back(inst.vertex_rat(k));
  }
  return pts;
}

// Eliminates the pivot coordinates of the equality basis from the row
// (a | b), yielding a representative independent of which facet normal the
// double description happened to produce.
RatVec reduce_mod_equalities(RatVec row, const std::vector<RatVec>& eq_basis) {
  for (const RatVec& e : eq_basis) {
    std::size_t p = 0;
    while (p < e.size() && e[p].is_zero()) ++p;
    if (p == e.size()) continue;
    if (row[p].is_zero()) continue;
    row = vec_sub(row, vec_scale(row[p] / e[p], e));
  }
  return row;
}

}  // namespace

Box Box::unit(int n) {
  Box b;
  b.lo.assign(n, Rat(0));
  b.hi.assign(n, Rat(1));
  return b;
}

Box Box::for_lattice(const Lattice& lat) {
  Box b = Box::unit(lat.n);
  switch (lat.kind) {
    case LatticeKind::cube: break;
    case LatticeKind::shifted_cube:
      for (int c : lat.support) {
        b.lo[c] = Rat(-1);
        b.hi[c] = Rat(0);
      }
      break;
    case LatticeKind::full:
      for (int i = 0; i < lat.n; ++i) b.lo[i] = Rat(-1);
      break;
  }
  return b;
}

HRep vrep_to_hrep(const VRep& vrep, const HullCaps& caps) {
  if (vrep.vertices.empty())
    throw std::invalid_argument("vrep_to_hrep: empty vertex list");
  const int n = static_cast<int>(vrep.vertices[0].size());
  check_dim_cap(n, caps, "vrep_to_hrep");

  std::vector<RatVec> rows;
  rows.reserve(vrep.vertices.size());
  for (const RatVec& v : vrep.vertices) {
    if (static_cast<int>(v.size()) != n)
      throw DimensionError("vrep_to_hrep: ragged vertex list");
    rows.push_back(homogenize(v, Rat(-1)));  // dot((v,1), y) <= 0
  }
  ConeGenerators polar = dd_cone(n + 1, rows);

  HRep out;
  for (const RatVec& l : polar.lin) {
    LinearConstraint eq;
    eq.a.assign(l.begin(), l.end() - 1);
    eq.b = -l.back();
    out.equalities.push_back(std::move(eq));
  }
  for (const RatVec& r : polar.rays) {
    RatVec row = primitive_scale(reduce_mod_equalities(r, polar.lin));
    RatVec a(row.begin(), row.end() - 1);
    Rat b = -row.back();
    if (vec_is_zero(a)) {
      if (b.sgn() < 0)
        throw std::logic_error("vrep_to_hrep: infeasible row from nonempty polytope");
      continue;  // 0 <= b is vacuous
    }
    out.inequalities.push_back({std::move(a), std::move(b)});
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(),
            [](const LinearConstraint& x, const LinearConstraint& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return out;
}

VRep hrep_to_vrep(const HRep& hrep, const std::optional<Box>& box, const HullCaps& caps) {
  int n = -1;
  if (box)
    n = static_cast<int>(box->lo.size());
  else if (!hrep.inequalities.empty())
    n = static_cast<int>(hrep.inequalities[0].a.size());
  else if (!hrep.equalities.empty())
    n = static_cast<int>(hrep.equalities[0].a.size());
  if (n <= 0)
    throw std::invalid_argument("hrep_to_vrep: cannot infer dimension from empty input");
  check_dim_cap(n, caps, "hrep_to_vrep");

  std::vector<RatVec> rows;
  {
    RatVec tpos(n + 1);
    tpos[n] = Rat(-1);  // t >= 0
    rows.push_back(std::move(tpos));
  }
  if (box) {
    if (box->lo.size() != box->hi.size())
      throw DimensionError("hrep_to_vrep: box lo/hi length mismatch");
    for (int i = 0; i < n; ++i) {
      RatVec lo(n, Rat(0)), hi(n, Rat(0));
      lo[i] = Rat(-1);
      hi[i] = Rat(1);
      rows.push_back(homogenize(lo, -box->lo[i]));
      rows.push_back(homogenize(hi, box->hi[i]));
    }
  }
  auto add_row = [&](const LinearConstraint& c, bool flip) {
    if (static_cast<int>(c.a.size()) != n)
      throw DimensionError("hrep_to_vrep: constraint length != dimension");
    RatVec a = flip ? vec_scale(Rat(-1), c.a) : c.a;
    rows.push_back(homogenize(a, flip ? -c.b : c.b));
  };
  for (const LinearConstraint& c : hrep.equalities) {
    add_row(c, false);
    add_row(c, true);
  }
  for (const LinearConstraint& c : hrep.inequalities) add_row(c, false);

  ConeGenerators gen = dd_cone(n + 1, rows);

  bool any_point = false;
  for (const RatVec& r : gen.rays)
    if (r.back().sgn() > 0) any_point = true;
  if (!any_point) return VRep{};

  if (!gen.lin.empty()) {
    RatVec dir(gen.lin[0].begin(), gen.lin[0].end() - 1);
    throw UnboundedError("hrep_to_vrep: feasible set contains a line", vec_str(dir));
  }
  for (const RatVec& r : gen.rays) {
    if (r.back().sgn() == 0) {
      RatVec dir(r.begin(), r.end() - 1);
      throw UnboundedError("hrep_to_vrep: feasible set is unbounded", vec_str(dir));
    }
  }

  VRep out;
  out.vertices.reserve(gen.rays.size());
  for (const RatVec& r : gen.rays) {
    Rat t = r.back();
    RatVec v(n);
    for (int i = 0; i < n; ++i) v[i] = r[i] / t;
    out.vertices.push_back(std::move(v));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

HRep cone_halfspaces(const std::vector<SignVector>& rays, const HullCaps& caps) {
  if (rays.empty()) throw std::invalid_argument("cone_halfspaces: no generators");
  const int n = static_cast<int>(rays[0].size());
  check_dim_cap(n, caps, "cone_halfspaces");
  std::vector<RatVec> rows;
  rows.reserve(rays.size());
  for (const SignVector& g : rays) rows.push_back(to_ratvec(g));
  ConeGenerators polar = dd_cone(n, rows);
  HRep out;
  for (const RatVec& l : polar.lin) out.equalities.push_back({l, Rat(0)});
  for (const RatVec& r : polar.rays)
    out.inequalities.push_back({primitive_scale(reduce_mod_equalities(r, polar.lin)), Rat(0)});
  return out;
}

bool hrep_satisfied(const HRep& hrep, const RatVec& x) {
  for (const LinearConstraint& c : hrep.equalities)
    if (dot(c.a, x) != c.b) return false;
  for (const LinearConstraint& c : hrep.inequalities)
    if (dot(c.a, x) > c.b) return false;
  return true;
}

VRep region_vertices_points(const Box& box, const std::vector<std::vector<int>>& points,
                            int anchor, const std::vector<int>& equal_to,
                            const DominanceSel& dominating, const HullCaps& caps) {
  const int npts = static_cast<int>(points.size());
  auto in_range = [&](int k) { return k >= 0 && k < npts; };
  if (!in_range(anchor))
    throw std::invalid_argument("region_vertices: anchor out of range");
  const int n = static_cast<int>(box.lo.size());

  auto diff_row = [&](int from, int to) {
    RatVec a(n);
    for (int i = 0; i < n; ++i) a[i] = Rat(points[from][i] - points[to][i]);
    return a;
  };

  HRep hrep;
  for (int j : equal_to) {
    if (!in_range(j)) throw std::invalid_argument("region_vertices: equal_to out of range");
    hrep.equalities.push_back({diff_row(anchor, j), Rat(0)});
  }
  auto add_dom = [&](int l) {
    if (!in_range(l))
      throw std::invalid_argument("region_vertices: dominating index out of range");
    hrep.inequalities.push_back({diff_row(l, anchor), Rat(0)});
  };
  if (dominating.all_x)
    for (int l = 0; l < npts; ++l) add_dom(l);
  else
    for (int l : dominating.idx) add_dom(l);

  return hrep_to_vrep(hrep, box, caps);
}

VRep region_vertices(const Instance& inst, const Lattice& lat, int anchor,
                     const std::vector<int>& equal_to, const DominanceSel& dominating,
                     const HullCaps& caps) {
  if (lat.n != inst.n) throw DimensionError("region_vertices: lattice n != instance n");
  std::vector<std::vector<int>> pts(inst.vertices.size());
  for (std::size_t k = 0; k < inst.vertices.size(); ++k)
    pts[k].assign(inst.vertices[k].begin(), inst.vertices[k].end());
  return region_vertices_points(Box::for_lattice(lat), pts, anchor, equal_to, dominating,
                                caps);
}

const char* face_class_name(FaceClass c) {
  switch (c) {
    case FaceClass::invalid: return "invalid";
    case FaceClass::non_tight: return "non_tight";
    case FaceClass::vertex_only: return "vertex_only";
    case FaceClass::lower_face: return "lower_face";
    case FaceClass::facet: return "facet";
    case FaceClass::improper: return "improper";
  }
  return "?";
}

FaceInfo face_classify(const Instance& inst, const SignVector& h, const Rat& rhs) {
  if (static_cast<int>(h.size()) != inst.n)
    throw DimensionError("face_classify: h length != n");
  FaceInfo info;
  for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k) {
    Rat p(dot_int(h, inst.vertices[k]));
    if (p > rhs) {
      info.cls = FaceClass::invalid;
      info.tight.clear();
      return info;
    }
    if (p == rhs) info.tight.push_back(k);
  }
  if (info.tight.empty()) {
    info.cls = FaceClass::non_tight;
    return info;
  }
  if (info.tight.size() == inst.vertices.size()) {
    info.cls = FaceClass::improper;
    info.dim = affine_rank(to_points(inst, info.tight, false)) - 1;
    return info;
  }
  const int rank_x = affine_rank(to_points(inst, {}, true));
  const int rank_t = affine_rank(to_points(inst, info.tight, false));
  info.dim = rank_t - 1;
  if (rank_t == rank_x - 1)
    info.cls = FaceClass::facet;
  else if (rank_t == 1)
    info.cls = FaceClass::vertex_only;
  else
    info.cls = FaceClass::lower_face;
  return info;
}

}  // namespace copx
