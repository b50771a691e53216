#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copx/config.hpp"
#include "copx/instances.hpp"
#include "copx/rational.hpp"
#include "copx/sign_lattice.hpp"

namespace copx {

/// One linear condition dot(a, x) <= b (inequality) or dot(a, x) == b
/// (equality), depending on which HRep list holds it.
struct LinearConstraint {
  RatVec a;
  Rat b;
};

/// Halfspace representation. Invariants: equalities span the affine hull; no
/// inequality has a == 0 (vacuous rows are dropped, an explicitly infeasible
/// 0 <= b row with b < 0 is preserved).
struct HRep {
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;
};

/// Vertex representation: the list of extreme points, lexicographically
/// sorted. Empty means the polytope is empty.
struct VRep {
  std::vector<RatVec> vertices;
};

struct Box {
  RatVec lo, hi;

  static Box unit(int n);
  /// Bounding box of the lattice: [0,1] per coordinate for the cube, shifted
  /// to [-1,0] on the support for the shifted cube, [-1,1] for the full
  /// lattice.
  static Box for_lattice(const Lattice& lat);
};

/// Minimal halfspace description of conv(vertices) by exact double
/// description on the polar cone. Facet inequalities are reduced modulo the
/// affine-hull equalities and scaled to coprime integers, so the output is
/// canonical. Throws SizeCapError above hull_dim_cap.
HRep vrep_to_hrep(const VRep& vrep, const HullCaps& caps = {});

/// Exact vertex enumeration of the HRep (intersected with `box` when given).
/// Returns the empty VRep for infeasible input. Throws UnboundedError with a
/// recession-ray witness when the feasible set is unbounded and no box was
/// supplied.
VRep hrep_to_vrep(const HRep& hrep, const std::optional<Box>& box = {},
                  const HullCaps& caps = {});

/// Halfspace description {x : dot(a,x) <= 0 ...} of the finitely generated
/// cone spanned by `rays` (equalities for its lineality-orthogonal part).
HRep cone_halfspaces(const std::vector<SignVector>& rays, const HullCaps& caps = {});

bool hrep_satisfied(const HRep& hrep, const RatVec& x);

/// Vertices of the region cut from the lattice box by the anchored
/// constraints: dot(x_k - x_j, x) == 0 for j in equal_to and
/// dot(x_k - x_l, x) >= 0 for selected l.
VRep region_vertices(const Instance& inst, const Lattice& lat, int anchor,
                     const std::vector<int>& equal_to, const DominanceSel& dominating,
                     const HullCaps& caps = {});

/// Same region computation over arbitrary integer points (the anchored
/// constraint data does not have to come from a 0/1 instance).
VRep region_vertices_points(const Box& box, const std::vector<std::vector<int>>& points,
                            int anchor, const std::vector<int>& equal_to,
                            const DominanceSel& dominating, const HullCaps& caps = {});

enum class FaceClass { invalid, non_tight, vertex_only, lower_face, facet, improper };

const char* face_class_name(FaceClass c);

struct FaceInfo {
  FaceClass cls = FaceClass::invalid;
  int dim = -1;            // affine dimension of the tight set, -1 when empty
  std::vector<int> tight;  // vertex indices where dot(h, x) == rhs
};

/// Classifies the inequality dot(h, x) <= rhs against conv(X): invalid when
/// violated by some vertex, improper when tight everywhere (an implicit
/// equality of the affine hull), facet when the tight set has affine rank
/// exactly one less than X.
FaceInfo face_classify(const Instance& inst, const SignVector& h, const Rat& rhs);

}  // namespace copx
