#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copx/cone.hpp"
#include "copx/config.hpp"
#include "copx/hull.hpp"
#include "copx/instances.hpp"
#include "copx/sign_lattice.hpp"

namespace copx {

/// Candidate-row lattice: V takes generators from the full sign lattice,
/// H from the 0/1 cube.
enum class Variant { V, H };

/// How an anchored generator set is thinned before rows are emitted:
///   literal      -> keep members that are not nonnegative combinations of
///                   the other members (independent per-member tests)
///   irreducible  -> greedy cone-preserving reduction; the kept members span
///                   the same cone as the full set
enum class MinimalityMode { literal, irreducible };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);
const char* mode_name(MinimalityMode m);
MinimalityMode mode_from_name(const std::string& name);

/// One synthesized inequality dot(h, x) <= rhs with rhs = dot(h, x_anchor).
struct FacetRow {
  SignVector h;
  Rat rhs;
  std::vector<int> sources;  // anchors that emitted the row, ascending
  FaceInfo face;             // classification against conv(X)
  bool paired = false;       // the negated row is also present (equality pair)
};

/// Witness that the literal thinning lost part of the cone: `missing` is a
/// dropped generator outside the cone of the kept members, separated by
/// `gap`. A nonempty lineality space is the structural cause.
struct Divergence {
  int anchor = 0;
  SignVector missing;
  FarkasCertificate gap;
  std::vector<RatVec> lineality;
};

struct VertexFacets {
  int anchor = 0;
  Variant variant = Variant::V;
  MinimalityMode mode = MinimalityMode::irreducible;
  GeneratorSet full;
  GeneratorSet reduced;
  std::vector<FacetRow> rows;  // one per reduced member
  std::optional<Divergence> divergence;
};

/// Synthesizes the candidate rows anchored at one vertex. In literal mode the
/// kept members are checked to still span the full cone; the first lost
/// generator (lexicographically) is reported as a divergence.
VertexFacets vertex_facets(const Instance& inst, int anchor, Variant variant,
                           MinimalityMode mode, const Config& cfg = {});

/// Disagreements between the synthesized description and the hull oracle.
struct OracleDiff {
  bool facets_covered = true;
  std::vector<std::vector<int>> missing_facets;  // oracle facet tight sets not emitted
  bool equalities_covered = true;
  std::vector<LinearConstraint> missing_equalities;
  std::vector<int> non_facet_rows;  // row indices that are neither facets nor paired
  std::vector<std::pair<int, int>> improper_pairs;  // row index pairs carrying equalities
};

struct DescriptionReport {
  Variant variant = Variant::V;
  MinimalityMode mode = MinimalityMode::irreducible;
  std::vector<FacetRow> rows;  // merged over anchors, deduped, lex sorted
  std::vector<Divergence> divergences;
  HRep oracle;
  OracleDiff diff;
  /// The rows together with the unit box carve exactly conv(X); unset when
  /// the dimension exceeds the hull cap.
  std::optional<bool> polytope_match;
  /// polytope_match when available, otherwise facet/equality coverage.
  bool ok = false;
};

/// Runs vertex_facets over every anchor and verifies the merged description
/// against the independent hull oracle.
DescriptionReport full_description(const Instance& inst, Variant variant,
                                   MinimalityMode mode, const Config& cfg = {});

struct NecessityReport {
  std::vector<int> box_rows;     // rows duplicating a unit-box bound, not audited
  std::vector<int> necessary;    // removal changes the vertex set
  std::vector<int> unnecessary;  // removal keeps the vertex set
  bool all_necessary = true;     // over audited (non-box) rows
};

/// Per-row necessity probe: drops each row in turn and re-enumerates the
/// vertices of the remaining system inside the unit box. Rows that merely
/// restate a box bound are excluded from the audit. Requires a description
/// with polytope_match == true.
NecessityReport necessity_audit(const Instance& inst, const DescriptionReport& desc,
                                const Config& cfg = {});

}  // namespace copx
