#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copx/config.hpp"
#include "copx/facets.hpp"
#include "copx/instances.hpp"
#include "copx/optimality.hpp"
#include "copx/rational.hpp"
#include "copx/sign_lattice.hpp"

namespace copx {

/// Numbered claims under test. L1..L4 and T1 are the cube region identities,
/// T1b/T1c their shifted-hypercube forms, L231/L232 the shift identities, T21*
/// the optimality equivalences per regime, T3 the facet-description claim.
enum class ClaimId { L1, L2, L3, L4, T1, T1b, T1c, L231, L232, T21, T21b, T21c, T3 };

const char* claim_name(ClaimId id);

enum class ClaimVerdict { confirmed, refuted, skipped };

const char* claim_verdict_name(ClaimVerdict v);

/// Parameters actually used by a check; fields not applicable to the claim
/// stay unset.
struct ClaimParams {
  std::optional<int> k, j, l;
  std::optional<std::vector<int>> Y;
  std::optional<std::vector<int>> C;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> trials, seed;
};

/// Finite, re-checkable witness data for a refuted (or skipped) claim.
struct ClaimEvidence {
  std::vector<RatVec> region_only;  // region vertices the generator side lacks
  std::vector<RatVec> gens_only;    // generator points the region side lacks
  std::optional<RatVec> witness_point;
  std::vector<SignVector> set_diff;
  std::optional<TrialMismatch> mismatch;
  std::optional<Divergence> divergence;
  std::vector<std::vector<int>> missing_facets;
  std::string note;
};

struct ClaimReport {
  ClaimId claim = ClaimId::L1;
  std::string instance_tag;
  ClaimParams params;
  ClaimVerdict verdict = ClaimVerdict::confirmed;
  ClaimEvidence evidence;
};

/// Region identity: vertex set of the anchored box region equals the
/// anchored lattice filter plus the zero vector. Claim selects the lattice,
/// box, point set, and constraint shape; see claim_name values L1, L2, L3,
/// L4, T1, T1b, T1c.
ClaimReport check_region_claim(const Instance& inst, const std::string& tag,
                               ClaimId id, const ClaimParams& params,
                               const Config& cfg = {});

/// Product identity under the coordinate shift (L231): sampled rational
/// points in the shifted box yield the same dot-product drop for every
/// vertex.
ClaimReport check_product_identity(const Instance& inst, const std::string& tag,
                                   const std::vector<int>& C, int samples,
                                   std::uint64_t seed, const Config& cfg = {});

/// Filter equivalence under the coordinate shift (L232): filtering the
/// shifted lattice by the original vertices equals filtering by the shifted
/// vertices.
ClaimReport check_shift_equality(const Instance& inst, const std::string& tag, int k,
                                 const std::vector<int>& C, const Config& cfg = {});

/// Both shift identities for one (k, C).
std::vector<ClaimReport> check_shift_claims(const Instance& inst, const std::string& tag,
                                            int k, const std::vector<int>& C,
                                            int samples, std::uint64_t seed,
                                            const Config& cfg = {});

/// Optimality equivalence for the regime behind the claim id (T21, T21b,
/// T21c): wraps the randomized trial harness.
ClaimReport check_equivalence(const Instance& inst, const std::string& tag, ClaimId id,
                              std::uint64_t trials, std::uint64_t seed,
                              const Config& cfg = {});

/// Facet-description claim (T3): the merged description carves exactly
/// conv(X) and covers every oracle facet.
ClaimReport check_facet_claim(const Instance& inst, const std::string& tag,
                              MinimalityMode mode, const Config& cfg = {});

/// Which claim families run and how exhaustively the parameters are swept.
struct SuiteScope {
  bool regions = true;
  bool shifts = true;
  bool trials = true;
  bool facets = true;
  std::uint64_t trials_per_instance = 200;
  int product_samples = 100;
  int exhaustive_vertices = 4;  // |X| <= this: all pairs/triples/Y subsets
  int exhaustive_support_n = 4; // n <= this: all 2^n supports C
  int max_pairs = 12;           // sampled (k, j) pairs otherwise
  int max_y_subsets = 8;
  int max_supports = 8;

  static SuiteScope preset(const std::string& name);  // default|regions|shift|trials
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<std::string> instances;
  std::vector<ClaimReport> claims;
  std::size_t confirmed = 0, refuted = 0, skipped = 0;
  bool ok = true;  // no refutation
};

/// Runs every applicable claim check over the instances; deterministic given
/// (instances, seed, scope) regardless of worker count. Refuted claims are
/// written as counterexample files under cfg.results_dir.
SuiteReport run_suite(const std::vector<std::pair<std::string, Instance>>& instances,
                      const SuiteScope& scope, const Config& cfg = {});

}  // namespace copx
