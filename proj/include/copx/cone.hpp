#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "copx/rational.hpp"
#include "copx/sign_lattice.hpp"

namespace copx {

/// Nonnegative combination witnessing membership: target = sum gamma_i * g_i.
/// Entries are (generator index, coefficient), coefficient > 0, ascending
/// index. Empty means the target is the zero vector.
struct ConeCertificate {
  std::vector<std::pair<int, Rat>> gamma;
};

/// Separating functional witnessing non-membership: dot(y, g) <= 0 for every
/// generator while dot(y, target) > 0.
struct FarkasCertificate {
  RatVec y;
};

using MemberResult = std::variant<ConeCertificate, FarkasCertificate>;

inline bool is_member(const MemberResult& r) {
  return std::holds_alternative<ConeCertificate>(r);
}

/// Decides target in cone(gens) by exact phase-1 simplex with Bland's
/// anti-cycling rule. Always returns a self-contained certificate.
MemberResult cone_member(const std::vector<SignVector>& gens, const RatVec& target);
MemberResult cone_member(const GeneratorSet& gs, const RatVec& target);

/// Membership against the sub-cone spanned by gens[keep...]. Certificate
/// indices refer to positions in `gens`.
MemberResult cone_member_subset(const std::vector<SignVector>& gens,
                                const std::vector<int>& keep, const RatVec& target);

/// True when dropping gens[g_index] loses the target. Precondition: target is
/// in cone(gens); throws std::invalid_argument otherwise.
bool requires_generator(const std::vector<SignVector>& gens, const RatVec& target,
                        int g_index);

/// Keeps exactly the members that are not nonnegative combinations of the
/// other members of the original set. Independent per-member tests; the
/// result can under-generate when the cone has lineality.
GeneratorSet elementwise_minimal(const GeneratorSet& gs, int workers = 1);

/// Greedy cone-preserving reduction: scans members in lexicographic order and
/// drops one whenever the remaining members still span it. The result
/// generates the same cone and no single member can be removed.
GeneratorSet irreducible_subset(const GeneratorSet& gs);

/// Canonical basis of the lineality space of cone(gens), i.e. of
/// span{g : -g in cone(gens)}. Empty for pointed cones.
std::vector<RatVec> lineality_basis(const std::vector<SignVector>& gens, int workers = 1);

/// Cone-preserving pair-sum pruning: repeatedly drops a member that is the
/// sum of two other remaining members agreeing with it coordinatewise in
/// sign. Pure bitmask lookups, no LPs; requires n <= 32. Returns the kept
/// indices in ascending order.
std::vector<int> conformal_reduce(const std::vector<SignVector>& members);

/// Re-checks a certificate by direct arithmetic; throws std::logic_error if
/// it does not prove what it claims.
void verify_member_result(const std::vector<SignVector>& gens, const RatVec& target,
                          const MemberResult& result);

}  // namespace copx
