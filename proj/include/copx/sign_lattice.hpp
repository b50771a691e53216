#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copx/config.hpp"
#include "copx/instances.hpp"
#include "copx/rational.hpp"

namespace copx {

/// Vector with entries in {-1, 0, 1}.
using SignVector = std::vector<std::int8_t>;

RatVec to_ratvec(const SignVector& h);
std::string sign_vec_str(const SignVector& h);

/// Exact integer inner products; sign/0-1 entries keep these in machine range
/// for any supported n.
long dot_int(const SignVector& h, const std::vector<std::uint8_t>& x);
long dot_int(const SignVector& h, const std::vector<int>& x);
Rat dot_rat(const SignVector& h, const RatVec& x);

enum class LatticeKind { cube, shifted_cube, full };

/// Family of candidate generator vectors over n coordinates:
///   cube          -> {0,1}^n
///   shifted_cube  -> {-1,0}^n on the support C, {0,1}^n elsewhere
///   full          -> {-1,0,1}^n
struct Lattice {
  LatticeKind kind = LatticeKind::cube;
  int n = 0;
  std::vector<int> support;  // sorted, shifted_cube only

  static Lattice cube(int n);
  static Lattice shifted(int n, std::vector<int> support);
  static Lattice full(int n);
};

std::uint64_t lattice_size(const Lattice& lat);
std::string lattice_kind_name(LatticeKind kind);

/// All lattice vectors in lexicographic order (entry order -1 < 0 < 1),
/// including the zero vector. Throws SizeCapError beyond the caps.
std::vector<SignVector> enum_lattice(const Lattice& lat, const LatticeCaps& caps = {});

/// Coordinate shift h(C): subtracts 1 on every coordinate in C. The result of
/// shifting a cube vector lies in the shifted cube lattice.
SignVector shift_by_support(const SignVector& h, const std::vector<int>& C);

/// Dominance selector: either an explicit vertex index list or all of X.
struct DominanceSel {
  bool all_x = false;
  std::vector<int> idx;

  static DominanceSel all() { return {true, {}}; }
  static DominanceSel none() { return {false, {}}; }
  static DominanceSel of(std::vector<int> v) { return {false, std::move(v)}; }
};

struct GenConstraints {
  int anchor = 0;
  std::vector<int> equal_to;
  DominanceSel dominating = DominanceSel::none();
};

/// Filtered lattice subset for one anchor vertex. Members exclude the zero
/// vector, are distinct, and are lexicographically ordered.
struct GeneratorSet {
  GenConstraints constraints;
  Lattice lattice;
  std::vector<SignVector> members;
};

/// Core filter over arbitrary integer points (used both for instances and for
/// shifted vertex sets): keeps h with dot(p_anchor, h) == dot(p_j, h) for all
/// j in equal_to and dot(p_anchor, h) >= dot(p_l, h) for all selected l.
std::vector<SignVector> filter_lattice(const Lattice& lat,
                                       const std::vector<std::vector<int>>& points,
                                       int anchor, const std::vector<int>& equal_to,
                                       const DominanceSel& dominating,
                                       const LatticeCaps& caps = {}, int workers = 1);

GeneratorSet select_generators(const Instance& inst, const Lattice& lat, int anchor,
                               const std::vector<int>& equal_to,
                               const DominanceSel& dominating,
                               const LatticeCaps& caps = {}, int workers = 1);

/// One inclusion judgment between two of the filtered sets.
struct InclusionCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  SignVector witness;  // member of the left set missing from the right one
};

struct ChainCheckReport {
  std::size_t size_hk = 0, size_hkj = 0, size_hkj_l = 0, size_hkj_y = 0, size_hkj_x = 0;
  std::vector<InclusionCheck> checks;
  bool all_hold = true;  // over applicable checks
};

/// Verifies the inclusion relations among the anchored filter sets
/// H_kj^X, H_kj^Y, H_kj^l, H_kj, H_k for vertices k, j, l and Y a list of
/// vertex indices. The comparison H_kj^Y vs H_kj^l applies only when l is
/// in Y.
ChainCheckReport chain_check(const Instance& inst, int k, int j, int l,
                             const std::vector<int>& Y, const LatticeCaps& caps = {},
                             int workers = 1);

}  // namespace copx
