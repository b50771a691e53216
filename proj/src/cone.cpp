#include "copx/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "copx/parallel.hpp"

namespace copx {

namespace {

/// Phase-1 simplex on { gamma >= 0 : sum gamma_j g_j = target }: minimizes the
/// sum of artificial variables with Bland's rule (entering = lowest-index
/// column with negative reduced cost, leaving = lowest basic variable among
/// ratio-test ties). The basis inverse is kept explicitly; columns are priced
/// on demand, which only costs additions because generator entries are
/// -1/0/1. Artificials that leave the basis are discarded.
class Phase1 {
 public:
  Phase1(const std::vector<const SignVector*>& cols, const RatVec& target)
      : cols_(cols), n_(static_cast<int>(target.size())) {
    sign_.resize(n_);
    b_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      sign_[i] = target[i].sgn() < 0 ? -1 : 1;
      b_[i] = sign_[i] < 0 ? -target[i] : target[i];
    }
  }

  MemberResult solve() {
    const int m = static_cast<int>(cols_.size());
    basis_.resize(n_);
    binv_.assign(n_, RatVec(n_));
    for (int i = 0; i < n_; ++i) {
      basis_[i] = m + i;
      binv_[i][i] = Rat(1);
    }
    xb_ = b_;
    std::vector<char> in_basis(m, 0);

    const long iter_cap = 1000 + 50L * (m + n_);
    for (long iter = 0; iter <= iter_cap; ++iter) {
      Rat obj;
      for (int i = 0; i < n_; ++i)
        if (basis_[i] >= m) obj += xb_[i];
      if (obj.is_zero()) return extract_cone(m);

      RatVec y(n_);
      for (int i = 0; i < n_; ++i) {
        if (basis_[i] < m) continue;
        for (int k = 0; k < n_; ++k) y[k] += binv_[i][k];
      }

      int enter = -1;
      for (int j = 0; j < m; ++j) {
        if (in_basis[j]) continue;
        if (price(y, j).sgn() > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return extract_farkas(y, obj);

      RatVec w = direction(enter);
      int leave = -1;
      Rat theta;
      for (int i = 0; i < n_; ++i) {
        if (w[i].sgn() <= 0) continue;
        Rat ratio = xb_[i] / w[i];
        if (leave < 0 || ratio < theta || (ratio == theta && basis_[i] < basis_[leave])) {
          leave = i;
          theta = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("phase-1 simplex: unbounded descent");

      pivot(leave, enter, w, m, in_basis);
    }
    throw std::logic_error("phase-1 simplex: iteration cap exceeded");
  }

 private:
  // dot(y, flipped column j); reduced cost of column j is its negation.
  Rat price(const RatVec& y, int j) const {
    const SignVector& g = *cols_[j];
    Rat acc;
    for (int i = 0; i < n_; ++i) {
      int v = sign_[i] * g[i];
      if (v == 1)
        acc += y[i];
      else if (v == -1)
        acc -= y[i];
    }
    return acc;
  }

  RatVec direction(int j) const {
    const SignVector& g = *cols_[j];
    RatVec w(n_);
    for (int k = 0; k < n_; ++k) {
      int v = sign_[k] * g[k];
      if (v == 0) continue;
      for (int i = 0; i < n_; ++i) {
        if (v == 1)
          w[i] += binv_[i][k];
        else
          w[i] -= binv_[i][k];
      }
    }
    return w;
  }

  void pivot(int r, int enter, const RatVec& w, int m, std::vector<char>& in_basis) {
    Rat inv = Rat(1) / w[r];
    for (int k = 0; k < n_; ++k) binv_[r][k] *= inv;
    xb_[r] *= inv;
    for (int i = 0; i < n_; ++i) {
      if (i == r || w[i].is_zero()) continue;
      for (int k = 0; k < n_; ++k) binv_[i][k] -= w[i] * binv_[r][k];
      xb_[i] -= w[i] * xb_[r];
    }
    if (basis_[r] < m) in_basis[basis_[r]] = 0;
    basis_[r] = enter;
    in_basis[enter] = 1;
  }

  MemberResult extract_cone(int m) const {
    ConeCertificate cert;
    for (int i = 0; i < n_; ++i)
      if (basis_[i] < m && !xb_[i].is_zero()) cert.gamma.emplace_back(basis_[i], xb_[i]);
    std::sort(cert.gamma.begin(), cert.gamma.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return cert;
  }

  MemberResult extract_farkas(const RatVec& y, const Rat& obj) const {
    if (obj.sgn() <= 0) throw std::logic_error("farkas extraction without positive gap");
    RatVec out(n_);
    for (int i = 0; i < n_; ++i) out[i] = sign_[i] < 0 ? -y[i] : y[i];
    return FarkasCertificate{primitive_scale(out)};
  }

  const std::vector<const SignVector*>& cols_;
  int n_;
  std::vector<int> sign_;
  RatVec b_;
  std::vector<int> basis_;
  std::vector<RatVec> binv_;
  RatVec xb_;
};

MemberResult solve_view(const std::vector<const SignVector*>& cols, const RatVec& target) {
  const int n = static_cast<int>(target.size());
  if (n == 0) throw std::invalid_argument("cone_member: empty target");
  for (const SignVector* g : cols)
    if (static_cast<int>(g->size()) != n)
      throw DimensionError("cone_member: generator length != target length");
  if (vec_is_zero(target)) return ConeCertificate{};
  if (cols.empty()) return FarkasCertificate{target};
  return Phase1(cols, target).solve();
}

std::vector<const SignVector*> full_view(const std::vector<SignVector>& gens) {
  std::vector<const SignVector*> v(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) v[i] = &gens[i];
  return v;
}

// Remaps certificate indices from view positions to original positions.
MemberResult remap(MemberResult r, const std::vector<int>& keep) {
  if (auto* cert = std::get_if<ConeCertificate>(&r))
    for (auto& [idx, coeff] : cert->gamma) idx = keep[idx];
  return r;
}

}  // namespace

MemberResult cone_member(const std::vector<SignVector>& gens, const RatVec& target) {
  return solve_view(full_view(gens), target);
}

MemberResult cone_member(const GeneratorSet& gs, const RatVec& target) {
  return cone_member(gs.members, target);
}

MemberResult cone_member_subset(const std::vector<SignVector>& gens,
                                const std::vector<int>& keep, const RatVec& target) {
  std::vector<const SignVector*> view;
  view.reserve(keep.size());
  for (int i : keep) {
    if (i < 0 || i >= static_cast<int>(gens.size()))
      throw std::invalid_argument("cone_member_subset: index out of range");
    view.push_back(&gens[i]);
  }
  return remap(solve_view(view, target), keep);
}

bool requires_generator(const std::vector<SignVector>& gens, const RatVec& target,
                        int g_index) {
  if (g_index < 0 || g_index >= static_cast<int>(gens.size()))
    throw std::invalid_argument("requires_generator: index out of range");
  if (!is_member(cone_member(gens, target)))
    throw std::invalid_argument("requires_generator: target is not in cone(gens)");
  std::vector<const SignVector*> view;
  view.reserve(gens.size() - 1);
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    if (i != g_index) view.push_back(&gens[i]);
  return !is_member(solve_view(view, target));
}

GeneratorSet elementwise_minimal(const GeneratorSet& gs, int workers) {
  const auto& members = gs.members;
  const int m = static_cast<int>(members.size());
  std::vector<char> removable(m, 0);
  parallel_for(m, workers, [&](std::size_t i) {
    std::vector<const SignVector*> view;
    view.reserve(m - 1);
    for (int j = 0; j < m; ++j)
      if (j != static_cast<int>(i)) view.push_back(&members[j]);
    removable[i] = is_member(solve_view(view, to_ratvec(members[i]))) ? 1 : 0;
  });
  GeneratorSet out;
  out.constraints = gs.constraints;
  out.lattice = gs.lattice;
  for (int i = 0; i < m; ++i)
    if (!removable[i]) out.members.push_back(members[i]);
  return out;
}

GeneratorSet irreducible_subset(const GeneratorSet& gs) {
  const auto& members = gs.members;
  const int m = static_cast<int>(members.size());
  std::vector<char> alive(m, 1);
  for (int i = 0; i < m; ++i) {
    std::vector<const SignVector*> view;
    view.reserve(m - 1);
    for (int j = 0; j < m; ++j)
      if (j != i && alive[j]) view.push_back(&members[j]);
    if (is_member(solve_view(view, to_ratvec(members[i])))) alive[i] = 0;
  }
  GeneratorSet out;
  out.constraints = gs.constraints;
  out.lattice = gs.lattice;
  for (int i = 0; i < m; ++i)
    if (alive[i]) out.members.push_back(members[i]);
  return out;
}

std::vector<RatVec> lineality_basis(const std::vector<SignVector>& gens, int workers) {
  const int m = static_cast<int>(gens.size());
  if (m == 0) return {};
  std::set<SignVector> memberset(gens.begin(), gens.end());
  auto view = full_view(gens);
  std::vector<char> lineal(m, 0);
  parallel_for(m, workers, [&](std::size_t i) {
    SignVector neg = gens[i];
    for (auto& v : neg) v = static_cast<std::int8_t>(-v);
    if (memberset.count(neg) || is_member(solve_view(view, to_ratvec(neg))))
      lineal[i] = 1;
  });
  std::vector<RatVec> dirs;
  for (int i = 0; i < m; ++i)
    if (lineal[i]) dirs.push_back(to_ratvec(gens[i]));
  return row_space_basis(std::move(dirs));
}

void verify_member_result(const std::vector<SignVector>& gens, const RatVec& target,
                          const MemberResult& result) {
  if (const auto* cert = std::get_if<ConeCertificate>(&result)) {
    RatVec sum(target.size());
    int prev = -1;
    for (const auto& [idx, coeff] : cert->gamma) {
      if (idx <= prev) throw std::logic_error("certificate: indices not ascending");
      prev = idx;
      if (idx < 0 || idx >= static_cast<int>(gens.size()))
        throw std::logic_error("certificate: generator index out of range");
      if (coeff.sgn() <= 0) throw std::logic_error("certificate: nonpositive coefficient");
      const SignVector& g = gens[idx];
      for (std::size_t i = 0; i < sum.size(); ++i) {
        if (g[i] == 1)
          sum[i] += coeff;
        else if (g[i] == -1)
          sum[i] -= coeff;
      }
    }
    if (sum != target) throw std::logic_error("certificate: combination misses target");
    return;
  }
  const auto& farkas = std::get<FarkasCertificate>(result);
  if (farkas.y.size() != target.size())
    throw std::logic_error("farkas: length mismatch");
  for (const SignVector& g : gens)
    if (dot_rat(g, farkas.y).sgn() > 0)
      throw std::logic_error("farkas: fails to separate generator " + sign_vec_str(g));
  if (dot(farkas.y, target).sgn() <= 0)
    throw std::logic_error("farkas: does not cut off the target");
}

std::vector<int> conformal_reduce(const std::vector<SignVector>& members) {
  std::vector<int> kept(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) kept[i] = static_cast<int>(i);
  if (members.empty()) return kept;
  const std::size_t n = members.front().size();
  if (n > 32) return kept;

  auto encode = [n](const SignVector& h) {
    std::uint64_t pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (h[i] == 1) pos |= std::uint64_t(1) << i;
      else if (h[i] == -1) neg |= std::uint64_t(1) << i;
    }
    return (pos << 32) | neg;
  };

  std::vector<std::uint64_t> code(members.size());
  std::unordered_set<std::uint64_t> present;
  present.reserve(members.size() * 2);
  for (std::size_t i = 0; i < members.size(); ++i) {
    code[i] = encode(members[i]);
    present.insert(code[i]);
  }

  std::vector<char> removed(members.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (removed[i]) continue;
      const std::uint64_t pos = code[i] >> 32, neg = code[i] & 0xffffffffULL;
      if (std::popcount(pos | neg) < 2) continue;
      bool split = false;
      // proper conformal splits: p subset of pos, m subset of neg, both parts nonzero
      for (std::uint64_t p = pos;; p = (p - 1) & pos) {
        for (std::uint64_t m = neg;; m = (m - 1) & neg) {
          if (!((p | m) == 0 || (p == pos && m == neg))) {
            std::uint64_t a = (p << 32) | m;
            std::uint64_t b = ((pos ^ p) << 32) | (neg ^ m);
            if (present.count(a) && present.count(b)) {
              split = true;
              break;
            }
          }
          if (m == 0) break;
        }
        if (split || p == 0) break;
      }
      if (split) {
        removed[i] = 1;
        present.erase(code[i]);
        changed = true;
      }
    }
  }

  std::vector<int> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!removed[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace copx
