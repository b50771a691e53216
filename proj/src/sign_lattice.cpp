#include "copx/sign_lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "copx/parallel.hpp"

namespace copx {

namespace {

// Per-coordinate value domains in lexicographic order.
std::vector<std::vector<std::int8_t>> domains(const Lattice& lat) {
  std::vector<std::vector<std::int8_t>> d(lat.n);
  std::vector<bool> shifted(lat.n, false);
  for (int c : lat.support) shifted[c] = true;
  for (int i = 0; i < lat.n; ++i) {
    switch (lat.kind) {
      case LatticeKind::cube: d[i] = {0, 1}; break;
      case LatticeKind::shifted_cube:
        d[i] = shifted[i] ? std::vector<std::int8_t>{-1, 0} : std::vector<std::int8_t>{0, 1};
        break;
      case LatticeKind::full: d[i] = {-1, 0, 1}; break;
    }
  }
  return d;
}

void check_caps(const Lattice& lat, const LatticeCaps& caps) {
  if (lat.n <= 0) throw std::invalid_argument("lattice: n must be positive");
  int cap = lat.kind == LatticeKind::full ? caps.full_lattice_cap : caps.cube_cap;
  const char* cap_name =
      lat.kind == LatticeKind::full ? "full_lattice_cap" : "cube_cap";
  if (lat.n > cap)
    throw SizeCapError("lattice enumeration at n = " + std::to_string(lat.n) +
                       " exceeds " + cap_name + " = " + std::to_string(cap));
}

// Decodes the mixed-radix rank into the lattice vector at that lexicographic
// position. Most significant digit is coordinate 0.
SignVector decode(const std::vector<std::vector<std::int8_t>>& dom, std::uint64_t rank) {
  SignVector h(dom.size());
  for (std::size_t i = dom.size(); i-- > 0;) {
    std::uint64_t base = dom[i].size();
    h[i] = dom[i][rank % base];
    rank /= base;
  }
  return h;
}

// Advances h to the next vector in lexicographic order; false once exhausted.
bool advance_vec(const std::vector<std::vector<std::int8_t>>& dom, SignVector& h) {
  for (std::size_t i = dom.size(); i-- > 0;) {
    const auto& d = dom[i];
    if (h[i] != d.back()) {
      auto it = std::find(d.begin(), d.end(), h[i]);
      h[i] = *(it + 1);
      for (std::size_t j = i + 1; j < dom.size(); ++j) h[j] = dom[j].front();
      return true;
    }
  }
  return false;
}

bool all_zero(const SignVector& h) {
  return std::all_of(h.begin(), h.end(), [](std::int8_t v) { return v == 0; });
}

std::vector<std::vector<int>> to_int_points(const Instance& inst) {
  std::vector<std::vector<int>> pts(inst.vertices.size());
  for (std::size_t k = 0; k < inst.vertices.size(); ++k)
    pts[k].assign(inst.vertices[k].begin(), inst.vertices[k].end());
  return pts;
}

}  // namespace

RatVec to_ratvec(const SignVector& h) {
  RatVec r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = Rat(static_cast<int>(h[i]));
  return r;
}

std::string sign_vec_str(const SignVector& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(h[i]));
  }
  return s + ")";
}

long dot_int(const SignVector& h, const std::vector<std::uint8_t>& x) {
  if (h.size() != x.size()) throw DimensionError("dot_int: length mismatch");
  long acc = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (x[i]) acc += h[i];
  return acc;
}

long dot_int(const SignVector& h, const std::vector<int>& x) {
  if (h.size() != x.size()) throw DimensionError("dot_int: length mismatch");
  long acc = 0;
  for (std::size_t i = 0; i < h.size(); ++i) acc += static_cast<long>(h[i]) * x[i];
  return acc;
}

Rat dot_rat(const SignVector& h, const RatVec& x) {
  if (h.size() != x.size()) throw DimensionError("dot_rat: length mismatch");
  Rat acc;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 1)
      acc += x[i];
    else if (h[i] == -1)
      acc -= x[i];
  }
  return acc;
}

Lattice Lattice::cube(int n) { return {LatticeKind::cube, n, {}}; }

Lattice Lattice::shifted(int n, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (int c : support)
    if (c < 0 || c >= n)
      throw std::invalid_argument("shifted lattice: support index out of range");
  return {LatticeKind::shifted_cube, n, std::move(support)};
}

Lattice Lattice::full(int n) { return {LatticeKind::full, n, {}}; }

std::uint64_t lattice_size(const Lattice& lat) {
  std::uint64_t s = 1;
  for (int i = 0; i < lat.n; ++i) s *= lat.kind == LatticeKind::full ? 3 : 2;
  return s;
}

std::string lattice_kind_name(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::cube: return "cube";
    case LatticeKind::shifted_cube: return "shifted";
    case LatticeKind::full: return "full";
  }
  return "?";
}

std::vector<SignVector> enum_lattice(const Lattice& lat, const LatticeCaps& caps) {
  check_caps(lat, caps);
  auto dom = domains(lat);
  std::vector<SignVector> out;
  out.reserve(lattice_size(lat));
  SignVector h(lat.n);
  for (int i = 0; i < lat.n; ++i) h[i] = dom[i].front();
  do {
    out.push_back(h);
  } while (advance_vec(dom, h));
  return out;
}

SignVector shift_by_support(const SignVector& h, const std::vector<int>& C) {
  SignVector out = h;
  for (int c : C) {
    if (c < 0 || c >= static_cast<int>(h.size()))
      throw std::invalid_argument("shift_by_support: index out of range");
    if (out[c] == -1)
      throw std::invalid_argument("shift_by_support: entry already -1 at index " +
                                  std::to_string(c));
    out[c] = static_cast<std::int8_t>(out[c] - 1);
  }
  return out;
}

std::vector<SignVector> filter_lattice(const Lattice& lat,
                                       const std::vector<std::vector<int>>& points,
                                       int anchor, const std::vector<int>& equal_to,
                                       const DominanceSel& dominating,
                                       const LatticeCaps& caps, int workers) {
  check_caps(lat, caps);
  const int npts = static_cast<int>(points.size());
  auto in_range = [&](int k) { return k >= 0 && k < npts; };
  if (!in_range(anchor)) throw std::invalid_argument("filter_lattice: anchor out of range");
  for (int j : equal_to)
    if (!in_range(j)) throw std::invalid_argument("filter_lattice: equal_to index out of range");
  for (int l : dominating.idx)
    if (!in_range(l)) throw std::invalid_argument("filter_lattice: dominating index out of range");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != lat.n)
      throw DimensionError("filter_lattice: point length != lattice n");

  auto dom = domains(lat);
  const std::uint64_t total = lattice_size(lat);
  const std::uint64_t chunk = 1 << 16;
  const std::uint64_t nchunks = (total + chunk - 1) / chunk;

  std::vector<std::vector<SignVector>> parts(nchunks);
  parallel_for(nchunks, workers, [&](std::size_t ci) {
    const std::uint64_t begin = ci * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    SignVector h = decode(dom, begin);
    std::vector<SignVector>& local = parts[ci];
    for (std::uint64_t r = begin; r < end; ++r) {
      if (!all_zero(h)) {
        long pa = dot_int(h, points[anchor]);
        bool ok = true;
        for (int j : equal_to)
          if (dot_int(h, points[j]) != pa) { ok = false; break; }
        if (ok) {
          if (dominating.all_x) {
            for (int l = 0; l < npts && ok; ++l)
              if (dot_int(h, points[l]) > pa) ok = false;
          } else {
            for (int l : dominating.idx)
              if (dot_int(h, points[l]) > pa) { ok = false; break; }
          }
        }
        if (ok) local.push_back(h);
      }
      if (r + 1 < end) advance_vec(dom, h);
    }
  });

  std::vector<SignVector> out;
  for (auto& p : parts)
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

GeneratorSet select_generators(const Instance& inst, const Lattice& lat, int anchor,
                               const std::vector<int>& equal_to,
                               const DominanceSel& dominating, const LatticeCaps& caps,
                               int workers) {
  if (lat.n != inst.n) throw DimensionError("select_generators: lattice n != instance n");
  GeneratorSet gs;
  gs.constraints = {anchor, equal_to, dominating};
  gs.lattice = lat;
  gs.members = filter_lattice(lat, to_int_points(inst), anchor, equal_to, dominating,
                              caps, workers);
  return gs;
}

ChainCheckReport chain_check(const Instance& inst, int k, int j, int l,
                             const std::vector<int>& Y, const LatticeCaps& caps,
                             int workers) {
  const Lattice lat = Lattice::cube(inst.n);
  auto members_of = [&](const std::vector<int>& eq, const DominanceSel& dom) {
    auto m = select_generators(inst, lat, k, eq, dom, caps, workers).members;
    return std::set<SignVector>(m.begin(), m.end());
  };
  const auto hk = members_of({}, DominanceSel::all());
  const auto hkj = members_of({j}, DominanceSel::none());
  const auto hkj_l = members_of({j}, DominanceSel::of({l}));
  const auto hkj_y = members_of({j}, DominanceSel::of(Y));
  const auto hkj_x = members_of({j}, DominanceSel::all());

  ChainCheckReport rep;
  rep.size_hk = hk.size();
  rep.size_hkj = hkj.size();
  rep.size_hkj_l = hkj_l.size();
  rep.size_hkj_y = hkj_y.size();
  rep.size_hkj_x = hkj_x.size();

  auto add = [&](std::string name, bool applicable, const std::set<SignVector>& lhs,
                 const std::set<SignVector>& rhs) {
    InclusionCheck c;
    c.name = std::move(name);
    c.applicable = applicable;
    if (applicable) {
      for (const auto& h : lhs) {
        if (!rhs.count(h)) {
          c.holds = false;
          c.witness = h;
          break;
        }
      }
      if (!c.holds) rep.all_hold = false;
    }
    rep.checks.push_back(std::move(c));
  };

  const bool l_in_y = std::find(Y.begin(), Y.end(), l) != Y.end();
  add("H_kj^Y subseteq H_kj^l", l_in_y, hkj_y, hkj_l);
  add("H_kj^l subseteq H_kj", true, hkj_l, hkj);
  add("H_kj^Y subseteq H_kj", true, hkj_y, hkj);
  add("H_kj^X subseteq H_kj^Y", true, hkj_x, hkj_y);
  add("H_kj^X subseteq H_k", true, hkj_x, hk);
  return rep;
}

}  // namespace copx
