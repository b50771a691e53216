#include "copx/optimality.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "copx/errors.hpp"
#include "copx/parallel.hpp"
#include "copx/rng.hpp"

namespace copx {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::nonneg:
      return "nonneg";
    case Regime::signed_support:
      return "signed_support";
    case Regime::general:
      return "general";
  }
  throw std::logic_error("bad regime value");
}

Regime regime_from_name(const std::string& name) {
  if (name == "nonneg") return Regime::nonneg;
  if (name == "signed_support") return Regime::signed_support;
  if (name == "general") return Regime::general;
  throw ParseError("unknown regime: " + name);
}

std::vector<int> negative_support(const RatVec& c) {
  std::vector<int> C;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].sgn() < 0) C.push_back(static_cast<int>(i));
  return C;
}

Lattice regime_lattice(Regime regime, const RatVec& c) {
  const int n = static_cast<int>(c.size());
  switch (regime) {
    case Regime::nonneg:
      for (const Rat& ci : c)
        if (ci.sgn() < 0)
          throw std::invalid_argument("nonneg regime requires nonnegative weights");
      return Lattice::cube(n);
    case Regime::signed_support:
      return Lattice::shifted(n, negative_support(c));
    case Regime::general:
      return Lattice::full(n);
  }
  throw std::logic_error("bad regime value");
}

GeneratorCache::GeneratorCache(const Instance& inst, LatticeCaps caps, int workers)
    : inst_(inst), caps_(caps), workers_(workers) {}

const GeneratorCache::Entry& GeneratorCache::entry(const Lattice& lat, int anchor) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_tuple(static_cast<int>(lat.kind), lat.support, anchor);
  auto it = sets_.find(key);
  if (it == sets_.end()) {
    Entry e;
    e.set = select_generators(inst_, lat, anchor, {}, DominanceSel::all(), caps_,
                              workers_);
    e.keep = conformal_reduce(e.set.members);
    it = sets_.emplace(std::move(key), std::move(e)).first;
  }
  return it->second;
}

const GeneratorSet& GeneratorCache::get(const Lattice& lat, int anchor) {
  return entry(lat, anchor).set;
}

namespace {

bool contains_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

OptimalityVerdict decide_optimal(const Instance& inst, const RatVec& c, int k,
                                 Regime regime, GeneratorCache& cache,
                                 const Config& cfg) {
  (void)cfg;
  if (static_cast<int>(c.size()) != inst.n)
    throw DimensionError("weight vector length differs from instance dimension");
  if (k < 0 || static_cast<std::size_t>(k) >= inst.vertices.size())
    throw std::invalid_argument("vertex index out of range");

  Lattice lat = regime_lattice(regime, c);
  const GeneratorCache::Entry& ge = cache.entry(lat, k);

  OptimalityVerdict v;
  v.vertex = k;
  v.regime = regime;
  if (regime == Regime::signed_support) v.shift_support = lat.support;
  v.witness = cone_member_subset(ge.set.members, ge.keep, c);
  verify_member_result(ge.set.members, c, v.witness);
  v.optimal = is_member(v.witness);
  v.cross_check = (v.optimal == contains_sorted(argmax_brute(inst, c), k));
  return v;
}

OptimalityVerdict decide_optimal(const Instance& inst, const RatVec& c, int k,
                                 Regime regime, const Config& cfg) {
  GeneratorCache cache(inst, cfg.lattice, cfg.workers);
  return decide_optimal(inst, c, k, regime, cache, cfg);
}

OptimalSetReport optimal_set(const Instance& inst, const RatVec& c, Regime regime,
                             GeneratorCache& cache, const Config& cfg) {
  OptimalSetReport rep;
  rep.regime = regime;
  Lattice lat = regime_lattice(regime, c);
  if (regime == Regime::signed_support) rep.shift_support = lat.support;
  rep.brute = argmax_brute(inst, c);
  for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k) {
    rep.verdicts.push_back(decide_optimal(inst, c, k, regime, cache, cfg));
    if (rep.verdicts.back().optimal) rep.optimal.push_back(k);
  }
  rep.agree = (rep.optimal == rep.brute);
  return rep;
}

OptimalSetReport optimal_set(const Instance& inst, const RatVec& c, Regime regime,
                             const Config& cfg) {
  GeneratorCache cache(inst, cfg.lattice, cfg.workers);
  return optimal_set(inst, c, regime, cache, cfg);
}

EquivalenceReport equivalence_trial(const Instance& inst, Regime regime,
                                    std::uint64_t trials, std::uint64_t seed,
                                    const Config& cfg) {
  EquivalenceReport rep;
  rep.instance = inst.family;
  rep.regime = regime;
  rep.seed = seed;
  rep.trials = trials;

  GeneratorCache cache(inst, cfg.lattice, 1);
  std::vector<std::vector<TrialMismatch>> found(trials);
  std::vector<std::uint64_t> checks(trials, 0);

  parallel_for(trials, cfg.workers, [&](std::size_t t) {
    Rng rng = Rng::derived(seed, t);
    RatVec c;
    c.reserve(inst.n);
    const long num_lo = (regime == Regime::nonneg) ? 0 : -1000;
    for (int i = 0; i < inst.n; ++i) c.push_back(rng.rat(num_lo, 1000, 1000));

    OptimalSetReport rs = optimal_set(inst, c, regime, cache, cfg);
    checks[t] = rs.verdicts.size();
    for (const OptimalityVerdict& v : rs.verdicts) {
      if (v.cross_check) continue;
      TrialMismatch m;
      m.trial = t;
      m.regime = regime;
      m.vertex = v.vertex;
      m.c = c;
      m.cone_says = v.optimal;
      m.brute_says = contains_sorted(rs.brute, v.vertex);
      found[t].push_back(std::move(m));
    }
  });

  for (std::uint64_t t = 0; t < trials; ++t) {
    rep.checks += checks[t];
    for (TrialMismatch& m : found[t]) rep.mismatches.push_back(std::move(m));
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace copx
