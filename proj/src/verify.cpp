#include "copx/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "copx/cone.hpp"
#include "copx/errors.hpp"
#include "copx/hull.hpp"
#include "copx/json_io.hpp"
#include "copx/parallel.hpp"
#include "copx/rng.hpp"

namespace copx {

const char* claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::L1: return "L1";
    case ClaimId::L2: return "L2";
    case ClaimId::L3: return "L3";
    case ClaimId::L4: return "L4";
    case ClaimId::T1: return "T1";
    case ClaimId::T1b: return "T1b";
    case ClaimId::T1c: return "T1c";
    case ClaimId::L231: return "L231";
    case ClaimId::L232: return "L232";
    case ClaimId::T21: return "T21";
    case ClaimId::T21b: return "T21b";
    case ClaimId::T21c: return "T21c";
    case ClaimId::T3: return "T3";
  }
  return "?";
}

const char* claim_verdict_name(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::confirmed: return "confirmed";
    case ClaimVerdict::refuted: return "refuted";
    case ClaimVerdict::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> instance_points(const Instance& inst) {
  std::vector<std::vector<int>> pts(inst.vertices.size());
  for (std::size_t k = 0; k < inst.vertices.size(); ++k)
    pts[k].assign(inst.vertices[k].begin(), inst.vertices[k].end());
  return pts;
}

std::vector<std::vector<int>> shifted_points(const Instance& inst,
                                             const std::vector<int>& C) {
  std::vector<std::vector<int>> pts = instance_points(inst);
  for (auto& p : pts)
    for (int i : C) p[i] -= 1;
  return pts;
}

Rat dot_iv(const std::vector<int>& a, const RatVec& x) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rat(a[i]) * x[i];
  return s;
}

std::vector<RatVec> members_with_zero(const std::vector<SignVector>& members, int n) {
  std::vector<RatVec> out;
  out.reserve(members.size() + 1);
  out.emplace_back(n, Rat(0));
  for (const auto& g : members) out.push_back(to_ratvec(g));
  std::sort(out.begin(), out.end());
  return out;
}

/// Direct arithmetic re-check that a witness point lies in the claim's box
/// and satisfies its anchored constraints.
void recheck_region_point(const std::vector<std::vector<int>>& pts, int anchor,
                          const std::vector<int>& equal_to, const DominanceSel& dom,
                          const Box& box, const RatVec& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < box.lo[i] || p[i] > box.hi[i])
      throw std::logic_error("region witness failed box re-check");
  Rat base = dot_iv(pts[anchor], p);
  for (int j : equal_to)
    if (dot_iv(pts[j], p) != base)
      throw std::logic_error("region witness failed equality re-check");
  if (dom.all_x) {
    for (const auto& q : pts)
      if (dot_iv(q, p) > base) throw std::logic_error("region witness failed dominance re-check");
  } else {
    for (int l : dom.idx)
      if (dot_iv(pts[l], p) > base)
        throw std::logic_error("region witness failed dominance re-check");
  }
}

struct RegionShape {
  Lattice lattice;
  std::vector<int> equal_to;
  DominanceSel dominating = DominanceSel::none();
  bool shifted_pts = false;  // T1b: both sides run over the shifted vertex set
};

RegionShape region_shape(const Instance& inst, ClaimId id, const ClaimParams& p) {
  auto need = [&](const std::optional<int>& f, const char* what) {
    if (!f) throw std::invalid_argument(std::string("claim needs parameter ") + what);
    return *f;
  };
  RegionShape s;
  s.lattice = Lattice::cube(inst.n);
  switch (id) {
    case ClaimId::L1:
      s.equal_to = {need(p.j, "j")};
      break;
    case ClaimId::L2:
      s.equal_to = {need(p.j, "j"), need(p.l, "l")};
      break;
    case ClaimId::L3:
      s.equal_to = {need(p.j, "j")};
      s.dominating = DominanceSel::of({need(p.l, "l")});
      break;
    case ClaimId::L4:
      if (!p.Y) throw std::invalid_argument("claim needs parameter Y");
      s.equal_to = {need(p.j, "j")};
      s.dominating = DominanceSel::of(*p.Y);
      break;
    case ClaimId::T1:
      s.dominating = DominanceSel::all();
      break;
    case ClaimId::T1c:
      if (!p.C) throw std::invalid_argument("claim needs parameter C");
      s.lattice = Lattice::shifted(inst.n, *p.C);
      s.dominating = DominanceSel::all();
      break;
    case ClaimId::T1b:
      if (!p.C) throw std::invalid_argument("claim needs parameter C");
      s.lattice = Lattice::shifted(inst.n, *p.C);
      s.dominating = DominanceSel::all();
      s.shifted_pts = true;
      break;
    default:
      throw std::invalid_argument("not a region claim");
  }
  return s;
}

}  // namespace

ClaimReport check_region_claim(const Instance& inst, const std::string& tag,
                               ClaimId id, const ClaimParams& params,
                               const Config& cfg) {
  ClaimReport rep;
  rep.claim = id;
  rep.instance_tag = tag;
  rep.params = params;
  if (!params.k) throw std::invalid_argument("claim needs parameter k");
  int k = *params.k;

  RegionShape shape = region_shape(inst, id, params);
  Box box = Box::for_lattice(shape.lattice);

  std::vector<std::vector<int>> pts =
      shape.shifted_pts ? shifted_points(inst, *params.C) : instance_points(inst);
  std::vector<SignVector> members =
      filter_lattice(shape.lattice, pts, k, shape.equal_to, shape.dominating,
                     cfg.lattice, cfg.workers);
  VRep region = region_vertices_points(box, pts, k, shape.equal_to, shape.dominating,
                                       cfg.hull);

  std::vector<RatVec> gens = members_with_zero(members, inst.n);
  if (region.vertices == gens) {
    rep.verdict = ClaimVerdict::confirmed;
    return rep;
  }

  rep.verdict = ClaimVerdict::refuted;
  std::set_difference(region.vertices.begin(), region.vertices.end(), gens.begin(),
                      gens.end(), std::back_inserter(rep.evidence.region_only));
  std::set_difference(gens.begin(), gens.end(), region.vertices.begin(),
                      region.vertices.end(), std::back_inserter(rep.evidence.gens_only));
  for (const auto& p : rep.evidence.region_only)
    recheck_region_point(pts, k, shape.equal_to, shape.dominating, box, p);
  for (const auto& g : rep.evidence.gens_only)
    recheck_region_point(pts, k, shape.equal_to, shape.dominating, box, g);
  rep.evidence.note = "region vertex set and generator set differ";
  return rep;
}

ClaimReport check_product_identity(const Instance& inst, const std::string& tag,
                                   const std::vector<int>& C, int samples,
                                   std::uint64_t seed, const Config& cfg) {
  (void)cfg;
  ClaimReport rep;
  rep.claim = ClaimId::L231;
  rep.instance_tag = tag;
  rep.params.C = C;
  rep.params.trials = static_cast<std::uint64_t>(samples);
  rep.params.seed = seed;

  Box box = Box::for_lattice(Lattice::shifted(inst.n, C));
  std::vector<std::vector<int>> orig = instance_points(inst);
  std::vector<std::vector<int>> shif = shifted_points(inst, C);

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    RatVec x(inst.n);
    for (int i = 0; i < inst.n; ++i) {
      long den = rng.uniform(1, 1000);
      long num = rng.uniform(0, den);
      x[i] = Rat(mpz_class(num), mpz_class(den)) + box.lo[i];
    }
    Rat first = dot_iv(orig[0], x) - dot_iv(shif[0], x);
    for (std::size_t k = 1; k < orig.size(); ++k) {
      Rat dk = dot_iv(orig[k], x) - dot_iv(shif[k], x);
      if (dk != first) {
        rep.verdict = ClaimVerdict::refuted;
        rep.evidence.witness_point = x;
        rep.evidence.note = "dot-product drop differs between vertices 0 and " +
                            std::to_string(k) + ": " + first.str() + " vs " + dk.str();
        return rep;
      }
    }
  }
  rep.verdict = ClaimVerdict::confirmed;
  return rep;
}

ClaimReport check_shift_equality(const Instance& inst, const std::string& tag, int k,
                                 const std::vector<int>& C, const Config& cfg) {
  ClaimReport rep;
  rep.claim = ClaimId::L232;
  rep.instance_tag = tag;
  rep.params.k = k;
  rep.params.C = C;

  Lattice lat = Lattice::shifted(inst.n, C);
  std::vector<SignVector> via_orig =
      filter_lattice(lat, instance_points(inst), k, {}, DominanceSel::all(),
                     cfg.lattice, cfg.workers);
  std::vector<SignVector> via_shift =
      filter_lattice(lat, shifted_points(inst, C), k, {}, DominanceSel::all(),
                     cfg.lattice, cfg.workers);

  if (via_orig == via_shift) {
    rep.verdict = ClaimVerdict::confirmed;
    return rep;
  }
  rep.verdict = ClaimVerdict::refuted;
  std::set_difference(via_orig.begin(), via_orig.end(), via_shift.begin(),
                      via_shift.end(), std::back_inserter(rep.evidence.set_diff));
  std::set_difference(via_shift.begin(), via_shift.end(), via_orig.begin(),
                      via_orig.end(), std::back_inserter(rep.evidence.set_diff));
  rep.evidence.note = "filters over original and shifted vertex sets disagree";
  return rep;
}

std::vector<ClaimReport> check_shift_claims(const Instance& inst, const std::string& tag,
                                            int k, const std::vector<int>& C,
                                            int samples, std::uint64_t seed,
                                            const Config& cfg) {
  std::vector<ClaimReport> out;
  out.push_back(check_product_identity(inst, tag, C, samples, seed, cfg));
  out.push_back(check_shift_equality(inst, tag, k, C, cfg));
  ClaimParams p;
  p.k = k;
  p.C = C;
  out.push_back(check_region_claim(inst, tag, ClaimId::T1b, p, cfg));
  out.push_back(check_region_claim(inst, tag, ClaimId::T1c, p, cfg));
  return out;
}

ClaimReport check_equivalence(const Instance& inst, const std::string& tag, ClaimId id,
                              std::uint64_t trials, std::uint64_t seed,
                              const Config& cfg) {
  Regime regime;
  switch (id) {
    case ClaimId::T21: regime = Regime::nonneg; break;
    case ClaimId::T21b: regime = Regime::signed_support; break;
    case ClaimId::T21c: regime = Regime::general; break;
    default: throw std::invalid_argument("not an equivalence claim");
  }
  ClaimReport rep;
  rep.claim = id;
  rep.instance_tag = tag;
  rep.params.trials = trials;
  rep.params.seed = seed;

  EquivalenceReport er = equivalence_trial(inst, regime, trials, seed, cfg);
  if (er.ok) {
    rep.verdict = ClaimVerdict::confirmed;
    return rep;
  }
  rep.verdict = ClaimVerdict::refuted;
  rep.evidence.mismatch = er.mismatches.front();
  rep.evidence.note = std::to_string(er.mismatches.size()) + " of " +
                      std::to_string(er.checks) + " vertex checks mismatched";
  return rep;
}

ClaimReport check_facet_claim(const Instance& inst, const std::string& tag,
                              MinimalityMode mode, const Config& cfg) {
  ClaimReport rep;
  rep.claim = ClaimId::T3;
  rep.instance_tag = tag;
  rep.params.mode = mode_name(mode);

  if (inst.n > cfg.hull.hull_dim_cap) {
    rep.verdict = ClaimVerdict::skipped;
    rep.evidence.note = "dimension exceeds the hull cap; no oracle comparison";
    return rep;
  }
  DescriptionReport desc = full_description(inst, Variant::V, mode, cfg);
  if (!desc.polytope_match.has_value()) {
    rep.verdict = ClaimVerdict::skipped;
    rep.evidence.note = "dimension exceeds the hull cap; no oracle comparison";
    return rep;
  }
  if (!desc.divergences.empty()) rep.evidence.divergence = desc.divergences.front();
  if (*desc.polytope_match && desc.diff.facets_covered) {
    rep.verdict = ClaimVerdict::confirmed;
    return rep;
  }
  rep.verdict = ClaimVerdict::refuted;
  rep.evidence.missing_facets = desc.diff.missing_facets;
  rep.evidence.note = *desc.polytope_match
                          ? "oracle facets missing from the description"
                          : "description carves a different polytope than conv(X)";
  return rep;
}

SuiteScope SuiteScope::preset(const std::string& name) {
  SuiteScope s;
  if (name == "default") return s;
  s.regions = s.shifts = s.trials = s.facets = false;
  if (name == "regions")
    s.regions = true;
  else if (name == "shift")
    s.shifts = true;
  else if (name == "trials")
    s.trials = true;
  else
    throw std::invalid_argument("unknown suite preset: " + name);
  return s;
}

namespace {

struct SuiteJob {
  ClaimReport base;
  std::function<ClaimReport()> run;
};

std::vector<int> mask_to_set(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

SuiteReport run_suite(const std::vector<std::pair<std::string, Instance>>& instances,
                      const SuiteScope& scope, const Config& cfg) {
  SuiteReport report;
  report.seed = cfg.seed;
  Config inner = cfg;
  inner.workers = 1;

  std::vector<SuiteJob> jobs;
  auto add = [&](const std::string& tag, ClaimId id, ClaimParams params,
                 std::function<ClaimReport()> run) {
    SuiteJob job;
    job.base.claim = id;
    job.base.instance_tag = tag;
    job.base.params = std::move(params);
    job.run = std::move(run);
    jobs.push_back(std::move(job));
  };

  for (std::size_t pos = 0; pos < instances.size(); ++pos) {
    const std::string& tag = instances[pos].first;
    const Instance& inst = instances[pos].second;
    report.instances.push_back(tag);
    const int m = static_cast<int>(inst.vertices.size());
    const int n = inst.n;
    Rng rng = Rng::derived(cfg.seed, 7000 + pos);
    const bool exhaustive = m <= scope.exhaustive_vertices;

    std::vector<std::pair<int, int>> pairs;
    if (exhaustive) {
      for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j)
          if (j != k) pairs.emplace_back(k, j);
    } else {
      std::set<std::pair<int, int>> seen;
      for (int guard = 0;
           static_cast<int>(pairs.size()) < scope.max_pairs && guard < 50 * scope.max_pairs;
           ++guard) {
        int k = static_cast<int>(rng.uniform(0, m - 1));
        int j = static_cast<int>(rng.uniform(0, m - 1));
        if (k == j) continue;
        if (seen.insert({k, j}).second) pairs.emplace_back(k, j);
      }
    }

    std::vector<std::tuple<int, int, int>> triples;
    if (exhaustive) {
      for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j)
          for (int l = 0; l < m; ++l)
            if (k != j && k != l && j != l) triples.emplace_back(k, j, l);
    } else {
      std::set<std::tuple<int, int, int>> seen;
      for (const auto& [k, j] : pairs) {
        for (int guard = 0; guard < 50; ++guard) {
          int l = static_cast<int>(rng.uniform(0, m - 1));
          if (l == k || l == j) continue;
          if (seen.insert({k, j, l}).second) triples.emplace_back(k, j, l);
          break;
        }
      }
    }

    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> ysets;
    if (exhaustive) {
      for (const auto& pr : pairs)
        for (unsigned mask = 0; mask < (1u << m); ++mask)
          ysets.emplace_back(pr, mask_to_set(mask, m));
    } else if (!pairs.empty()) {
      std::vector<int> all(m);
      for (int v = 0; v < m; ++v) all[v] = v;
      ysets.emplace_back(pairs[0], std::vector<int>{});
      ysets.emplace_back(pairs[0], all);
      int want = std::min<int>(scope.max_y_subsets, static_cast<int>(pairs.size()));
      for (int i = 0; i < want; ++i) {
        std::vector<int> Y;
        for (int v = 0; v < m; ++v)
          if (rng.coin()) Y.push_back(v);
        ysets.emplace_back(pairs[i], Y);
      }
    }

    std::vector<std::vector<int>> supports;
    if (n <= scope.exhaustive_support_n) {
      for (unsigned mask = 0; mask < (1u << n); ++mask)
        supports.push_back(mask_to_set(mask, n));
    } else {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      std::set<std::vector<int>> seen{std::vector<int>{}, all};
      supports.push_back({});
      supports.push_back(all);
      for (int guard = 0;
           static_cast<int>(supports.size()) < scope.max_supports && guard < 50 * scope.max_supports;
           ++guard) {
        std::vector<int> C;
        for (int i = 0; i < n; ++i)
          if (rng.coin()) C.push_back(i);
        if (seen.insert(C).second) supports.push_back(C);
      }
    }

    if (scope.regions) {
      for (const auto& [k, j] : pairs) {
        ClaimParams p;
        p.k = k;
        p.j = j;
        add(tag, ClaimId::L1, p,
            [&inst, tag, p, inner] { return check_region_claim(inst, tag, ClaimId::L1, p, inner); });
      }
      for (const auto& [k, j, l] : triples) {
        ClaimParams p;
        p.k = k;
        p.j = j;
        p.l = l;
        add(tag, ClaimId::L2, p,
            [&inst, tag, p, inner] { return check_region_claim(inst, tag, ClaimId::L2, p, inner); });
      }
      for (const auto& [k, j, l] : triples) {
        ClaimParams p;
        p.k = k;
        p.j = j;
        p.l = l;
        add(tag, ClaimId::L3, p,
            [&inst, tag, p, inner] { return check_region_claim(inst, tag, ClaimId::L3, p, inner); });
      }
      for (const auto& [pr, Y] : ysets) {
        ClaimParams p;
        p.k = pr.first;
        p.j = pr.second;
        p.Y = Y;
        add(tag, ClaimId::L4, p,
            [&inst, tag, p, inner] { return check_region_claim(inst, tag, ClaimId::L4, p, inner); });
      }
      for (int k = 0; k < m; ++k) {
        ClaimParams p;
        p.k = k;
        add(tag, ClaimId::T1, p,
            [&inst, tag, p, inner] { return check_region_claim(inst, tag, ClaimId::T1, p, inner); });
      }
    }

    if (scope.shifts) {
      for (const auto& C : supports) {
        ClaimParams p;
        p.C = C;
        p.trials = static_cast<std::uint64_t>(scope.product_samples);
        p.seed = rng.next_u64();
        int samples = scope.product_samples;
        std::uint64_t seed = *p.seed;
        add(tag, ClaimId::L231, p, [&inst, tag, C, samples, seed, inner] {
          return check_product_identity(inst, tag, C, samples, seed, inner);
        });
      }
      for (ClaimId id : {ClaimId::T1b, ClaimId::T1c}) {
        for (int k = 0; k < m; ++k)
          for (const auto& C : supports) {
            ClaimParams p;
            p.k = k;
            p.C = C;
            add(tag, id, p,
                [&inst, tag, id, p, inner] { return check_region_claim(inst, tag, id, p, inner); });
          }
      }
      for (int k = 0; k < m; ++k)
        for (const auto& C : supports) {
          ClaimParams p;
          p.k = k;
          p.C = C;
          add(tag, ClaimId::L232, p, [&inst, tag, k, C, inner] {
            return check_shift_equality(inst, tag, k, C, inner);
          });
        }
    }

    if (scope.trials) {
      for (ClaimId id : {ClaimId::T21, ClaimId::T21b, ClaimId::T21c}) {
        ClaimParams p;
        p.trials = scope.trials_per_instance;
        p.seed = rng.next_u64();
        std::uint64_t trials = *p.trials, seed = *p.seed;
        add(tag, id, p, [&inst, tag, id, trials, seed, inner] {
          return check_equivalence(inst, tag, id, trials, seed, inner);
        });
      }
    }

    if (scope.facets) {
      ClaimParams p;
      p.mode = mode_name(MinimalityMode::irreducible);
      add(tag, ClaimId::T3, p, [&inst, tag, inner] {
        return check_facet_claim(inst, tag, MinimalityMode::irreducible, inner);
      });
    }
  }

  std::vector<ClaimReport> results(jobs.size());
  parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) {
    try {
      results[i] = jobs[i].run();
    } catch (const SizeCapError& e) {
      ClaimReport r = jobs[i].base;
      r.verdict = ClaimVerdict::skipped;
      r.evidence.note = e.what();
      results[i] = r;
    }
  });

  std::size_t counterexamples = 0;
  for (const auto& r : results) {
    switch (r.verdict) {
      case ClaimVerdict::confirmed: ++report.confirmed; break;
      case ClaimVerdict::refuted: ++report.refuted; break;
      case ClaimVerdict::skipped: ++report.skipped; break;
    }
    if (r.verdict == ClaimVerdict::refuted) {
      std::string path = cfg.results_dir + "/counterexample_" + r.instance_tag + "_" +
                         claim_name(r.claim) + "_" + std::to_string(counterexamples++) +
                         ".json";
      write_json(path, counterexample_json(r));
    }
  }
  report.claims = std::move(results);
  report.ok = (report.refuted == 0);
  return report;
}

}  // namespace copx
