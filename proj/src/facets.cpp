#include "copx/facets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "copx/errors.hpp"

namespace copx {

const char* variant_name(Variant v) {
  return v == Variant::V ? "V" : "H";
}

Variant variant_from_name(const std::string& name) {
  if (name == "V") return Variant::V;
  if (name == "H") return Variant::H;
  throw ParseError("unknown variant: " + name);
}

const char* mode_name(MinimalityMode m) {
  return m == MinimalityMode::literal ? "literal" : "irreducible";
}

MinimalityMode mode_from_name(const std::string& name) {
  if (name == "literal") return MinimalityMode::literal;
  if (name == "irreducible") return MinimalityMode::irreducible;
  throw ParseError("unknown minimality mode: " + name);
}

namespace {

void mark_pairs(std::vector<FacetRow>& rows) {
  std::map<std::pair<SignVector, Rat>, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i)
    index.emplace(std::make_pair(rows[i].h, rows[i].rhs), i);
  for (FacetRow& row : rows) {
    SignVector neg(row.h.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -row.h[i];
    row.paired = index.count(std::make_pair(neg, -row.rhs)) > 0;
  }
}

std::vector<int> oracle_tight(const Instance& inst, const LinearConstraint& c) {
  std::vector<int> tight;
  for (std::size_t k = 0; k < inst.vertices.size(); ++k)
    if (dot(c.a, inst.vertex_rat(static_cast<int>(k))) == c.b)
      tight.push_back(static_cast<int>(k));
  return tight;
}

RatVec augmented(const RatVec& a, const Rat& b) {
  RatVec row = a;
  row.push_back(b);
  return row;
}

}  // namespace

VertexFacets vertex_facets(const Instance& inst, int anchor, Variant variant,
                           MinimalityMode mode, const Config& cfg) {
  if (anchor < 0 || static_cast<std::size_t>(anchor) >= inst.vertices.size())
    throw std::invalid_argument("anchor index out of range");

  VertexFacets out;
  out.anchor = anchor;
  out.variant = variant;
  out.mode = mode;

  Lattice lat = variant == Variant::V ? Lattice::full(inst.n) : Lattice::cube(inst.n);
  out.full = select_generators(inst, lat, anchor, {}, DominanceSel::all(), cfg.lattice,
                               cfg.workers);
  out.reduced = mode == MinimalityMode::literal
                    ? elementwise_minimal(out.full, cfg.workers)
                    : irreducible_subset(out.full);

  if (mode == MinimalityMode::literal) {
    // The per-member tests are independent, so the kept members can span a
    // strictly smaller cone. Find the first dropped generator that was lost.
    std::size_t r = 0;
    for (const SignVector& g : out.full.members) {
      if (r < out.reduced.members.size() && out.reduced.members[r] == g) {
        ++r;
        continue;
      }
      MemberResult back = cone_member(out.reduced.members, to_ratvec(g));
      if (!is_member(back)) {
        Divergence d;
        d.anchor = anchor;
        d.missing = g;
        d.gap = std::get<FarkasCertificate>(back);
        d.lineality = lineality_basis(out.full.members, cfg.workers);
        out.divergence = std::move(d);
        break;
      }
    }
  }

  for (const SignVector& h : out.reduced.members) {
    FacetRow row;
    row.h = h;
    row.rhs = Rat(dot_int(h, inst.vertices[anchor]));
    row.sources = {anchor};
    row.face = face_classify(inst, h, row.rhs);
    out.rows.push_back(std::move(row));
  }
  mark_pairs(out.rows);
  return out;
}

DescriptionReport full_description(const Instance& inst, Variant variant,
                                   MinimalityMode mode, const Config& cfg) {
  DescriptionReport rep;
  rep.variant = variant;
  rep.mode = mode;

  std::map<std::pair<SignVector, Rat>, FacetRow> merged;
  for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k) {
    VertexFacets vf = vertex_facets(inst, k, variant, mode, cfg);
    if (vf.divergence) rep.divergences.push_back(*vf.divergence);
    for (FacetRow& row : vf.rows) {
      auto key = std::make_pair(row.h, row.rhs);
      auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(std::move(key), std::move(row));
      else
        it->second.sources.push_back(k);
    }
  }
  for (auto& [key, row] : merged) rep.rows.push_back(std::move(row));
  mark_pairs(rep.rows);

  if (inst.n > cfg.hull.hull_dim_cap) return rep;

  VRep all;
  for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k)
    all.vertices.push_back(inst.vertex_rat(k));
  std::sort(all.vertices.begin(), all.vertices.end());
  rep.oracle = vrep_to_hrep(all, cfg.hull);

  HRep sys;
  for (const FacetRow& row : rep.rows)
    sys.inequalities.push_back({to_ratvec(row.h), row.rhs});
  VRep carved = hrep_to_vrep(sys, Box::unit(inst.n), cfg.hull);
  rep.polytope_match = (carved.vertices == all.vertices);

  for (const LinearConstraint& c : rep.oracle.inequalities) {
    std::vector<int> tight = oracle_tight(inst, c);
    bool covered = false;
    for (const FacetRow& row : rep.rows)
      if (row.face.cls == FaceClass::facet && row.face.tight == tight) {
        covered = true;
        break;
      }
    if (!covered) rep.diff.missing_facets.push_back(std::move(tight));
  }
  rep.diff.facets_covered = rep.diff.missing_facets.empty();

  std::vector<RatVec> pinned;
  for (const FacetRow& row : rep.rows)
    if (row.paired) pinned.push_back(augmented(to_ratvec(row.h), row.rhs));
  const int base_rank = pinned.empty() ? 0 : linear_rank(pinned);
  for (const LinearConstraint& e : rep.oracle.equalities) {
    std::vector<RatVec> probe = pinned;
    probe.push_back(augmented(e.a, e.b));
    if (linear_rank(probe) != base_rank) rep.diff.missing_equalities.push_back(e);
  }
  rep.diff.equalities_covered = rep.diff.missing_equalities.empty();

  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    if (!rep.rows[i].paired && rep.rows[i].face.cls != FaceClass::facet)
      rep.diff.non_facet_rows.push_back(static_cast<int>(i));

  std::map<std::pair<SignVector, Rat>, int> index;
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    index.emplace(std::make_pair(rep.rows[i].h, rep.rows[i].rhs), static_cast<int>(i));
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    SignVector neg(rep.rows[i].h.size());
    for (std::size_t t = 0; t < neg.size(); ++t) neg[t] = -rep.rows[i].h[t];
    auto it = index.find(std::make_pair(neg, -rep.rows[i].rhs));
    if (it != index.end() && static_cast<int>(i) < it->second)
      rep.diff.improper_pairs.emplace_back(static_cast<int>(i), it->second);
  }

  rep.ok = *rep.polytope_match;
  return rep;
}

namespace {

bool is_box_row(const FacetRow& row) {
  int nz = 0, dir = 0;
  for (std::int8_t v : row.h) {
    if (v == 0) continue;
    ++nz;
    dir = v;
  }
  if (nz != 1) return false;
  return (dir == 1 && row.rhs == Rat(1)) || (dir == -1 && row.rhs == Rat(0));
}

}  // namespace

NecessityReport necessity_audit(const Instance& inst, const DescriptionReport& desc,
                                const Config& cfg) {
  if (!desc.polytope_match || !*desc.polytope_match)
    throw std::invalid_argument("necessity audit needs a polytope-matching description");

  VRep all;
  for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k)
    all.vertices.push_back(inst.vertex_rat(k));
  std::sort(all.vertices.begin(), all.vertices.end());

  NecessityReport rep;
  for (std::size_t skip = 0; skip < desc.rows.size(); ++skip) {
    if (is_box_row(desc.rows[skip])) {
      rep.box_rows.push_back(static_cast<int>(skip));
      continue;
    }
    HRep sys;
    for (std::size_t i = 0; i < desc.rows.size(); ++i)
      if (i != skip) sys.inequalities.push_back({to_ratvec(desc.rows[i].h), desc.rows[i].rhs});
    VRep carved = hrep_to_vrep(sys, Box::unit(inst.n), cfg.hull);
    if (carved.vertices == all.vertices)
      rep.unnecessary.push_back(static_cast<int>(skip));
    else
      rep.necessary.push_back(static_cast<int>(skip));
  }
  rep.all_necessary = rep.unnecessary.empty();
  return rep;
}

}  // namespace copx
