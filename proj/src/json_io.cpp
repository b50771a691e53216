#include "copx/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace copx {

namespace {

long rat_long(const Rat& r) {
  if (!r.is_integer()) throw std::logic_error("expected integer value, got " + r.str());
  return r.num().get_si();
}

ojson int_array(const std::vector<int>& v) {
  ojson a = ojson::array();
  for (int x : v) a.push_back(x);
  return a;
}

ojson tight_sets(const std::vector<std::vector<int>>& sets) {
  ojson a = ojson::array();
  for (const auto& s : sets) a.push_back(int_array(s));
  return a;
}

}  // namespace

ojson json_of(const Rat& r) { return ojson(r.str()); }

ojson json_of(const RatVec& v) {
  ojson a = ojson::array();
  for (const Rat& r : v) a.push_back(r.str());
  return a;
}

ojson json_of(const SignVector& h) {
  ojson a = ojson::array();
  for (std::int8_t x : h) a.push_back(static_cast<int>(x));
  return a;
}

ojson json_of(const std::vector<SignVector>& hs) {
  ojson a = ojson::array();
  for (const auto& h : hs) a.push_back(json_of(h));
  return a;
}

ojson json_of(const GeneratorSet& gs) {
  ojson j;
  j["anchor"] = gs.constraints.anchor;
  j["lattice"] = lattice_kind_name(gs.lattice.kind);
  j["C"] = int_array(gs.lattice.support);
  j["members"] = json_of(gs.members);
  return j;
}

ojson json_of(const ConeCertificate& c) {
  ojson j;
  j["type"] = "cone";
  ojson g = ojson::object();
  for (const auto& [idx, coef] : c.gamma) g[std::to_string(idx)] = coef.str();
  j["gamma"] = g;
  return j;
}

ojson json_of(const FarkasCertificate& c) {
  ojson j;
  j["type"] = "farkas";
  j["y"] = json_of(c.y);
  return j;
}

ojson json_of(const MemberResult& r) {
  if (is_member(r)) return json_of(std::get<ConeCertificate>(r));
  return json_of(std::get<FarkasCertificate>(r));
}

ojson json_of(const OptimalityVerdict& v) {
  ojson j;
  j["k"] = v.vertex;
  j["regime"] = regime_name(v.regime);
  if (v.regime == Regime::signed_support) j["C"] = int_array(v.shift_support);
  j["optimal"] = v.optimal;
  j["certificate"] = json_of(v.witness);
  j["cross_check"] = v.cross_check;
  return j;
}

ojson json_of(const OptimalSetReport& r) {
  ojson j;
  j["regime"] = regime_name(r.regime);
  if (r.regime == Regime::signed_support) j["C"] = int_array(r.shift_support);
  ojson vs = ojson::array();
  for (const auto& v : r.verdicts) vs.push_back(json_of(v));
  j["verdicts"] = vs;
  j["optimal"] = int_array(r.optimal);
  j["brute"] = int_array(r.brute);
  j["agree"] = r.agree;
  return j;
}

ojson json_of(const TrialMismatch& m) {
  ojson j;
  j["trial"] = m.trial;
  j["regime"] = regime_name(m.regime);
  j["k"] = m.vertex;
  j["c"] = json_of(m.c);
  j["cone_says"] = m.cone_says;
  j["brute_says"] = m.brute_says;
  return j;
}

ojson json_of(const EquivalenceReport& r) {
  ojson j;
  j["instance"] = r.instance;
  j["regime"] = regime_name(r.regime);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["checks"] = r.checks;
  ojson ms = ojson::array();
  for (const auto& m : r.mismatches) ms.push_back(json_of(m));
  j["mismatches"] = ms;
  j["ok"] = r.ok;
  return j;
}

ojson json_of(const LinearConstraint& c) {
  ojson j;
  j["a"] = json_of(c.a);
  j["b"] = c.b.str();
  return j;
}

ojson json_of(const HRep& h) {
  ojson j;
  ojson ineq = ojson::array();
  for (const auto& c : h.inequalities) ineq.push_back(json_of(c));
  ojson eq = ojson::array();
  for (const auto& c : h.equalities) eq.push_back(json_of(c));
  j["inequalities"] = ineq;
  j["equalities"] = eq;
  return j;
}

ojson json_of(const VRep& v) {
  ojson j;
  ojson vs = ojson::array();
  for (const auto& p : v.vertices) vs.push_back(json_of(p));
  j["vertices"] = vs;
  return j;
}

ojson json_of(const FacetRow& row) {
  ojson j;
  j["h"] = json_of(row.h);
  j["rhs"] = rat_long(row.rhs);
  j["class"] = face_class_name(row.face.cls);
  j["tight"] = int_array(row.face.tight);
  j["sources"] = int_array(row.sources);
  j["equality_pair"] = row.paired;
  return j;
}

ojson json_of(const Divergence& d) {
  ojson j;
  j["anchor"] = d.anchor;
  j["missing"] = json_of(d.missing);
  j["gap"] = json_of(d.gap);
  ojson lin = ojson::array();
  for (const auto& v : d.lineality) lin.push_back(json_of(v));
  j["lineality"] = lin;
  return j;
}

ojson json_of(const OracleDiff& d) {
  ojson j;
  j["facets_covered"] = d.facets_covered;
  j["missing_facets"] = tight_sets(d.missing_facets);
  j["equalities_covered"] = d.equalities_covered;
  ojson eqs = ojson::array();
  for (const auto& e : d.missing_equalities) eqs.push_back(json_of(e));
  j["missing_equalities"] = eqs;
  j["non_facet_rows"] = int_array(d.non_facet_rows);
  ojson pairs = ojson::array();
  for (const auto& [a, b] : d.improper_pairs) pairs.push_back(ojson::array({a, b}));
  j["improper_pairs"] = pairs;
  return j;
}

ojson json_of(const DescriptionReport& d) {
  ojson j;
  j["variant"] = variant_name(d.variant);
  j["mode"] = mode_name(d.mode);
  ojson rows = ojson::array();
  for (const auto& r : d.rows) rows.push_back(json_of(r));
  j["rows"] = rows;
  ojson divs = ojson::array();
  for (const auto& dv : d.divergences) divs.push_back(json_of(dv));
  j["divergences"] = divs;
  if (d.polytope_match.has_value())
    j["polytope_match"] = *d.polytope_match;
  else
    j["polytope_match"] = nullptr;
  j["oracle_diff"] = json_of(d.diff);
  j["ok"] = d.ok;
  return j;
}

ojson json_of(const NecessityReport& r) {
  ojson j;
  j["box_rows"] = int_array(r.box_rows);
  j["necessary"] = int_array(r.necessary);
  j["unnecessary"] = int_array(r.unnecessary);
  j["all_necessary"] = r.all_necessary;
  return j;
}

ojson json_of(const ClaimParams& p) {
  ojson j = ojson::object();
  if (p.k) j["k"] = *p.k;
  if (p.j) j["j"] = *p.j;
  if (p.l) j["l"] = *p.l;
  if (p.Y) j["Y"] = int_array(*p.Y);
  if (p.C) j["C"] = int_array(*p.C);
  if (p.mode) j["mode"] = *p.mode;
  if (p.trials) j["trials"] = *p.trials;
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

ojson json_of(const ClaimEvidence& e) {
  ojson j = ojson::object();
  auto points = [](const std::vector<RatVec>& ps) {
    ojson a = ojson::array();
    for (const auto& p : ps) a.push_back(json_of(p));
    return a;
  };
  if (!e.region_only.empty()) j["region_only"] = points(e.region_only);
  if (!e.gens_only.empty()) j["gens_only"] = points(e.gens_only);
  if (e.witness_point) j["witness_point"] = json_of(*e.witness_point);
  if (!e.set_diff.empty()) j["set_diff"] = json_of(e.set_diff);
  if (e.mismatch) j["mismatch"] = json_of(*e.mismatch);
  if (e.divergence) j["divergence"] = json_of(*e.divergence);
  if (!e.missing_facets.empty()) j["missing_facets"] = tight_sets(e.missing_facets);
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

ojson json_of(const ClaimReport& r) {
  ojson j;
  j["claim_id"] = claim_name(r.claim);
  j["instance"] = r.instance_tag;
  j["params"] = json_of(r.params);
  j["verdict"] = claim_verdict_name(r.verdict);
  ojson ev = json_of(r.evidence);
  if (!ev.empty()) j["evidence"] = ev;
  return j;
}

ojson json_of(const SuiteReport& r) {
  ojson j;
  j["seed"] = r.seed;
  ojson insts = ojson::array();
  for (const auto& t : r.instances) insts.push_back(t);
  j["instances"] = insts;
  ojson cs = ojson::array();
  for (const auto& c : r.claims) cs.push_back(json_of(c));
  j["claims"] = cs;
  j["confirmed"] = r.confirmed;
  j["refuted"] = r.refuted;
  j["skipped"] = r.skipped;
  j["ok"] = r.ok;
  return j;
}

ojson counterexample_json(const ClaimReport& r, const std::string& instance_file) {
  ojson j;
  j["claim_id"] = claim_name(r.claim);
  j["instance"] = r.instance_tag;
  if (!instance_file.empty()) j["instance_file"] = instance_file;
  j["params"] = json_of(r.params);
  j["witness"] = json_of(r.evidence);
  return j;
}

ojson load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

Rat rat_from_json(const ojson& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

RatVec ratvec_from_json(const ojson& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  RatVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

LinearConstraint constraint_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw ParseError("constraint needs \"a\" and \"b\" members");
  return {ratvec_from_json(j.at("a")), rat_from_json(j.at("b"))};
}

HRep hrep_from_json(const ojson& j) {
  if (!j.is_object()) throw ParseError("H-representation must be a JSON object");
  HRep h;
  if (j.contains("inequalities"))
    for (const auto& c : j.at("inequalities")) h.inequalities.push_back(constraint_from_json(c));
  if (j.contains("equalities"))
    for (const auto& c : j.at("equalities")) h.equalities.push_back(constraint_from_json(c));
  return h;
}

std::optional<Box> box_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("box")) return std::nullopt;
  const ojson& b = j.at("box");
  if (!b.contains("lo") || !b.contains("hi"))
    throw ParseError("box needs \"lo\" and \"hi\" members");
  Box box{ratvec_from_json(b.at("lo")), ratvec_from_json(b.at("hi"))};
  if (box.lo.size() != box.hi.size()) throw ParseError("box lo/hi length mismatch");
  return box;
}

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

void write_json(const std::string& path, const ojson& j) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << json_text(j);
}

}  // namespace copx
