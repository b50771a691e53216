#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "copx/cone.hpp"
#include "copx/facets.hpp"
#include "copx/hull.hpp"
#include "copx/optimality.hpp"
#include "copx/rational.hpp"
#include "copx/sign_lattice.hpp"
#include "copx/verify.hpp"

namespace copx {

using ojson = nlohmann::ordered_json;

ojson json_of(const Rat& r);
ojson json_of(const RatVec& v);
ojson json_of(const SignVector& h);
ojson json_of(const std::vector<SignVector>& hs);
ojson json_of(const GeneratorSet& gs);
ojson json_of(const ConeCertificate& c);
ojson json_of(const FarkasCertificate& c);
ojson json_of(const MemberResult& r);
ojson json_of(const OptimalityVerdict& v);
ojson json_of(const OptimalSetReport& r);
ojson json_of(const TrialMismatch& m);
ojson json_of(const EquivalenceReport& r);
ojson json_of(const LinearConstraint& c);
ojson json_of(const HRep& h);
ojson json_of(const VRep& v);
ojson json_of(const FacetRow& row);
ojson json_of(const Divergence& d);
ojson json_of(const OracleDiff& d);
ojson json_of(const DescriptionReport& d);
ojson json_of(const NecessityReport& r);
ojson json_of(const ClaimParams& p);
ojson json_of(const ClaimEvidence& e);
ojson json_of(const ClaimReport& r);
ojson json_of(const SuiteReport& r);

/// Standalone re-check record for one refuted claim: everything needed to
/// re-run the single check.
ojson counterexample_json(const ClaimReport& r, const std::string& instance_file = "");

/// Parses a JSON file; throws ParseError with the path on malformed input.
ojson load_json(const std::string& path);

Rat rat_from_json(const ojson& j);
RatVec ratvec_from_json(const ojson& j);
LinearConstraint constraint_from_json(const ojson& j);
HRep hrep_from_json(const ojson& j);
/// Reads an optional "box": {"lo": [...], "hi": [...]} member.
std::optional<Box> box_from_json(const ojson& j);

/// Canonical text form: 2-space indent plus trailing newline.
std::string json_text(const ojson& j);

/// Writes json_text(j) to `path`, creating parent directories.
void write_json(const std::string& path, const ojson& j);

}  // namespace copx
