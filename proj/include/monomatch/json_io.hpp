#pragma once

#include <json.hpp>

#include "monomatch/components.hpp"
#include "monomatch/extremal.hpp"
#include "monomatch/oracle.hpp"
#include "monomatch/solver.hpp"
#include "monomatch/structure.hpp"

namespace monomatch {

/// Keys keep insertion order so emitted documents follow the documented field order.
using Json = nlohmann::ordered_json;

Json to_json(const Matching& m);
Json to_json(const TuttePartition& p);
Json to_json(const HypothesisReport& h);
Json to_json(const Certificate& c);
Json to_json(const SolveResult& r);
Json to_json(const GiantTrace& t);
Json to_json(const Match2Outcome& o);
Json to_json(const RegionDecomposition& rd);
Json to_json(const ZeroClaimsReport& r);
Json to_json(const StructuralCertificate& c);
Json to_json(const CycleSearchResult& r);
/// Witness colorings are embedded in the colored-graph text format.
Json to_json(const ExhaustiveTable& t);

/// Throws ParseError on missing or mistyped fields.
Matching matching_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace monomatch
