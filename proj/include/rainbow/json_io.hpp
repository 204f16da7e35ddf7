#pragma once

// JSON forms of certificates, traces and reports. Keys keep insertion order,
// so equal inputs serialize to identical bytes.

#include "json.hpp"

#include "rainbow/constructions.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

Json to_json(const ColoredPath& p);
Json to_json(const ColoredCycle& c);
Json to_json(const ExtremalWitness& w);
Json to_json(const std::optional<FailingTriple>& t);

/// {n, m, verdict, pairs, failure, extremal}, then k_max, k_capped and
/// first_unknown.
Json to_json(const PanconnectivityCertificate& cert);
Json to_json(const HamConnectivityResult& r);
Json to_json(const ObstructionReport& r);
Json to_json(const TheoremCheck& t);

Json to_json(const BranchTrace& t);
Json to_json(const ReplayResult& r, bool with_traces);

Json to_json(const GenSpec& spec);

}  // namespace rainbow
