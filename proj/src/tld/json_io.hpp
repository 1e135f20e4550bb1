#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "tld/axioms.hpp"
#include "tld/gen.hpp"
#include "tld/graph.hpp"
#include "tld/profile.hpp"
#include "tld/reductions.hpp"
#include "tld/rules.hpp"
#include "tld/steiner.hpp"

namespace tld {

using Json = nlohmann::ordered_json;

/// Parses text, throwing ParseError with the parser's message.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

DeliberationProfile profile_from_json(const Json& doc);
Json profile_to_json(const DeliberationProfile& p);

GraphInput graph_input_from_json(const Json& doc);
Json graph_to_json(const TLDGraph& g);

/// Election documents (with "rounds") are compiled; graph documents (with
/// "edges") are validated directly.
TLDGraph graph_from_json(const Json& doc);

Json solution_to_json(const TLDGraph& g, const RuleResult& result);
DelegationSolution solution_from_json(const TLDGraph& g, const Json& doc);

/// Validity clauses plus confluence and time-consciousness verdicts.
Json report_to_json(const TLDGraph& g, const DelegationSolution& sol);

Json steiner_to_json(const TLDGraph& g, const SteinerInstance& inst,
                     const std::optional<SteinerTree>& tree = std::nullopt);

TmstInstance tmst_from_json(const Json& doc);
RestlessInstance restless_from_json(const Json& doc);

/// Graph document of the constructed instance with a "reduction" block
/// holding k and the dummy abstainer.
Json reduction_to_json(const Reduction& r, const std::string& kind, const Json& extra = Json::object());

GenParams gen_params_from_json(const Json& doc);

}  // namespace tld
