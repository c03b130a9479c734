#pragma once

#include "json.hpp"

#include "unigraph/graph.hpp"
#include "unigraph/miner.hpp"
#include "unigraph/rao.hpp"
#include "unigraph/unigraph.hpp"
#include "unigraph/verify.hpp"

namespace unigraph {

nlohmann::json to_json(const MiningReport& report);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const ForbiddenPairRecord& record);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json graph_json(const Graph& g);

}  // namespace unigraph
