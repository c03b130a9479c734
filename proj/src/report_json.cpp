#include "unigraph/report_json.hpp"

#include "unigraph/degseq.hpp"
#include "unigraph/graph6.hpp"

namespace unigraph {

using nlohmann::json;

json graph_json(const Graph& g) {
  return {{"g6", graph6_encode(g)}, {"n", g.order()}, {"m", g.size()}, {"degseq", degree_sequence(g).to_string()}};
}

json to_json(const MiningReport& report) {
  json forbidden = json::array();
  for (const auto& e : report.forbidden)
    forbidden.push_back({{"g6", e.graph6}, {"degseq", e.degrees.to_string()}, {"n", e.order}, {"label", e.label}});
  json counts = json::object();
  for (const auto& [n, c] : report.counts) counts[std::to_string(n)] = c;
  return {{"class", report.target},     {"max_n", report.max_n},
          {"forbidden", forbidden},     {"counts", counts},
          {"checked", report.checked},  {"counterexamples", report.counterexamples}};
}

json to_json(const VerificationReport& report) {
  return {{"theorem", report.theorem},
          {"max_n", report.max_n},
          {"checked", report.checked},
          {"passed", report.passed()},
          {"counterexamples", report.counterexamples},
          {"notes", report.notes},
          {"seconds", report.seconds}};
}

json to_json(const ForbiddenPairRecord& record) {
  json realizations = json::array();
  for (const Graph& g : record.realizations) realizations.push_back(graph6_encode(g));
  return {{"pair", record.pair.to_string()},
          {"order", record.pair.order()},
          {"minimal", record.minimal},
          {"realizations", realizations}};
}

json to_json(const Decomposition& d) {
  json terms = json::array();
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    const auto& t = d.terms[i];
    json clique = json::array(), stable = json::array();
    for_each_vertex(t.partition.clique, [&](int v) { clique.push_back(d.term_vertices[i][v]); });
    for_each_vertex(t.partition.stable, [&](int v) { stable.push_back(d.term_vertices[i][v]); });
    terms.push_back({{"graph", graph_json(t.graph)}, {"clique", clique}, {"stable", stable}});
  }
  return {{"terms", terms}, {"tail", graph_json(d.tail)}, {"tail_vertices", d.tail_vertices}};
}

}  // namespace unigraph
