#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unigraph/bipartite_pair.hpp"
#include "unigraph/canon.hpp"
#include "unigraph/classes.hpp"
#include "unigraph/degseq.hpp"
#include "unigraph/error.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/miner.hpp"
#include "unigraph/parallel.hpp"
#include "unigraph/rao.hpp"
#include "unigraph/report_json.hpp"
#include "unigraph/unigraph.hpp"
#include "unigraph/verify.hpp"

using namespace unigraph;
using nlohmann::json;

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Flags {
  std::string klass = "all";
  std::size_t limit = 0;  // 0 = unlimited
  int max_n = -1;
  bool json = false;
  bool strict = false;
  int jobs = 0;
  std::vector<std::string> inputs;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--class", f.klass, "class: all, bipartite, kpartite:K, chordal, split, perfect");
  cmd->add_option("--limit", f.limit, "stop after this many results (0 = no limit)");
  cmd->add_option("--max-n", f.max_n, "largest order to sweep");
  cmd->add_flag("--json", f.json, "emit JSON");
  cmd->add_flag("--strict", f.strict, "exit 1 when a boolean answer is false");
  cmd->add_option("--jobs", f.jobs, "worker threads (default $UNIGRAPH_JOBS or 1)");
}

void read_lines(std::istream& in, std::vector<std::string>& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
}

// Each input is "-" (stdin), a readable file of graph6 lines, or a graph6 string.
std::vector<Graph> read_graphs(const std::vector<std::string>& inputs) {
  std::vector<std::string> lines;
  if (inputs.empty()) read_lines(std::cin, lines);
  for (const auto& item : inputs) {
    if (item == "-") {
      read_lines(std::cin, lines);
    } else if (std::error_code ec; std::filesystem::exists(item, ec)) {
      std::ifstream file(item);
      if (!file) throw std::invalid_argument("cannot read " + item);
      read_lines(file, lines);
    } else {
      lines.push_back(item);
    }
  }
  std::vector<Graph> out;
  for (const auto& l : lines) out.push_back(graph6_decode(l));
  return out;
}

std::string first_sequence_arg(const Flags& f) {
  if (f.inputs.size() != 1) throw CLI::ValidationError("expected exactly one degree sequence");
  return f.inputs.front();
}

void print_graphs(const std::vector<Graph>& graphs, const Flags& f) {
  if (f.json) {
    json arr = json::array();
    for (const Graph& g : graphs) arr.push_back(graph_json(g));
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const Graph& g : graphs) std::cout << graph6_encode(g) << '\n';
  }
}

// Prints one answer per graph and returns the exit code.
template <typename Pred>
int answer_each(const std::vector<Graph>& graphs, const Flags& f, Pred pred) {
  bool all = true;
  json arr = json::array();
  for (const Graph& g : graphs) {
    const bool v = pred(g);
    all = all && v;
    if (f.json)
      arr.push_back({{"g6", graph6_encode(g)}, {"value", v}});
    else
      std::cout << (v ? "true" : "false") << '\n';
  }
  if (f.json) std::cout << arr.dump(2) << '\n';
  return (f.strict && !all) ? kExitFalse : 0;
}

int answer(bool v, const Flags& f) {
  if (f.json)
    std::cout << json{{"value", v}}.dump() << '\n';
  else
    std::cout << (v ? "true" : "false") << '\n';
  return (f.strict && !v) ? kExitFalse : 0;
}

// "g6" or "g6:c1,c2,..." with the clique vertices listed explicitly.
CompositionTerm parse_term(const std::string& text) {
  CompositionTerm t;
  const auto colon = text.find(':');
  t.graph = graph6_decode(text.substr(0, colon));
  if (colon == std::string::npos) {
    const auto partitions = split_partitions(t.graph);
    if (partitions.empty()) throw std::invalid_argument("term " + text + " is not a split graph");
    t.partition = partitions.back();
    return t;
  }
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const int v = std::stoi(item);
    if (v < 0 || v >= t.graph.order()) throw std::invalid_argument("clique vertex out of range in " + text);
    t.partition.clique |= bit(v);
  }
  t.partition.stable = t.graph.vertices() & ~t.partition.clique;
  return t;
}

void print_decomposition(const Graph& g, const Decomposition& d, const Flags& f) {
  if (f.json) {
    json j = to_json(d);
    j["g6"] = graph6_encode(g);
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << graph6_encode(g) << " =";
  for (const auto& t : d.terms) {
    std::cout << ' ' << graph6_encode(t.graph) << ':';
    bool first = true;
    for_each_vertex(t.partition.clique, [&](int v) {
      std::cout << (first ? "" : ",") << v;
      first = false;
    });
    std::cout << " o";
  }
  std::cout << ' ' << graph6_encode(d.tail) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unigraph toolkit: degree-sequence realizations, hereditary unigraph classes, forbidden subgraphs"};
  app.require_subcommand(1);
  Flags f;
  std::string tail_g6;
  int k = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;

  auto* realize_cmd = app.add_subcommand("realize", "one realization of a degree sequence");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "all realizations of a degree sequence, optionally within --class");
  auto* bipartitions_cmd = app.add_subcommand("bipartitions", "realizable bipartitioned pairs of a degree sequence");
  auto* check_cmd = app.add_subcommand("check", "class membership");
  auto* unigraph_cmd = app.add_subcommand("unigraph", "is the graph the unique --class realization of its sequence");
  auto* hereditary_cmd = app.add_subcommand("hereditary", "membership in the hereditary --class unigraphs");
  auto* compose_cmd = app.add_subcommand("compose", "compose split terms (g6 or g6:clique) with --tail");
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose into indecomposable factors");
  auto* rao_contains_cmd = app.add_subcommand("rao-contains", "bipartite Rao containment BIG SMALL");
  auto* rao_minimal_cmd = app.add_subcommand("rao-minimal", "minimality of a pair, or all minimal forbidden pairs");
  auto* mine_cmd = app.add_subcommand("mine", "minimal forbidden induced subgraphs of a hereditary class");
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem check");
  auto* canon_cmd = app.add_subcommand("canon", "canonical form");
  auto* complement_cmd = app.add_subcommand("complement", "complement graph");

  for (auto* cmd : app.get_subcommands({})) {
    add_common(cmd, f);
    cmd->add_option("inputs", f.inputs, "arguments, graph6 strings, files or - for stdin");
  }
  compose_cmd->add_option("--tail", tail_g6, "graph6 of the tail")->required();
  verify_cmd->add_option("-k", k, "part bound for the k-partite theorems");
  verify_cmd->add_option("--samples", samples, "random samples for composition-coloring");
  verify_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const ClassSpec spec = ClassSpec::parse(f.klass);
    const int jobs = resolve_jobs(f.jobs);

    if (*realize_cmd) {
      print_graphs({realize(DegreeSequence::parse(first_sequence_arg(f)))}, f);
    } else if (*enumerate_cmd) {
      const auto d = DegreeSequence::parse(first_sequence_arg(f));
      std::vector<Graph> out;
      for_each_realization(d, [&](const Graph& g) {
        if (member(g, spec)) out.push_back(g);
        return (f.limit && out.size() >= f.limit) ? Visit::kStop : Visit::kContinue;
      });
      std::sort(out.begin(), out.end(),
                [](const Graph& a, const Graph& b) { return a.canonical_key() < b.canonical_key(); });
      print_graphs(out, f);
    } else if (*bipartitions_cmd) {
      const auto pairs = bipartitions_of(DegreeSequence::parse(first_sequence_arg(f)));
      if (f.json) {
        json arr = json::array();
        for (const auto& p : pairs) arr.push_back(p.to_string());
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& p : pairs) std::cout << p.to_string() << '\n';
      }
    } else if (*check_cmd) {
      return answer_each(read_graphs(f.inputs), f, [&](const Graph& g) { return member(g, spec); });
    } else if (*unigraph_cmd) {
      return answer_each(read_graphs(f.inputs), f,
                         [&](const Graph& g) { return member(g, spec) && is_A_unigraph(g, spec); });
    } else if (*hereditary_cmd) {
      HereditaryOracle oracle(spec);
      return answer_each(read_graphs(f.inputs), f, [&](const Graph& g) { return oracle.hereditary(g); });
    } else if (*compose_cmd) {
      std::vector<CompositionTerm> terms;
      for (const auto& t : f.inputs) terms.push_back(parse_term(t));
      print_graphs({compose(terms, graph6_decode(tail_g6))}, f);
    } else if (*decompose_cmd) {
      for (const Graph& g : read_graphs(f.inputs)) print_decomposition(g, decompose(g), f);
    } else if (*rao_contains_cmd) {
      if (f.inputs.size() != 2) throw CLI::ValidationError("expected BIG and SMALL pairs");
      return answer(rao_contains(BipartitionedPair::parse(f.inputs[0]), BipartitionedPair::parse(f.inputs[1])), f);
    } else if (*rao_minimal_cmd) {
      const int bound = f.max_n < 0 ? 8 : f.max_n;
      if (f.inputs.size() == 1) return answer(is_rao_minimal(BipartitionedPair::parse(f.inputs[0]), bound), f);
      if (!f.inputs.empty()) throw CLI::ValidationError("expected at most one pair");
      const auto records = enumerate_minimal_pairs(bound, jobs);
      if (f.json) {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& r : records) std::cout << r.pair.to_string() << '\n';
      }
    } else if (*mine_cmd) {
      const MiningTarget target = f.inputs.empty() ? MiningTarget{spec, true} : MiningTarget::parse(f.inputs.front());
      const MiningReport report = mine_forbidden(target, f.max_n < 0 ? 7 : f.max_n, jobs);
      if (f.json) {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        for (const auto& e : report.forbidden)
          std::cout << e.graph6 << '\t' << e.order << '\t' << e.degrees.to_string() << '\t' << e.label << '\n';
        std::cerr << report.target << ": " << report.forbidden.size() << " forbidden graphs, " << report.checked
                  << " graphs checked\n";
      }
      return (f.strict && !report.counterexamples.empty()) ? kExitFalse : 0;
    } else if (*verify_cmd) {
      if (f.inputs.empty()) throw CLI::ValidationError("expected a theorem id: " + [] {
        std::string s;
        for (const auto& id : theorem_ids()) s += (s.empty() ? "" : ", ") + id;
        return s;
      }());
      VerificationOptions opt;
      opt.k = k;
      opt.samples = samples;
      opt.seed = seed;
      opt.jobs = jobs;
      bool all = true;
      json arr = json::array();
      for (const auto& id : f.inputs) {
        const auto report = verify_theorem(id, f.max_n < 0 ? 7 : f.max_n, opt);
        all = all && report.passed();
        if (f.json) {
          arr.push_back(to_json(report));
        } else {
          std::cout << report.theorem << ": " << (report.passed() ? "ok" : "FAILED") << ", " << report.checked
                    << " checked, " << report.counterexamples.size() << " counterexamples\n";
          for (const auto& c : report.counterexamples) std::cout << "  " << c << '\n';
        }
      }
      if (f.json) std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      return all ? 0 : kExitFalse;
    } else if (*canon_cmd) {
      std::vector<Graph> out;
      for (const Graph& g : read_graphs(f.inputs)) out.push_back(canonical_graph(g));
      print_graphs(out, f);
    } else if (*complement_cmd) {
      std::vector<Graph> out;
      for (const Graph& g : read_graphs(f.inputs)) out.push_back(complement(g));
      print_graphs(out, f);
    }
    return 0;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
