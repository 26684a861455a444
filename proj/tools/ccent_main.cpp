// Command-line front end: every subcommand prints JSON to stdout.
// Exit codes: 0 success / all claims pass, 1 violation found, 2 usage or
// input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ccent/json_io.hpp"
#include "ccent/measures.hpp"
#include "ccent/verify.hpp"

namespace {

using namespace ccent;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int64_t> parse_count_list(const std::string& text) {
  std::vector<int64_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    out.push_back(std::stoll(token));
  return out;
}

void emit(const Json& json) { std::cout << json.dump(2) << '\n'; }

struct Args {
  std::string file;
  std::string measure = "closeness";
  std::string delta = "0.8";
  bool normalized = false;

  int trees_n = 0;
  bool graphs = false;
  uint64_t samples = 10000;
  int n_max = 0;
  uint64_t seed = 1;

  std::string axiom = "condorcet-consistency";
  std::string domain = "trees";
  uint64_t budget = 20000;

  std::string fixture_name;
  std::string emit_mode = "json";

  std::string kind = "minimal";
  int i = 2, j = 2;
  int64_t sum = 0, n = 0;
  std::string list;
  std::string reduce;
};

int run(int argc, char** argv) {
  CLI::App app{"closeness, Condorcet winners, and centrality rankings on graphs"};
  app.require_subcommand(1);
  Args a;

  auto* cent = app.add_subcommand("centrality", "score every node");
  cent->add_option("file", a.file, "edge-list file")->required();
  cent->add_option("--measure", a.measure)
      ->check(CLI::IsMember({"closeness", "degree", "harmonic", "decay",
                             "eccentricity", "rwc", "w", "x"}));
  cent->add_option("--delta", a.delta, "decay factor (rational or decimal)");
  cent->add_flag("--normalized", a.normalized,
                 "also report (n-1)-scaled scores");

  auto* cond = app.add_subcommand("condorcet", "election summary of a graph");
  cond->add_option("file", a.file)->required();
  cond->add_option("--delta", a.delta);

  auto* hitting = app.add_subcommand("hitting", "exact hitting-time matrix");
  hitting->add_option("file", a.file)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* tree_opt = verify->add_option("--trees", a.trees_n,
                                      "exhaustive labeled trees up to n");
  auto* graph_flag = verify->add_flag("--graphs", a.graphs,
                                      "randomized graphs plus fixtures");
  verify->add_option("--samples", a.samples);
  verify->add_option("--nmax", a.n_max);
  verify->add_option("--seed", a.seed);
  tree_opt->excludes(graph_flag);

  auto* search = app.add_subcommand("search", "look for an axiom violation");
  search->add_option("--measure", a.measure)->required();
  search->add_option("--axiom", a.axiom)
      ->check(CLI::IsMember(
          {"condorcet-consistency", "cc", "bridge", "weak-general-cct"}));
  search->add_option("--domain", a.domain)
      ->check(CLI::IsMember({"trees", "graphs"}));
  search->add_option("--nmax", a.n_max);
  search->add_option("--budget", a.budget);
  search->add_option("--seed", a.seed);
  search->add_option("--delta", a.delta);

  auto* fixture_cmd = app.add_subcommand("fixture", "emit a reference graph");
  fixture_cmd->add_option("name", a.fixture_name)->required();
  fixture_cmd->add_option("--emit", a.emit_mode)
      ->check(CLI::IsMember({"edges", "json"}));

  auto* gadget = app.add_subcommand("gadget", "emit a constructed pair graph");
  gadget->add_option("--kind", a.kind)
      ->check(CLI::IsMember({"shift", "shift-ext", "minimal"}))
      ->required();
  gadget->add_option("--i", a.i);
  gadget->add_option("--j", a.j);
  gadget->add_option("--sum", a.sum);
  gadget->add_option("--n", a.n);
  gadget->add_option("--list", a.list, "comma-separated counts");
  gadget->add_option("--emit", a.emit_mode)
      ->check(CLI::IsMember({"edges", "json"}));

  auto* canonical = app.add_subcommand("canonical",
                                       "canonical list of a given sum");
  canonical->add_option("--sum", a.sum);
  canonical->add_option("--n", a.n);
  canonical->add_option("--reduce", a.reduce,
                        "reduce this comma-separated list instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Rational delta = parse_rational(a.delta);

  if (cent->parsed()) {
    Graph g = parse_edge_list(read_file(a.file));
    Measure m = *measure_from_name(a.measure);
    emit(score_to_json(compute_measure(g, m, delta), a.normalized));
    return 0;
  }
  if (cond->parsed()) {
    Graph g = parse_edge_list(read_file(a.file));
    emit(condorcet_report_to_json(build_condorcet_report(g, delta)));
    return 0;
  }
  if (hitting->parsed()) {
    Graph g = parse_edge_list(read_file(a.file));
    emit(hitting_to_json(hitting_times(g)));
    return 0;
  }
  if (verify->parsed()) {
    VerificationReport report;
    if (a.trees_n > 0) {
      report = run_tree_suite(a.trees_n, std::min(a.trees_n, 8),
                              std::min(a.trees_n, 7));
    } else if (a.graphs) {
      report = run_graph_suite(a.samples, a.n_max > 0 ? a.n_max : 30, a.seed);
    } else {
      std::cerr << "verify needs --trees N or --graphs\n";
      return 2;
    }
    emit(verification_report_to_json(report));
    return report.all_passed() ? 0 : 1;
  }
  if (search->parsed()) {
    auto measure = measure_from_name(a.measure);
    if (!measure) {
      std::cerr << "unknown measure \"" << a.measure << "\"\n";
      return 2;
    }
    SearchOptions options;
    options.measure = *measure;
    options.delta = delta;
    options.axiom = a.axiom;
    options.domain = a.domain;
    if (a.n_max > 0) options.n_max = a.n_max;
    options.budget = a.budget;
    options.seed = a.seed;
    SearchResult result = search_counterexample(options);
    emit(search_result_to_json(options, result));
    return result.witness ? 1 : 0;
  }
  if (fixture_cmd->parsed()) {
    Fixture f = fixture(a.fixture_name);
    if (a.emit_mode == "edges")
      std::cout << format_edge_list(f.graph, f.name);
    else
      emit(fixture_to_json(f));
    return 0;
  }
  if (gadget->parsed()) {
    MarkedGraph marked;
    if (a.kind == "shift") {
      marked = build_shift_gadget(a.i, a.j);
    } else if (a.kind == "shift-ext") {
      if (a.list.empty()) {
        std::cerr << "shift-ext needs --list\n";
        return 2;
      }
      marked = build_shift_gadget_extended(make_nlist(parse_count_list(a.list)),
                                           a.i, a.j);
    } else {
      marked = build_minimal_gadget(a.sum, a.n);
    }
    if (a.emit_mode == "edges")
      std::cout << format_edge_list(marked.graph, marked.note);
    else
      emit(marked_graph_to_json(marked));
    return 0;
  }
  if (canonical->parsed()) {
    if (!a.reduce.empty()) {
      emit(reduction_to_json(
          reduce_to_canonical(make_nlist(parse_count_list(a.reduce)))));
    } else {
      emit(canonical_to_json(canonical_bot(a.sum, a.n)));
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
