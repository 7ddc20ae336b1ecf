// Command-line front end for the fknc shared library. Talks to the core
// exclusively through the C API in fknc.h.
//
// Exit codes: 0 success, 1 verification failure or internal mismatch,
// 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fknc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

int exit_code_for(fknc_status status) {
  switch (status) {
    case FKNC_OK:
      return kExitOk;
    case FKNC_ERROR_VERIFY:
    case FKNC_ERROR_INTERNAL:
      return kExitVerifyFailure;
    default:
      return kExitUsage;
  }
}

void print_error(fknc_status status) {
  const char* msg = fknc_last_error();
  std::cerr << "error: " << (msg && *msg ? msg : "unknown failure") << " (status " << status
            << ")\n";
}

struct GraphHandle {
  fknc_graph* ptr = nullptr;
  ~GraphHandle() { fknc_graph_free(ptr); }
};

struct ElementHandle {
  fknc_element* ptr = nullptr;
  ~ElementHandle() { fknc_element_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { fknc_string_free(ptr); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// --n builds a complete graph; --graph loads a JSON file.
int load_graph(int n, const std::string& path, GraphHandle& graph) {
  fknc_status status;
  if (!path.empty()) {
    std::string text;
    if (!read_file(path, text)) {
      std::cerr << "error: cannot read " << path << "\n";
      return kExitUsage;
    }
    status = fknc_graph_parse(text.c_str(), &graph.ptr);
  } else {
    status = fknc_graph_complete(n, &graph.ptr);
  }
  if (status != FKNC_OK) {
    print_error(status);
    return exit_code_for(status);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in graded components of Fomin-Kirillov algebras"};
  app.require_subcommand(1);

  // trees -----------------------------------------------------------------
  auto* trees = app.add_subcommand("trees", "enumerate noncrossing trees as JSON lines");
  int trees_n = 0;
  std::string trees_graph;
  bool trees_reduced = false, trees_signatures = false;
  auto* opt_n = trees->add_option("--n", trees_n, "use the complete graph on n vertices");
  auto* opt_g = trees->add_option("--graph", trees_graph, "graph JSON file");
  trees->add_flag("--reduced", trees_reduced, "only graph-reduced trees");
  trees->add_flag("--signatures", trees_signatures, "include signatures");
  opt_n->excludes(opt_g);

  // reduce ----------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "normal form of a tree element");
  std::string reduce_graph, reduce_input, reduce_strategy = "lex";
  std::uint64_t reduce_seed = 0;
  bool reduce_pretty = false;
  reduce->add_option("--graph", reduce_graph, "graph JSON file")->required();
  reduce->add_option("--input", reduce_input, "element JSON file")->required();
  reduce->add_option("--strategy", reduce_strategy, "lex or random")
      ->check(CLI::IsMember({"lex", "random"}));
  auto* opt_seed = reduce->add_option("--seed", reduce_seed, "seed for the random strategy");
  reduce->add_flag("--pretty", reduce_pretty, "pretty-print the output");

  // hilbert ---------------------------------------------------------------
  auto* hilbert = app.add_subcommand("hilbert", "chromatic and Hilbert data of a graph");
  std::string hilbert_graph;
  hilbert->add_option("--graph", hilbert_graph, "graph JSON file")->required();

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  int verify_n = 0;
  std::uint64_t verify_seed = 0;
  verify->add_option("--suite", verify_suite, "catalan|confluence|signature|oracle|abelian")
      ->required()
      ->check(CLI::IsMember({"catalan", "confluence", "signature", "oracle", "abelian"}));
  verify->add_option("--n", verify_n, "suite size (defaults per suite)");
  verify->add_option("--seed", verify_seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (trees->parsed()) {
    if (trees_n <= 0 && trees_graph.empty()) {
      std::cerr << "error: trees needs --n or --graph\n";
      return kExitUsage;
    }
    GraphHandle graph;
    if (int rc = load_graph(trees_n, trees_graph, graph)) return rc;
    StringHandle out;
    fknc_status status = fknc_trees_jsonl(graph.ptr, trees_reduced ? 1 : 0,
                                          trees_signatures ? 1 : 0, &out.ptr);
    if (status != FKNC_OK) {
      print_error(status);
      return exit_code_for(status);
    }
    std::fputs(out.ptr, stdout);
    return kExitOk;
  }

  if (reduce->parsed()) {
    if (reduce_strategy == "random" && opt_seed->count() == 0) {
      std::cerr << "error: --strategy random requires an explicit --seed\n";
      return kExitUsage;
    }
    GraphHandle graph;
    if (int rc = load_graph(0, reduce_graph, graph)) return rc;
    std::string text;
    if (!read_file(reduce_input, text)) {
      std::cerr << "error: cannot read " << reduce_input << "\n";
      return kExitUsage;
    }
    ElementHandle element;
    fknc_status status = fknc_element_parse(text.c_str(), &element.ptr);
    if (status != FKNC_OK) {
      print_error(status);
      return exit_code_for(status);
    }
    ElementHandle result;
    status = fknc_element_reduce(element.ptr, graph.ptr, reduce_strategy.c_str(), reduce_seed,
                                 &result.ptr);
    if (status != FKNC_OK) {
      print_error(status);
      return exit_code_for(status);
    }
    StringHandle json;
    status = fknc_element_to_json(result.ptr, reduce_pretty ? 1 : 0, &json.ptr);
    if (status != FKNC_OK) {
      print_error(status);
      return exit_code_for(status);
    }
    std::fputs(json.ptr, stdout);
    std::fputc('\n', stdout);
    return kExitOk;
  }

  if (hilbert->parsed()) {
    GraphHandle graph;
    if (int rc = load_graph(0, hilbert_graph, graph)) return rc;
    StringHandle json;
    fknc_status status = fknc_hilbert_json(graph.ptr, &json.ptr);
    if (status != FKNC_OK) {
      print_error(status);
      return exit_code_for(status);
    }
    std::fputs(json.ptr, stdout);
    std::fputc('\n', stdout);
    return kExitOk;
  }

  if (verify->parsed()) {
    StringHandle report;
    fknc_status status = fknc_verify(verify_suite.c_str(), verify_n, verify_seed, &report.ptr);
    if (report.ptr) std::fputs(report.ptr, stdout);
    if (status == FKNC_OK) return kExitOk;
    if (status == FKNC_ERROR_VERIFY) return kExitVerifyFailure;
    print_error(status);
    return exit_code_for(status);
  }

  return kExitUsage;
}
