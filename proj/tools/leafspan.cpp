// Command-line front end. Talks to the library only through leafspan.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leafspan/leafspan.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIncomplete = 2;

struct Failure {
  int code;
  std::string message;
};

void check(lspan_status status, const std::string& context) {
  if (status != LSPAN_OK) {
    throw Failure{kExitError, context + ": " + lspan_status_name(status) + ": " + lspan_last_error()};
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitError, "cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitError, "cannot write " + path};
  out << text;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Free(ptr); }
};

using Graph = Handle<lspan_graph, lspan_graph_free>;
using GraphList = Handle<lspan_graph_list, lspan_graph_list_free>;
using Solution = Handle<lspan_solution, lspan_solution_free>;
using Report = Handle<lspan_report, lspan_report_free>;
using Audit = Handle<lspan_audit, lspan_audit_free>;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { lspan_string_free(ptr); }
};

// Edge lists start with "n m"; graph6 records never contain a space.
bool looksLikeEdgeList(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    return line.find(' ') != std::string::npos;
  }
  return false;
}

void loadGraph(const std::string& path, const std::string& format, Graph& g) {
  const std::string text = readFile(path);
  const bool edgeList = format == "edgelist" || (format == "auto" && looksLikeEdgeList(text));
  if (edgeList) {
    check(lspan_graph_from_edge_list(text.c_str(), &g.ptr), path);
  } else {
    check(lspan_graph_from_graph6(text.c_str(), &g.ptr), path);
  }
}

int runSolve(const std::string& path, const std::string& format, double timeLimit, std::uint64_t maxNodes,
             const std::string& out, bool audit) {
  Graph g;
  loadGraph(path, format, g);
  Solution s;
  check(lspan_solve(g.ptr, timeLimit, maxNodes, &s.ptr), "solve");
  std::string text = lspan_solution_witness(s.ptr);
  if (audit) {
    const char* line = lspan_solution_audit(s.ptr);
    if (!line) check(LSPAN_INTERNAL, "audit");
    std::cerr << line << "\n";
  }
  emit(text, out);
  return lspan_solution_status(s.ptr) == LSPAN_SOLVE_EXACT ? kExitOk : kExitIncomplete;
}

int runEnumerate(std::size_t n, const std::string& in, const std::string& out, const std::string& method,
                 std::size_t jobs) {
  GraphList list;
  if (!in.empty()) {
    check(lspan_graph_list_from_graph6(n, readFile(in).c_str(), &list.ptr), in);
  } else {
    const lspan_method m = method == "extension" ? LSPAN_METHOD_VERTEX_EXTENSION : LSPAN_METHOD_CANONICAL_FILTER;
    check(lspan_enumerate_cubic(n, m, jobs, &list.ptr), "enumerate");
  }
  emit(lspan_graph_list_graph6(list.ptr), out);
  std::cerr << "n=" << n << " graphs=" << lspan_graph_list_size(list.ptr);
  const std::string note = lspan_graph_list_note(list.ptr);
  if (!note.empty()) std::cerr << " note: " << note;
  std::cerr << "\n";
  return kExitOk;
}

int runVerify(const std::string& bound, const std::vector<std::size_t>& orders, std::size_t jobs, double timeLimit,
              const std::string& out, const std::string& in, bool timings, bool noCrossCheck) {
  if (!in.empty() && orders.size() != 1) throw Failure{kExitError, "--in needs exactly one --n"};
  lspan_verify_options options = lspan_verify_defaults();
  options.jobs = jobs;
  options.time_limit_seconds = timeLimit;
  options.cross_validate = noCrossCheck ? 0 : 1;
  options.timings = timings ? 1 : 0;
  const lspan_bound kind = bound == "theorem" ? LSPAN_BOUND_THEOREM : LSPAN_BOUND_CONJECTURE;

  std::string text;
  bool complete = true;
  for (std::size_t n : orders) {
    GraphList universe;
    if (!in.empty()) check(lspan_graph_list_from_graph6(n, readFile(in).c_str(), &universe.ptr), in);
    Report r;
    check(lspan_verify(kind, n, universe.ptr, &options, &r.ptr), "verify n=" + std::to_string(n));
    text += lspan_report_json(r.ptr);
    complete = complete && lspan_report_complete(r.ptr);
    std::cerr << bound << " n=" << n << " universe=" << lspan_report_universe_size(r.ptr)
              << " solved=" << lspan_report_solved(r.ptr) << " timeouts=" << lspan_report_timeouts(r.ptr)
              << " violations=" << lspan_report_violations(r.ptr)
              << " max_min_leaves=" << lspan_report_max_min_leaves(r.ptr) << "\n";
    const std::string note = lspan_report_note(r.ptr);
    if (!note.empty()) std::cerr << "  " << note << "\n";
  }
  emit(text, out);
  return complete ? kExitOk : kExitIncomplete;
}

int runFamily(int m, const std::string& out, const std::string& format) {
  Graph g;
  check(lspan_graph_family(m, &g.ptr), "family");
  const std::string graph = format == "edgelist" ? lspan_graph_edge_list(g.ptr)
                                                 : std::string(lspan_graph_graph6(g.ptr)) + "\n";
  const std::string sidecar = std::string(lspan_graph_family_sidecar(g.ptr)) + "\n";
  if (out.empty() || out == "-") {
    std::cout << graph << sidecar;
  } else {
    emit(graph, out);
    emit(sidecar, out + ".json");
  }
  return kExitOk;
}

int runAudit(std::size_t n, int m, std::size_t jobs, double timeLimit, const std::string& out) {
  GraphList list;
  if (m > 0) {
    list.ptr = lspan_graph_list_create();
    if (!list.ptr) throw Failure{kExitError, "out of memory"};
    Graph g;
    check(lspan_graph_family(m, &g.ptr), "family");
    check(lspan_graph_list_push(list.ptr, g.ptr), "audit");
  } else {
    check(lspan_enumerate_cubic(n, LSPAN_METHOD_CANONICAL_FILTER, jobs, &list.ptr), "enumerate");
  }
  Audit a;
  check(lspan_audit_run(list.ptr, jobs, timeLimit, &a.ptr), "audit");
  emit(lspan_audit_json(a.ptr), out);
  std::cerr << "evaluated=" << lspan_audit_evaluated(a.ptr) << " skipped=" << lspan_audit_skipped(a.ptr)
            << " flagged=" << lspan_audit_flagged(a.ptr) << " timeouts=" << lspan_audit_timeouts(a.ptr) << "\n";
  return lspan_audit_timeouts(a.ptr) == 0 ? kExitOk : kExitIncomplete;
}

int runConditions(const std::string& path, const std::string& format) {
  Graph g;
  loadGraph(path, format, g);
  OwnedString json;
  check(lspan_graph_conditions(g.ptr, &json.ptr), "conditions");
  std::cout << json.ptr << "\n";
  return kExitOk;
}

// Accepts a witness file or a verification report; in a report every
// violation row is re-verified on its own.
int runCheck(const std::string& path, double timeLimit) {
  const std::string text = readFile(path);
  if (!text.empty() && text[0] == '{') {
    std::istringstream in(text);
    std::string line;
    std::size_t checked = 0;
    std::size_t failed = 0;
    while (std::getline(in, line)) {
      if (line.find("\"violation\"") == std::string::npos) continue;
      int valid = 0;
      check(lspan_check_certificate(line.c_str(), timeLimit, &valid), "certificate");
      ++checked;
      if (!valid) ++failed;
    }
    std::cout << "certificates=" << checked << " failed=" << failed << "\n";
    return failed == 0 ? kExitOk : kExitError;
  }
  int valid = 0;
  OwnedString json;
  check(lspan_check_witness(text.c_str(), timeLimit, &valid, &json.ptr), "witness");
  std::cout << json.ptr << "\n";
  return valid ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-leaf spanning trees of cubic graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lspan_version()));

  int exitCode = kExitOk;

  std::string solveFile;
  std::string solveFormat = "auto";
  double solveLimit = 0;
  std::uint64_t solveNodes = 0;
  std::string solveOut;
  bool solveAudit = false;
  auto* solve = app.add_subcommand("solve", "Exact minimum-leaf spanning tree of one graph");
  solve->add_option("FILE", solveFile, "graph6 or edge-list file")->required();
  solve->add_option("--format", solveFormat, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  solve->add_option("--time-limit", solveLimit, "Seconds, 0 for unlimited")->check(CLI::NonNegativeNumber);
  solve->add_option("--max-nodes", solveNodes, "Search-node cap, 0 for unlimited");
  solve->add_option("--out", solveOut, "Witness file (default stdout)");
  solve->add_flag("--audit", solveAudit, "Print the counting-inequality audit to stderr");
  solve->callback([&] { exitCode = runSolve(solveFile, solveFormat, solveLimit, solveNodes, solveOut, solveAudit); });

  std::size_t enumN = 0;
  std::string enumIn;
  std::string enumOut;
  std::string enumMethod = "canonical";
  std::size_t enumJobs = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Connected cubic graphs up to isomorphism, as graph6 lines");
  enumerate->add_option("--n", enumN, "Order")->required();
  enumerate->add_option("--in", enumIn, "Validate and deduplicate a graph6 stream instead of generating");
  enumerate->add_option("--out", enumOut, "Output file (default stdout)");
  enumerate->add_option("--method", enumMethod, "Generator")->check(CLI::IsMember({"canonical", "extension"}));
  enumerate->add_option("--jobs", enumJobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->callback([&] { exitCode = runEnumerate(enumN, enumIn, enumOut, enumMethod, enumJobs); });

  std::string verifyBound;
  std::vector<std::size_t> verifyOrders;
  std::size_t verifyJobs = 1;
  double verifyLimit = 0;
  std::string verifyOut;
  std::string verifyIn;
  bool verifyTimings = false;
  bool verifyNoCross = false;
  auto* verify = app.add_subcommand("verify", "Check a leaf bound over every connected cubic graph of given orders");
  verify->add_option("--bound", verifyBound, "Bound to check")
      ->required()
      ->check(CLI::IsMember({"theorem", "conjecture"}));
  verify->add_option("--n", verifyOrders, "Orders, comma separated")->required()->delimiter(',');
  verify->add_option("--jobs", verifyJobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--time-limit", verifyLimit, "Per-graph seconds (default 10 for n<=14, 60 above)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--out", verifyOut, "Report file, JSON lines (default stdout)");
  verify->add_option("--in", verifyIn, "Use this graph6 universe instead of enumerating");
  verify->add_flag("--timings", verifyTimings, "Add millis fields (reports are then not reproducible)");
  verify->add_flag("--no-cross-check", verifyNoCross, "Skip the second enumeration method");
  verify->callback([&] {
    exitCode = runVerify(verifyBound, verifyOrders, verifyJobs, verifyLimit, verifyOut, verifyIn, verifyTimings,
                         verifyNoCross);
  });

  int familyM = 1;
  std::string familyOut;
  std::string familyFormat = "graph6";
  auto* family = app.add_subcommand("family", "Extremal family member G_m with its JSON sidecar");
  family->add_option("--m", familyM, "Level")->required()->check(CLI::Range(1, 6));
  family->add_option("--out", familyOut, "Graph file; the sidecar goes to <FILE>.json");
  family->add_option("--format", familyFormat, "Graph format")->check(CLI::IsMember({"graph6", "edgelist"}));
  family->callback([&] { exitCode = runFamily(familyM, familyOut, familyFormat); });

  std::size_t auditN = 0;
  int auditM = 0;
  std::size_t auditJobs = 1;
  double auditLimit = 10;
  std::string auditOut;
  auto* audit = app.add_subcommand("audit", "Counting inequalities on optimal trees");
  auto* auditNOpt = audit->add_option("--n", auditN, "Audit every connected cubic graph of this order");
  auto* auditMOpt = audit->add_option("--m", auditM, "Audit family member G_m")->check(CLI::Range(1, 6));
  auditNOpt->excludes(auditMOpt);
  audit->add_option("--jobs", auditJobs, "Worker threads")->check(CLI::PositiveNumber);
  audit->add_option("--time-limit", auditLimit, "Per-graph seconds, 0 for unlimited")->check(CLI::NonNegativeNumber);
  audit->add_option("--out", auditOut, "Output file (default stdout)");
  audit->callback([&] {
    if (auditNOpt->count() + auditMOpt->count() == 0) throw CLI::ValidationError("audit", "one of --n or --m is required");
    exitCode = runAudit(auditN, auditM, auditJobs, auditLimit, auditOut);
  });

  std::string condFile;
  std::string condFormat = "auto";
  auto* conditions = app.add_subcommand("conditions", "Degree-sum and independence sufficient conditions");
  conditions->add_option("FILE", condFile, "graph6 or edge-list file")->required();
  conditions->add_option("--format", condFormat, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  conditions->callback([&] { exitCode = runConditions(condFile, condFormat); });

  std::string checkFile;
  double checkLimit = 60;
  auto* checkCmd = app.add_subcommand("check", "Re-verify a witness file or the violation rows of a report");
  checkCmd->add_option("FILE", checkFile, "Witness or report")->required();
  checkCmd->add_option("--time-limit", checkLimit, "Seconds for the re-solve")->check(CLI::NonNegativeNumber);
  checkCmd->callback([&] { exitCode = runCheck(checkFile, checkLimit); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Failure& f) {
    std::cerr << "leafspan: " << f.message << "\n";
    return f.code;
  }
  return exitCode;
}
