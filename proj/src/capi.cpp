#include "leafspan/leafspan.h"

#include <chrono>
#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafspan/bounds.hpp"
#include "leafspan/canonical.hpp"
#include "leafspan/cubic_enum.hpp"
#include "leafspan/error.hpp"
#include "leafspan/exact_solver.hpp"
#include "leafspan/family.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/graph6.hpp"
#include "leafspan/verifier.hpp"

struct lspan_graph {
  leafspan::Graph graph;
  std::vector<std::uint32_t> endpoints;
  std::string graph6;
  std::string edgeList;
  std::optional<std::string> sidecar;
  std::optional<std::string> canonical;
};

struct lspan_graph_list {
  std::vector<std::unique_ptr<lspan_graph>> graphs;
  std::string note;
  std::string graph6;
};

struct lspan_solution {
  std::unique_ptr<leafspan::Graph> graph;  // the outcome's witness points into this
  std::optional<leafspan::SolveOutcome> outcome;
  std::string witness;
  std::optional<std::string> audit;
};

struct lspan_report {
  leafspan::BoundReport report;
  std::string json;
};

struct lspan_audit {
  std::string json;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::size_t flagged = 0;
  std::size_t timeouts = 0;
};

namespace {

thread_local std::string lastError;

lspan_status toStatus(leafspan::ErrorCode code) {
  switch (code) {
    case leafspan::ErrorCode::InvalidArgument:
      return LSPAN_INVALID_ARGUMENT;
    case leafspan::ErrorCode::Parse:
      return LSPAN_PARSE;
    case leafspan::ErrorCode::Disconnected:
      return LSPAN_DISCONNECTED;
    case leafspan::ErrorCode::Precondition:
      return LSPAN_PRECONDITION;
    case leafspan::ErrorCode::BudgetExceeded:
      return LSPAN_BUDGET_EXCEEDED;
    case leafspan::ErrorCode::Io:
      return LSPAN_IO;
    case leafspan::ErrorCode::Internal:
      return LSPAN_INTERNAL;
  }
  return LSPAN_INTERNAL;
}

template <typename Body>
lspan_status guarded(Body&& body) {
  lastError.clear();
  try {
    body();
    return LSPAN_OK;
  } catch (const leafspan::Error& e) {
    lastError = e.what();
    return toStatus(e.code());
  } catch (const nlohmann::json::exception& e) {
    lastError = e.what();
    return LSPAN_PARSE;
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return LSPAN_INTERNAL;
  } catch (const std::exception& e) {
    lastError = e.what();
    return LSPAN_INTERNAL;
  }
}

lspan_status nullArgument(const char* what) {
  lastError = std::string(what) + " must not be null";
  return LSPAN_INVALID_ARGUMENT;
}

std::unique_ptr<lspan_graph> wrap(leafspan::Graph g) {
  auto h = std::make_unique<lspan_graph>();
  for (const leafspan::Edge& e : g.edges()) {
    h->endpoints.push_back(e.u);
    h->endpoints.push_back(e.v);
  }
  h->graph6 = leafspan::writeGraph6(g);
  h->edgeList = leafspan::writeEdgeList(g);
  h->graph = std::move(g);
  return h;
}

leafspan::Budget budgetFrom(double seconds, std::uint64_t maxNodes) {
  if (!(seconds >= 0) || !std::isfinite(seconds)) leafspan::fail(leafspan::ErrorCode::InvalidArgument, "time limit must be a finite non-negative number");
  return leafspan::Budget{maxNodes, std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(seconds * 1000)))};
}

char* duplicate(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::unique_ptr<lspan_graph_list> wrapUniverse(leafspan::CubicUniverse universe) {
  auto list = std::make_unique<lspan_graph_list>();
  for (leafspan::Graph& g : universe.graphs) list->graphs.push_back(wrap(std::move(g)));
  list->note = universe.note;
  return list;
}

leafspan::CubicUniverse universeOf(std::size_t n, const lspan_graph_list& list) {
  leafspan::CubicUniverse universe;
  universe.n = n;
  universe.note = list.note;
  for (const auto& h : list.graphs) {
    if (h->graph.order() != n) {
      leafspan::fail(leafspan::ErrorCode::InvalidArgument, "universe graph " + h->graph6 + " has order " +
                                                               std::to_string(h->graph.order()) + ", expected " +
                                                               std::to_string(n));
    }
    universe.graphs.push_back(h->graph);
    universe.labels.push_back(h->graph6);
  }
  return universe;
}

}  // namespace

extern "C" {

const char* lspan_last_error(void) { return lastError.c_str(); }

const char* lspan_status_name(lspan_status status) {
  switch (status) {
    case LSPAN_OK:
      return "ok";
    case LSPAN_INVALID_ARGUMENT:
      return "invalid argument";
    case LSPAN_PARSE:
      return "parse error";
    case LSPAN_DISCONNECTED:
      return "disconnected graph";
    case LSPAN_PRECONDITION:
      return "precondition failed";
    case LSPAN_BUDGET_EXCEEDED:
      return "budget exceeded";
    case LSPAN_IO:
      return "i/o error";
    case LSPAN_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* lspan_version(void) { return "1.0.0"; }

void lspan_string_free(char* text) { delete[] text; }

lspan_status lspan_graph_from_graph6(const char* text, lspan_graph** out) {
  if (!text || !out) return nullArgument("text and out");
  return guarded([&] { *out = wrap(leafspan::parseGraph6(text)).release(); });
}

lspan_status lspan_graph_from_edge_list(const char* text, lspan_graph** out) {
  if (!text || !out) return nullArgument("text and out");
  return guarded([&] { *out = wrap(leafspan::parseEdgeList(text)).release(); });
}

lspan_status lspan_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, lspan_graph** out) {
  if ((!pairs && m) || !out) return nullArgument("pairs and out");
  return guarded([&] {
    std::vector<leafspan::Edge> edges;
    for (size_t i = 0; i < m; ++i) {
      if (pairs[2 * i] == pairs[2 * i + 1]) leafspan::fail(leafspan::ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(pairs[2 * i]));
      edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    }
    *out = wrap(leafspan::Graph::fromEdges(n, edges)).release();
  });
}

lspan_status lspan_graph_family(int m, lspan_graph** out) {
  if (!out) return nullArgument("out");
  return guarded([&] {
    const leafspan::FamilyLevel level = leafspan::buildGm(m);
    leafspan::checkFamilyLevel(level);
    auto h = wrap(level.graph);
    h->sidecar = leafspan::familySidecarJson(level);
    *out = h.release();
  });
}

void lspan_graph_free(lspan_graph* graph) { delete graph; }

size_t lspan_graph_order(const lspan_graph* graph) { return graph ? graph->graph.order() : 0; }
size_t lspan_graph_size(const lspan_graph* graph) { return graph ? graph->graph.size() : 0; }
int lspan_graph_is_connected(const lspan_graph* graph) { return graph && leafspan::validate(graph->graph).connected; }
int lspan_graph_is_cubic(const lspan_graph* graph) { return graph && leafspan::validate(graph->graph).cubic; }
const uint32_t* lspan_graph_edges(const lspan_graph* graph) { return graph ? graph->endpoints.data() : nullptr; }
const char* lspan_graph_graph6(const lspan_graph* graph) { return graph ? graph->graph6.c_str() : nullptr; }
const char* lspan_graph_edge_list(const lspan_graph* graph) { return graph ? graph->edgeList.c_str() : nullptr; }

const char* lspan_graph_family_sidecar(const lspan_graph* graph) {
  return graph && graph->sidecar ? graph->sidecar->c_str() : nullptr;
}

lspan_status lspan_graph_canonical_label(const lspan_graph* graph, const char** label) {
  if (!graph || !label) return nullArgument("graph and label");
  // The cached label lives in the handle; computing it once is not a visible mutation.
  auto* h = const_cast<lspan_graph*>(graph);
  return guarded([&] {
    if (!h->canonical) h->canonical = leafspan::canonicalLabel(h->graph).bytes;
    *label = h->canonical->c_str();
  });
}

lspan_status lspan_graph_conditions(const lspan_graph* graph, char** json) {
  if (!graph || !json) return nullArgument("graph and json");
  return guarded([&] { *json = duplicate(leafspan::toJsonLine(leafspan::sufficientKEnded(graph->graph))); });
}

lspan_graph_list* lspan_graph_list_create(void) { return new (std::nothrow) lspan_graph_list(); }

lspan_status lspan_enumerate_cubic(size_t n, lspan_method method, size_t jobs, lspan_graph_list** out) {
  if (!out) return nullArgument("out");
  return guarded([&] {
    const auto m = method == LSPAN_METHOD_VERTEX_EXTENSION ? leafspan::EnumerationMethod::VertexExtension
                                                           : leafspan::EnumerationMethod::CanonicalFilter;
    *out = wrapUniverse(leafspan::enumerateConnectedCubic(n, m, jobs == 0 ? 1 : jobs)).release();
  });
}

lspan_status lspan_graph_list_from_graph6(size_t n, const char* text, lspan_graph_list** out) {
  if (!text || !out) return nullArgument("text and out");
  return guarded([&] { *out = wrapUniverse(leafspan::universeFromGraph6(n, text)).release(); });
}

lspan_status lspan_graph_list_push(lspan_graph_list* list, const lspan_graph* graph) {
  if (!list || !graph) return nullArgument("list and graph");
  return guarded([&] {
    auto copy = std::make_unique<lspan_graph>(*graph);
    list->graphs.push_back(std::move(copy));
  });
}

void lspan_graph_list_free(lspan_graph_list* list) { delete list; }
size_t lspan_graph_list_size(const lspan_graph_list* list) { return list ? list->graphs.size() : 0; }

const lspan_graph* lspan_graph_list_at(const lspan_graph_list* list, size_t index) {
  return list && index < list->graphs.size() ? list->graphs[index].get() : nullptr;
}

const char* lspan_graph_list_note(const lspan_graph_list* list) { return list ? list->note.c_str() : nullptr; }

const char* lspan_graph_list_graph6(lspan_graph_list* list) {
  if (!list) return nullptr;
  list->graph6.clear();
  for (const auto& h : list->graphs) list->graph6 += h->graph6 + "\n";
  return list->graph6.c_str();
}

lspan_status lspan_solve(const lspan_graph* graph, double time_limit_seconds, uint64_t max_nodes,
                         lspan_solution** out) {
  if (!graph || !out) return nullArgument("graph and out");
  return guarded([&] {
    auto s = std::make_unique<lspan_solution>();
    s->graph = std::make_unique<leafspan::Graph>(graph->graph);
    s->outcome.emplace(leafspan::minLeafSpanningTree(*s->graph, budgetFrom(time_limit_seconds, max_nodes)));
    s->witness = leafspan::formatWitness(*s->outcome);
    *out = s.release();
  });
}

void lspan_solution_free(lspan_solution* solution) { delete solution; }
size_t lspan_solution_min_leaves(const lspan_solution* s) { return s ? s->outcome->minLeaves : 0; }
size_t lspan_solution_lower_bound(const lspan_solution* s) { return s ? s->outcome->lowerBoundUsed : 0; }
size_t lspan_solution_proven_lower_bound(const lspan_solution* s) { return s ? s->outcome->provenLowerBound : 0; }

lspan_solve_status lspan_solution_status(const lspan_solution* s) {
  if (!s) return LSPAN_SOLVE_TIMEOUT;
  switch (s->outcome->status) {
    case leafspan::SolveStatus::Exact:
      return LSPAN_SOLVE_EXACT;
    case leafspan::SolveStatus::HeuristicOnly:
      return LSPAN_SOLVE_HEURISTIC_ONLY;
    case leafspan::SolveStatus::Timeout:
      return LSPAN_SOLVE_TIMEOUT;
  }
  return LSPAN_SOLVE_TIMEOUT;
}

const char* lspan_solve_status_name(lspan_solve_status status) {
  switch (status) {
    case LSPAN_SOLVE_EXACT:
      return "exact";
    case LSPAN_SOLVE_HEURISTIC_ONLY:
      return "heuristicOnly";
    case LSPAN_SOLVE_TIMEOUT:
      return "timeout";
  }
  return "unknown";
}

uint64_t lspan_solution_nodes(const lspan_solution* s) { return s ? s->outcome->nodesExplored : 0; }
double lspan_solution_millis(const lspan_solution* s) {
  return s ? static_cast<double>(s->outcome->elapsed.count()) : 0.0;
}
const char* lspan_solution_witness(const lspan_solution* s) { return s ? s->witness.c_str() : nullptr; }

const char* lspan_solution_audit(lspan_solution* s) {
  if (!s) return nullptr;
  if (!s->audit) {
    const lspan_status status = guarded([&] { s->audit = leafspan::toJsonLine(leafspan::auditOptimalTree(*s->graph, *s->outcome)); });
    if (status != LSPAN_OK) return nullptr;
  }
  return s->audit->c_str();
}

lspan_status lspan_check_witness(const char* text, double time_limit_seconds, int* valid, char** json) {
  if (!text || !valid || !json) return nullArgument("text, valid and json");
  return guarded([&] {
    *valid = 0;
    const leafspan::ParsedWitness parsed = leafspan::parseWitness(text);
    nlohmann::ordered_json j;
    j["graph6"] = leafspan::writeGraph6(parsed.graph);
    bool ok = true;
    std::optional<leafspan::SpanningTree> tree;
    try {
      tree = leafspan::SpanningTree::fromEdges(parsed.graph, parsed.edges);
    } catch (const leafspan::Error& e) {
      ok = false;
      j["tree_error"] = e.what();
    }
    j["spanning_tree"] = tree.has_value();
    if (tree) {
      j["leaf_count"] = tree->leafCount();
      if (parsed.minLeaves && *parsed.minLeaves != tree->leafCount()) ok = false;
    }
    j["claimed"] = parsed.minLeaves ? nlohmann::ordered_json(*parsed.minLeaves) : nlohmann::ordered_json(nullptr);
    j["claimed_status"] = parsed.status;
    if (ok && tree && parsed.status == "exact") {
      const leafspan::SolveOutcome again =
          leafspan::minLeafSpanningTree(parsed.graph, budgetFrom(time_limit_seconds, 0));
      j["resolved_min_leaves"] = again.minLeaves;
      j["resolved_status"] = std::string(leafspan::statusName(again.status));
      if (again.status == leafspan::SolveStatus::Exact) {
        if (again.minLeaves != tree->leafCount()) ok = false;
        j["minimality"] = again.minLeaves == tree->leafCount() ? "confirmed" : "refuted";
      } else {
        // The re-solve could not settle the claim; it stands only if the
        // refuted range already reaches the claimed value.
        const bool settled = again.provenLowerBound >= tree->leafCount();
        if (!settled) ok = false;
        j["minimality"] = settled ? "confirmed" : "unsettled";
      }
    }
    j["valid"] = ok;
    *valid = ok ? 1 : 0;
    *json = duplicate(j.dump());
  });
}

lspan_status lspan_check_certificate(const char* json_line, double time_limit_seconds, int* valid) {
  if (!json_line || !valid) return nullArgument("json_line and valid");
  return guarded([&] {
    const auto j = nlohmann::json::parse(json_line);
    if (!j.contains("violation")) leafspan::fail(leafspan::ErrorCode::Parse, "not a violation row");
    leafspan::Certificate c;
    const std::string bound = j.at("violation").get<std::string>();
    if (bound != "theorem" && bound != "conjecture") leafspan::fail(leafspan::ErrorCode::Parse, "unknown bound '" + bound + "'");
    c.bound = bound == "theorem" ? leafspan::BoundKind::Theorem : leafspan::BoundKind::Conjecture;
    c.n = j.at("n").get<std::size_t>();
    c.graph6 = j.at("graph6").get<std::string>();
    c.minLeaves = j.at("min_leaves").get<std::size_t>();
    c.boundValue = j.at("bound_value").get<int>();
    c.witness = j.at("witness").get<std::string>();
    *valid = leafspan::reverifyCertificate(c, budgetFrom(time_limit_seconds, 0)) ? 1 : 0;
  });
}

lspan_verify_options lspan_verify_defaults(void) { return lspan_verify_options{1, 0.0, 1, 0}; }

lspan_status lspan_verify(lspan_bound bound, size_t n, const lspan_graph_list* universe,
                          const lspan_verify_options* options, lspan_report** out) {
  if (!out) return nullArgument("out");
  return guarded([&] {
    const lspan_verify_options o = options ? *options : lspan_verify_defaults();
    leafspan::VerifyOptions vo;
    vo.jobs = o.jobs == 0 ? 1 : o.jobs;
    if (o.time_limit_seconds > 0) vo.timeLimit = budgetFrom(o.time_limit_seconds, 0).timeLimit;
    vo.crossValidate = o.cross_validate != 0;
    vo.timings = o.timings != 0;
    const auto kind = bound == LSPAN_BOUND_CONJECTURE ? leafspan::BoundKind::Conjecture : leafspan::BoundKind::Theorem;

    auto r = std::make_unique<lspan_report>();
    if (universe) {
      r->report = leafspan::verifyUniverse(kind, universeOf(n, *universe), vo);
    } else if (kind == leafspan::BoundKind::Theorem) {
      r->report = leafspan::verifyTheoremBound({n}, vo).front();
    } else {
      r->report = leafspan::probeConjecture({n}, vo).front();
    }
    r->json = leafspan::reportJsonLines(r->report, vo.timings);
    *out = r.release();
  });
}

void lspan_report_free(lspan_report* report) { delete report; }
const char* lspan_report_json(const lspan_report* r) { return r ? r->json.c_str() : nullptr; }
int lspan_report_complete(const lspan_report* r) { return r && r->report.complete(); }
size_t lspan_report_universe_size(const lspan_report* r) { return r ? r->report.universeSize : 0; }
size_t lspan_report_solved(const lspan_report* r) { return r ? r->report.solved : 0; }
size_t lspan_report_timeouts(const lspan_report* r) { return r ? r->report.timeouts : 0; }
size_t lspan_report_violations(const lspan_report* r) { return r ? r->report.violations.size() : 0; }
size_t lspan_report_max_min_leaves(const lspan_report* r) { return r ? r->report.maxMinLeaves : 0; }
const char* lspan_report_note(const lspan_report* r) { return r ? r->report.note.c_str() : nullptr; }

lspan_status lspan_audit_run(const lspan_graph_list* graphs, size_t jobs, double time_limit_seconds,
                             lspan_audit** out) {
  if (!graphs || !out) return nullArgument("graphs and out");
  return guarded([&] {
    std::vector<leafspan::Graph> input;
    for (const auto& h : graphs->graphs) input.push_back(h->graph);
    const auto results = leafspan::auditGraphs(input, jobs == 0 ? 1 : jobs, budgetFrom(time_limit_seconds, 0));
    auto a = std::make_unique<lspan_audit>();
    for (const leafspan::AuditResult& r : results) {
      a->json += leafspan::toJsonLine(r) + "\n";
      if (r.record) {
        ++a->evaluated;
        if (r.record->flagged()) ++a->flagged;
      } else {
        ++a->skipped;
        if (r.status != leafspan::SolveStatus::Exact) ++a->timeouts;
      }
    }
    nlohmann::ordered_json s;
    s["summary"] = "audit";
    s["graphs"] = results.size();
    s["evaluated"] = a->evaluated;
    s["skipped"] = a->skipped;
    s["timeouts"] = a->timeouts;
    s["flagged"] = a->flagged;
    a->json += s.dump() + "\n";
    *out = a.release();
  });
}

void lspan_audit_free(lspan_audit* audit) { delete audit; }
const char* lspan_audit_json(const lspan_audit* a) { return a ? a->json.c_str() : nullptr; }
size_t lspan_audit_evaluated(const lspan_audit* a) { return a ? a->evaluated : 0; }
size_t lspan_audit_skipped(const lspan_audit* a) { return a ? a->skipped : 0; }
size_t lspan_audit_flagged(const lspan_audit* a) { return a ? a->flagged : 0; }
size_t lspan_audit_timeouts(const lspan_audit* a) { return a ? a->timeouts : 0; }

}  // extern "C"
