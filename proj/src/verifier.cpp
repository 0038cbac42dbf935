#include "leafspan/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "leafspan/bounds.hpp"
#include "leafspan/canonical.hpp"
#include "leafspan/error.hpp"
#include "leafspan/family.hpp"
#include "leafspan/graph6.hpp"

namespace leafspan {
namespace {

using Json = nlohmann::ordered_json;

std::string boundName(BoundKind bound) { return bound == BoundKind::Theorem ? "theorem" : "conjecture"; }

// Family members whose order matches n, keyed by canonical label.
std::vector<std::pair<std::string, std::string>> familyLabels(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int m = 1; m <= kMaxFamilyLevel && familyOrder(m) <= kMaxCanonicalOrder; ++m) {
    if (familyOrder(m) != n) continue;
    out.emplace_back(canonicalLabel(buildGm(m).graph).bytes, "G_" + std::to_string(m));
  }
  return out;
}

template <typename Task>
void parallelFor(std::size_t count, std::size_t jobs, Task&& task) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

CubicUniverse crossCheckedUniverse(std::size_t n, const VerifyOptions& options, std::optional<std::size_t>& checked) {
  CubicUniverse universe = enumerateConnectedCubic(n, EnumerationMethod::CanonicalFilter, options.jobs);
  if (options.crossValidate && n <= 12 && !universe.oddOrder) {
    const CubicUniverse other = enumerateConnectedCubic(n, EnumerationMethod::VertexExtension);
    if (other.labels != universe.labels) {
      fail(ErrorCode::Internal, "enumeration methods disagree for n=" + std::to_string(n) + ": " +
                                    std::to_string(universe.labels.size()) + " vs " +
                                    std::to_string(other.labels.size()));
    }
    checked = other.labels.size();
  }
  return universe;
}

}  // namespace

std::chrono::milliseconds defaultTimeLimit(std::size_t n) {
  return n <= 14 ? std::chrono::milliseconds(10'000) : std::chrono::milliseconds(60'000);
}

BoundReport verifyUniverse(BoundKind bound, const CubicUniverse& universe, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = universe.n;
  BoundReport report;
  report.bound = bound;
  report.n = n;
  report.universeSize = universe.graphs.size();
  report.theoremBound = theoremBound(n);
  report.conjectureBound = conjectureBound(n);
  report.note = universe.note;

  if (bound == BoundKind::Theorem && !report.theoremBound) {
    report.outsideHypothesis = true;
    report.note = "n=" + std::to_string(n) + " is below the theorem's hypothesis n >= 8; skipped";
    return report;
  }
  const int boundValue = bound == BoundKind::Theorem ? *report.theoremBound : report.conjectureBound;

  const auto family = familyLabels(n);
  const Budget budget{0, options.timeLimit.value_or(defaultTimeLimit(n))};
  report.rows.resize(universe.graphs.size());
  parallelFor(universe.graphs.size(), options.jobs, [&](std::size_t i) {
    const Graph& g = universe.graphs[i];
    const SolveOutcome outcome = minLeafSpanningTree(g, budget);
    GraphResult& row = report.rows[i];
    row.graph6 = writeGraph6(g);
    row.minLeaves = outcome.minLeaves;
    row.status = outcome.status;
    row.lowerBound = outcome.lowerBoundUsed;
    row.nodes = outcome.nodesExplored;
    row.elapsed = outcome.elapsed;
    row.witness = formatWitness(outcome);
    if (!family.empty()) {
      const std::string label = canonicalLabel(g).bytes;
      for (const auto& [familyLabel, name] : family) {
        if (familyLabel == label) row.familyMember = name;
      }
    }
  });

  for (const GraphResult& row : report.rows) {
    if (row.status != SolveStatus::Exact) {
      ++report.timeouts;
      continue;
    }
    ++report.solved;
    report.maxMinLeaves = std::max(report.maxMinLeaves, row.minLeaves);
    if (row.minLeaves > 2) ++report.nonTraceable;
    if (static_cast<int>(row.minLeaves) > boundValue) {
      report.violations.push_back(Certificate{bound, n, row.graph6, row.minLeaves, boundValue, row.witness});
    }
  }

  std::vector<std::string> notes;
  if (!universe.note.empty()) notes.push_back(universe.note);
  if (bound == BoundKind::Conjecture && report.conjectureBound < 2 && n >= 2) {
    notes.push_back("conjecture bound floor((n+2)/6)=" + std::to_string(report.conjectureBound) +
                    " is below 2, the fewest leaves any spanning tree on n>=2 vertices can have; the violation is "
                    "vacuous and any threshold for the conjecture must exceed " + std::to_string(n));
  }
  if (bound == BoundKind::Conjecture && report.conjectureBound == 2 && report.solved > 0) {
    notes.push_back("bound 2 asks for traceability; non-traceable " + std::to_string(report.nonTraceable) + "/" +
                    std::to_string(report.solved));
  }
  for (const GraphResult& row : report.rows) {
    if (row.familyMember.empty() || row.status != SolveStatus::Exact) continue;
    const bool tight = static_cast<int>(row.minLeaves) == report.conjectureBound;
    notes.push_back(row.familyMember + " has " + std::to_string(row.minLeaves) + " minimum leaves; (n+2)/6=" +
                    std::to_string(report.conjectureBound) + (tight ? ", attained with equality" : ", not tight"));
  }
  report.note.clear();
  for (std::size_t i = 0; i < notes.size(); ++i) report.note += (i ? "; " : "") + notes[i];
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<BoundReport> verifyTheoremBound(const std::vector<std::size_t>& orders, const VerifyOptions& options) {
  std::vector<BoundReport> out;
  for (std::size_t n : orders) {
    if (!theoremBound(n)) {
      CubicUniverse empty;
      empty.n = n;
      out.push_back(verifyUniverse(BoundKind::Theorem, empty, options));
      continue;
    }
    std::optional<std::size_t> checked;
    const CubicUniverse universe = crossCheckedUniverse(n, options, checked);
    out.push_back(verifyUniverse(BoundKind::Theorem, universe, options));
    out.back().crossCheckedSize = checked;
  }
  return out;
}

std::vector<BoundReport> probeConjecture(const std::vector<std::size_t>& orders, const VerifyOptions& options) {
  std::vector<BoundReport> out;
  for (std::size_t n : orders) {
    std::optional<std::size_t> checked;
    const CubicUniverse universe = crossCheckedUniverse(n, options, checked);
    out.push_back(verifyUniverse(BoundKind::Conjecture, universe, options));
    out.back().crossCheckedSize = checked;
  }
  return out;
}

std::string reportJsonLines(const BoundReport& report, bool timings) {
  std::string out;
  auto optionalInt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  for (const GraphResult& row : report.rows) {
    Json j;
    j["n"] = report.n;
    j["graph6"] = row.graph6;
    j["min_leaves"] = row.minLeaves;
    j["status"] = std::string(statusName(row.status));
    j["lb"] = row.lowerBound;
    j["theorem_bound"] = optionalInt(report.theoremBound);
    j["conjecture_bound"] = report.conjectureBound;
    j["nodes"] = row.nodes;
    if (timings) j["millis"] = row.elapsed.count();
    if (!row.familyMember.empty()) {
      j["family"] = row.familyMember;
      j["tight"] = static_cast<int>(row.minLeaves) == report.conjectureBound;
    }
    out += j.dump() + "\n";
  }
  for (const Certificate& c : report.violations) {
    Json j;
    j["violation"] = boundName(c.bound);
    j["n"] = c.n;
    j["graph6"] = c.graph6;
    j["min_leaves"] = c.minLeaves;
    j["status"] = "exact";
    j["bound_value"] = c.boundValue;
    j["witness"] = c.witness;
    out += j.dump() + "\n";
  }
  Json s;
  s["summary"] = boundName(report.bound);
  s["n"] = report.n;
  s["universe_size"] = report.universeSize;
  s["cross_checked_size"] = report.crossCheckedSize ? Json(*report.crossCheckedSize) : Json(nullptr);
  s["solved"] = report.solved;
  s["timeouts"] = report.timeouts;
  s["max_min_leaves"] = report.maxMinLeaves;
  s["non_traceable"] = report.nonTraceable;
  s["theorem_bound"] = optionalInt(report.theoremBound);
  s["conjecture_bound"] = report.conjectureBound;
  s["violations"] = report.violations.size();
  s["outside_hypothesis"] = report.outsideHypothesis;
  s["complete"] = report.complete();
  if (timings) s["millis"] = report.elapsed.count();
  s["note"] = report.note;
  out += s.dump() + "\n";
  return out;
}

bool reverifyCertificate(const Certificate& certificate, Budget budget) {
  try {
    const ParsedWitness parsed = parseWitness(certificate.witness);
    if (writeGraph6(parsed.graph) != certificate.graph6) return false;
    if (parsed.graph.order() != certificate.n) return false;
    const SpanningTree tree = SpanningTree::fromEdges(parsed.graph, parsed.edges);
    if (tree.leafCount() != certificate.minLeaves) return false;
    if (!parsed.minLeaves || *parsed.minLeaves != certificate.minLeaves || parsed.status != "exact") return false;
    const int expected = certificate.bound == BoundKind::Theorem ? theoremBound(certificate.n).value_or(-1)
                                                                 : conjectureBound(certificate.n);
    if (expected != certificate.boundValue || static_cast<int>(certificate.minLeaves) <= expected) return false;
    const SolveOutcome again = minLeafSpanningTree(parsed.graph, budget);
    return again.status == SolveStatus::Exact && again.minLeaves == certificate.minLeaves;
  } catch (const Error&) {
    return false;
  }
}

AuditRecord evaluateAudit(std::string graphId, std::size_t n, const LeafStats& stats, bool leavesIndependent) {
  AuditRecord r;
  r.graphId = std::move(graphId);
  r.n = n;
  r.k = stats.k;
  r.p = stats.p;
  r.n1 = stats.n1;
  r.leavesIndependent = leavesIndependent;
  r.inequalityHolds = 2 * stats.n1 >= 5 * stats.k;  // n1 >= ceil(5k/2)
  r.chainHolds = 2 * n + 4 >= 9 * stats.k;          // n >= 9k/2 - 2
  return r;
}

AuditResult auditOptimalTree(const Graph& g, const SolveOutcome& outcome) {
  AuditResult result;
  result.graphId = writeGraph6(g);
  result.status = outcome.status;
  result.witness = formatWitness(outcome);
  if (outcome.status != SolveStatus::Exact) {
    result.skipReason = "exact outcome required";
  } else if (outcome.minLeaves < 3) {
    result.skipReason = "k >= 3 required";
  } else if (!validate(g).cubic) {
    result.skipReason = "cubic host required";
  } else {
    result.record = evaluateAudit(result.graphId, g.order(), leafStats(outcome.witness), leavesIndependent(outcome.witness));
  }
  return result;
}

std::string toJsonLine(const AuditResult& result) {
  Json j;
  if (!result.record) {
    j["graph6"] = result.graphId;
    j["status"] = std::string(statusName(result.status));
    j["skipped"] = result.skipReason;
    return j.dump();
  }
  const AuditRecord& r = *result.record;
  j["graph6"] = r.graphId;
  j["n"] = r.n;
  j["k"] = r.k;
  j["p"] = r.p;
  j["n1"] = r.n1;
  j["leaves_independent"] = r.leavesIndependent;
  j["inequality_holds"] = r.inequalityHolds;
  j["chain_holds"] = r.chainHolds;
  j["flagged"] = r.flagged();
  if (r.flagged()) j["witness"] = result.witness;
  return j.dump();
}

std::vector<AuditResult> auditGraphs(const std::vector<Graph>& graphs, std::size_t jobs, Budget budget) {
  std::vector<AuditResult> out(graphs.size());
  parallelFor(graphs.size(), jobs,
              [&](std::size_t i) { out[i] = auditOptimalTree(graphs[i], minLeafSpanningTree(graphs[i], budget)); });
  return out;
}

}  // namespace leafspan
