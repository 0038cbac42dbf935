#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leafspan/cubic_enum.hpp"
#include "leafspan/exact_solver.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/spanning_tree.hpp"

namespace leafspan {

enum class BoundKind { Theorem, Conjecture };

struct VerifyOptions {
  std::size_t jobs = 1;
  /// Per-graph wall-clock budget; when unset, 10 s for n <= 14 and 60 s above.
  std::optional<std::chrono::milliseconds> timeLimit;
  /// Re-enumerate with the second method and require identical universes (n <= 12).
  bool crossValidate = true;
  /// Include per-graph and per-report "millis" fields (breaks byte-identical reruns).
  bool timings = false;
};

std::chrono::milliseconds defaultTimeLimit(std::size_t n);

struct GraphResult {
  std::string graph6;
  std::size_t minLeaves = 0;
  SolveStatus status = SolveStatus::Exact;
  std::size_t lowerBound = 0;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  std::string witness;
  std::string familyMember;  // "G_m" when the graph is a family member
};

/// Evidence that an exactly solved graph exceeds a bound. `witness` is a
/// complete witness file; the exactness claim is re-checked by re-solving.
struct Certificate {
  BoundKind bound = BoundKind::Theorem;
  std::size_t n = 0;
  std::string graph6;
  std::size_t minLeaves = 0;
  int boundValue = 0;
  std::string witness;
};

struct BoundReport {
  BoundKind bound = BoundKind::Theorem;
  std::size_t n = 0;
  std::size_t universeSize = 0;
  std::optional<std::size_t> crossCheckedSize;
  std::size_t solved = 0;
  std::size_t timeouts = 0;
  std::size_t maxMinLeaves = 0;
  std::size_t nonTraceable = 0;  // exactly solved graphs with minLeaves > 2
  std::optional<int> theoremBound;
  int conjectureBound = 0;
  bool outsideHypothesis = false;
  std::vector<Certificate> violations;
  std::vector<GraphResult> rows;
  std::chrono::milliseconds elapsed{0};
  std::string note;

  bool complete() const { return timeouts == 0; }
};

/// Solves every graph of `universe` and compares against the chosen bound.
BoundReport verifyUniverse(BoundKind bound, const CubicUniverse& universe, const VerifyOptions& options);

/// Enumerates connected cubic graphs for each n and checks floor((2n+4)/9).
std::vector<BoundReport> verifyTheoremBound(const std::vector<std::size_t>& orders, const VerifyOptions& options);

/// Enumerates connected cubic graphs for each n and checks floor((n+2)/6).
std::vector<BoundReport> probeConjecture(const std::vector<std::size_t>& orders, const VerifyOptions& options);

/// JSON-lines rendering: per-graph rows, violation certificates, then a summary line.
std::string reportJsonLines(const BoundReport& report, bool timings);

/// Re-checks a certificate from its own contents: witness validity, claimed
/// leaf count, the bound comparison, and (when solvable) exact minimality.
bool reverifyCertificate(const Certificate& certificate, Budget budget = {});

struct AuditRecord {
  std::string graphId;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  std::size_t n1 = 0;
  bool leavesIndependent = false;
  bool inequalityHolds = false;  // n1 >= ceil(5k/2)
  bool chainHolds = false;       // n >= 9k/2 - 2
  bool flagged() const { return !leavesIndependent || !inequalityHolds || !chainHolds || k != p + 2; }
};

struct AuditResult {
  std::string graphId;
  SolveStatus status = SolveStatus::Exact;
  std::optional<AuditRecord> record;
  std::string skipReason;
  std::string witness;
};

AuditRecord evaluateAudit(std::string graphId, std::size_t n, const LeafStats& stats, bool leavesIndependent);

/// Evaluates the counting inequalities on an optimal witness. Skips (with a
/// reason) when the outcome is not exact, k < 3, or g is not cubic.
AuditResult auditOptimalTree(const Graph& g, const SolveOutcome& outcome);

std::string toJsonLine(const AuditResult& result);

/// Solves each graph (per-graph budget, `jobs` workers) and audits its witness.
/// Results are in input order.
std::vector<AuditResult> auditGraphs(const std::vector<Graph>& graphs, std::size_t jobs, Budget budget);

}  // namespace leafspan
