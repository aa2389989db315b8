#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossnum/budget.hpp"
#include "crossnum/crossing.hpp"
#include "crossnum/graph.hpp"
#include "crossnum/pancake.hpp"

namespace crossnum {

enum class AuditLevel { Fast, Full };
enum class AuditStatus { Pass, Fail, Timeout };

std::string to_string(AuditStatus s);

struct AuditEntry {
  char id = 'a';
  std::string title;
  std::string claim; // the statement being checked
  AuditStatus status = AuditStatus::Pass;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  bool all_passed() const;
  bool any_failed() const;
  /// Line-oriented: `audit <id> <pass|fail|timeout> <detail>`.
  std::string machine() const;
  std::string human() const;
};

struct AuditOptions {
  AuditLevel level = AuditLevel::Fast;
  Seconds budget{300.0}; // per solver call in (h) and (i)
  std::uint64_t seed = 1;
  int heuristic_tries = 256;
  /// Replaces the built-in 12-vertex gadget (mutation testing).
  std::optional<Graph> gadget_override;
};

/// Runs the audit chain (a)-(h), plus (i) at full level, in order.
AuditReport run_audit_suite(const AuditOptions &options = {});

/// "none", "one", or "two+" pairs of the four 6-cycles crossing each other.
std::string six_cycle_pair_class(const PancakeDecomposition &d,
                                 std::span<const CrossingPair> pairs);

} // namespace crossnum
