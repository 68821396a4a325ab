#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schub/pair.hpp"

namespace schub {

struct Violation {
  Permutation w;
  Permutation x;
  std::optional<Point> point;
  std::optional<Transposition> trans;
  std::string clause;
};

bool violation_less(const Violation& a, const Violation& b);

struct VerificationReport {
  std::string claim;
  int n = 0;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  double elapsed_ms = 0.0;

  bool pass() const { return violations.empty(); }
};

struct ClaimInfo {
  std::string id;
  std::string summary;
  /// Degree at which the claim is exhaustively verified by the acceptance
  /// suite.
  int spec_n = 5;
  /// Largest degree accepted without --allow-slow.
  int fast_max_n = kDefaultMaxEnumerationDegree;
  /// Hard degree cap for this claim.
  int hard_max_n = kDefaultMaxEnumerationDegree;
};

struct VerifyOptions {
  int parallelism = 0;  // 0 = hardware concurrency
  bool allow_slow = false;
  /// Enumeration degree cap (SCHUB_MAX_N at the CLI); clamped to
  /// kMaxDegree.
  int max_degree = kDefaultMaxEnumerationDegree;
};

struct UnknownClaimError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<ClaimInfo>& claim_catalog();

/// Runs one registered claim exhaustively at degree n. Violations are
/// sorted; the report is deterministic given (claim, n) regardless of
/// parallelism. Throws UnknownClaimError / DegreeError.
VerificationReport run_claim(const std::string& id, int n,
                             const VerifyOptions& opt = {});

/// Runs the whole catalog at degree n, clamping each claim to its own cap;
/// the per-report n field records the degree actually used.
std::vector<VerificationReport> run_all(int n, const VerifyOptions& opt = {});

std::string report_to_text(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);

}  // namespace schub
