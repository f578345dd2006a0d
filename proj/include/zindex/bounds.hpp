#pragma once

// Upper bounds on |R_i| for sequences over Z_p without an index-p
// subsequence, and an exact audit of the eight-case inequality chain that
// combines them for h(S) >= (p-2)/10.

#include <optional>
#include <string>
#include <vector>

#include "zindex/farey.hpp"

namespace zindex {

/// Raised by the checked evaluators when a hypothesis window is violated.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& bound, std::vector<std::string> failures);
  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

/// Right-hand side of an |R| bound plus the hypotheses that failed for it.
struct ClassBound {
  std::string name;
  Rational rhs;
  std::vector<std::string> failures;
  std::map<std::string, Rational> parameters;

  bool hypotheses_hold() const noexcept { return failures.empty(); }
};

/// sum_{i=2}^k phi(i) (i-1).
Int coprime_weight_sum(Int k);

/// The j-th (1-based) positive integer coprime to t.
Int nth_coprime(Int t, Int j);

/// |S| <= M + coprime_weight_sum(k) + sum_{i=2}^k |R_i| for a concrete S
/// over prime p, k = floor(p/M). Requires 4 <= M <= (p-3)/2 and k inside
/// max{(p-M-2)/M, (p-M)/(M+1)} <= k <= (p+1)/M.
BoundEvaluation partition_length_bound(const ZnSequence& s, Int M);

struct CoprimeClassParams {
  Int p;
  Int M;
  Int t;
  Int u;
  Int w;
  std::optional<Int> k;  // default floor(p/M)
};

/// |R_t| <= (p - (t + sum_{i=2}^u a_i) M - 2t + 2) / a_{u+1} + [u>=1](u-1) M + 2t + w,
/// where 1 = a_1 < a_2 < ... are the positive integers coprime to t.
/// Hypotheses: 2 <= t <= k, u, w >= 0, M <= (p - 2t + w a_{u+1} + 2) / (t + sum_{i=2}^u a_i).
ClassBound coprime_class_bound_unchecked(const CoprimeClassParams& params);
ClassBound coprime_class_bound(const CoprimeClassParams& params);

struct PairedClassParams {
  Int p;
  Int M;
  Int t;
  Int l;
  Int u;
  std::optional<Int> k;  // default floor(p/M)
};

/// Either |R_t| = 0 or |R_l| <= (p - lM - 2l + 1)/u + 2l - 1.
/// Hypotheses: 2 <= t < l < k, gcd(t,l) < t, 2 <= u <= M and
/// ((t-d)p - l)/(tl) <= M <= dp/l - t(u-1) with d = gcd(t,l).
ClassBound paired_class_bound_unchecked(const PairedClassParams& params);
ClassBound paired_class_bound(const PairedClassParams& params);

/// Compares a measured |R| against a bound.
BoundEvaluation measure_against(const ClassBound& bound, Int measured);

struct AuditOptions {
  Int threshold = 24318;
  unsigned parallelism = 1;
};

struct CaseAudit {
  int number;
  Int k;
  Int m_lo;  // ceil of the case's lower endpoint
  Int m_hi;  // floor of the case's upper endpoint
  Int evaluated = 0;
  Int violations = 0;           // M where the combined bound is not < p
  Int hypothesis_failures = 0;  // M where some hypothesis window fails
  std::optional<Int> first_violation;
  Rational min_slack;  // min over M of p - combined
  Rational max_slack;
  Int tightest_m = 0;
  std::vector<std::string> sample_failures;  // first few, for reports
  std::vector<Int> failed_ms;                // ascending; violation or hypothesis failure
  BoundEvaluation summary;                   // max combined < p
};

struct PrimeAudit {
  Int p;
  Int threshold;
  bool below_threshold;
  std::vector<CaseAudit> cases;  // 8 entries
  Int m_lo = 0;                  // least M over all case ranges
  Int m_hi = 0;                  // greatest M over all case ranges
  std::vector<Int> uncovered;    // M in [m_lo, m_hi] with no case evaluating cleanly

  /// Every M in [m_lo, m_hi] is handled by at least one case whose
  /// hypotheses hold and whose combined bound is below p.
  bool all_hold() const;
};

/// Re-derives, for every integer M in each case's range, the combined upper
/// bound on p from the |R_i| bounds and checks it is strictly below p.
PrimeAudit audit_prime_cases(Int p, const AuditOptions& options = {});

}  // namespace zindex
