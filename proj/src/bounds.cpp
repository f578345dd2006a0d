#include "zindex/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "zindex/parallel.hpp"

namespace zindex {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : "; ") + s;
  return out;
}

Int ceil_of(Rational q) {
  Int f = q.numerator() / q.denominator();
  if (f * q.denominator() < q.numerator()) ++f;
  return f;
}

Int floor_of(Rational q) {
  Int f = q.numerator() / q.denominator();
  if (f * q.denominator() > q.numerator()) --f;
  return f;
}

}  // namespace

HypothesisError::HypothesisError(const std::string& bound, std::vector<std::string> failures)
    : Error(bound + " hypothesis violated: " + join(failures)), failures_(std::move(failures)) {}

Int coprime_weight_sum(Int k) {
  Int total = 0;
  for (Int i = 2; i <= k; ++i) total += euler_phi(i) * (i - 1);
  return total;
}

Int nth_coprime(Int t, Int j) {
  if (t < 1 || j < 1) throw Error("nth_coprime requires t, j >= 1");
  Int seen = 0;
  for (Int x = 1;; ++x) {
    if (std::gcd(x, t) == 1 && ++seen == j) return x;
  }
}

BoundEvaluation partition_length_bound(const ZnSequence& s, Int M) {
  const Int p = s.n();
  if (!is_prime(p)) throw Error("partition length bound requires a prime modulus");
  std::vector<std::string> failures;
  if (M < 4) failures.push_back("M >= 4");
  if (Rational(M) > Rational(p - 3, 2)) failures.push_back("M <= (p-3)/2");
  if (!failures.empty()) throw HypothesisError("partition length bound", failures);

  const Int k = p / M;
  const Rational window_lo = std::max(Rational(p - M - 2, M), Rational(p - M, M + 1));
  const Rational window_hi(p + 1, M);
  if (Rational(k) < window_lo) failures.push_back("k >= max{(p-M-2)/M, (p-M)/(M+1)}");
  if (Rational(k) > window_hi) failures.push_back("k <= (p+1)/M");
  if (!failures.empty()) throw HypothesisError("partition length bound", failures);

  Int r_total = 0;
  for (Int i = 2; i <= k; ++i) r_total += r_set(s, i, M).length();
  const Int weights = coprime_weight_sum(k);
  return make_evaluation("partition length", s.length(), Relation::less_equal,
                         M + weights + r_total,
                         {{"p", p}, {"M", M}, {"k", k}, {"weight_sum", weights},
                          {"r_total", r_total}, {"k_window_lo", window_lo},
                          {"k_window_hi", window_hi}});
}

ClassBound coprime_class_bound_unchecked(const CoprimeClassParams& in) {
  const Int k = in.k.value_or(in.M > 0 ? in.p / in.M : 0);
  ClassBound out{"coprime class |R_" + std::to_string(in.t) + "|", 0, {}, {}};
  out.parameters = {{"p", in.p}, {"M", in.M}, {"t", in.t}, {"u", in.u}, {"w", in.w}, {"k", k}};
  if (in.t < 2 || in.t > k) out.failures.push_back("2 <= t <= k");
  if (in.u < 0 || in.w < 0) out.failures.push_back("u, w >= 0");
  if (in.t < 1 || in.u < 0) return out;

  Int partial = 0;  // sum_{i=2}^u a_i
  for (Int i = 2; i <= in.u; ++i) partial += nth_coprime(in.t, i);
  const Int next = nth_coprime(in.t, in.u + 1);
  const Int weight = in.t + partial;
  const Rational window(in.p - 2 * in.t + in.w * next + 2, weight);
  if (Rational(in.M) > window) out.failures.push_back("M <= (p-2t+w*a_{u+1}+2)/(t+sum a_i)");

  const Int delta = in.u >= 1 ? 1 : 0;
  out.rhs = Rational(in.p - weight * in.M - 2 * in.t + 2, next) + delta * (in.u - 1) * in.M +
            2 * in.t + in.w;
  out.parameters["a_next"] = next;
  out.parameters["window"] = window;
  return out;
}

ClassBound coprime_class_bound(const CoprimeClassParams& params) {
  auto out = coprime_class_bound_unchecked(params);
  if (!out.hypotheses_hold()) throw HypothesisError(out.name, out.failures);
  return out;
}

ClassBound paired_class_bound_unchecked(const PairedClassParams& in) {
  const Int k = in.k.value_or(in.M > 0 ? in.p / in.M : 0);
  const Int d = std::gcd(in.t, in.l);
  ClassBound out{"paired class |R_" + std::to_string(in.l) + "| given |R_" +
                     std::to_string(in.t) + "| > 0",
                 0,
                 {},
                 {}};
  out.parameters = {{"p", in.p}, {"M", in.M}, {"t", in.t}, {"l", in.l}, {"u", in.u}, {"k", k}, {"d", d}};
  if (!(2 <= in.t && in.t < in.l && in.l < k)) out.failures.push_back("2 <= t < l < k");
  if (!(d < in.t)) out.failures.push_back("gcd(t,l) < t");
  if (!(2 <= in.u && in.u <= in.M)) out.failures.push_back("2 <= u <= M");
  if (in.t >= 1 && in.l >= 1) {
    const Rational lo((in.t - d) * in.p - in.l, in.t * in.l);
    const Rational hi = Rational(d * in.p, in.l) - in.t * (in.u - 1);
    if (Rational(in.M) < lo) out.failures.push_back("M >= ((t-d)p-l)/(tl)");
    if (Rational(in.M) > hi) out.failures.push_back("M <= dp/l - t(u-1)");
    out.parameters["window_lo"] = lo;
    out.parameters["window_hi"] = hi;
  }
  if (in.u != 0)
    out.rhs = Rational(in.p - in.l * in.M - 2 * in.l + 1, in.u) + 2 * in.l - 1;
  return out;
}

ClassBound paired_class_bound(const PairedClassParams& params) {
  auto out = paired_class_bound_unchecked(params);
  if (!out.hypotheses_hold()) throw HypothesisError(out.name, out.failures);
  return out;
}

BoundEvaluation measure_against(const ClassBound& bound, Int measured) {
  return make_evaluation(bound.name, measured, Relation::less_equal, bound.rhs, bound.parameters);
}

namespace {

struct CoprimeUse {
  Int t, u, w;
};

struct PairUse {
  Int t;
  std::vector<Int> partners;
  Int u;
};

// M ranges are (p + shift) / den at both ends.
struct CaseSpec {
  int number;
  Int k;
  Int lo_shift, lo_den;
  Int hi_shift, hi_den;
  std::vector<CoprimeUse> classes;
  std::vector<PairUse> pairs;
};

const std::vector<CaseSpec>& case_table() {
  static const std::vector<CaseSpec> table = [] {
    const CoprimeUse small2{2, 2, 0}, small3{3, 2, 0}, small4{4, 2, 0}, small5{5, 2, 0};
    auto wide = [](Int t) { return CoprimeUse{t, 1, 6}; };
    std::vector<CaseSpec> cases;
    cases.push_back({1, 2, -2, 3, -3, 2, {{2, 0, 6}}, {}});
    cases.push_back({2, 3, 3, 4, -4, 3, {wide(2), wide(3)}, {}});
    cases.push_back({3, 4, -2, 5, 1, 4, {wide(2), wide(3), wide(4)}, {}});
    cases.push_back({4, 5, -1, 6, -3, 5, {wide(2), wide(3), wide(4), wide(5)}, {{2, {3}, 12}}});
    cases.push_back({5, 6, -5, 7, -5, 6, {small2, small3, wide(4), wide(5), wide(6)}, {}});
    cases.push_back({6, 7, -2, 8, -3, 7,
                     {small2, small3, wide(4), wide(5), wide(6), wide(7)}, {{2, {5}, 10}}});
    cases.push_back({7, 8, -2, 9, -3, 8,
                     {small2, small3, small4, small5, wide(6), wide(7), wide(8)},
                     {{2, {5, 7}, 20}, {4, {6}, 10}}});
    cases.push_back({8, 9, -2, 10, -4, 9,
                     {small2, small3, small4, small5, wide(6), wide(7), wide(8), wide(9)},
                     {{2, {5, 7}, 10}, {3, {8}, 8}}});
    for (const auto& c : cases) {
      if (static_cast<Int>(c.classes.size()) != c.k - 1)
        throw InvariantViolation("case table must bound every R_i");
    }
    return cases;
  }();
  return table;
}

struct MOutcome {
  Rational combined;
  std::vector<std::string> failures;
};

MOutcome evaluate_case_at(const CaseSpec& spec, Int p, Int M) {
  MOutcome out;
  if (M < 4) out.failures.push_back("M >= 4");
  if (Rational(M) > Rational(p - 3, 2)) out.failures.push_back("M <= (p-3)/2");
  const Rational k_lo = std::max(Rational(p - M - 2, M), Rational(p - M, M + 1));
  if (Rational(spec.k) < k_lo || Rational(spec.k) > Rational(p + 1, M))
    out.failures.push_back("k outside partition-length window");

  std::map<Int, Rational> bound;
  for (const auto& use : spec.classes) {
    auto b = coprime_class_bound_unchecked({p, M, use.t, use.u, use.w, spec.k});
    for (auto& f : b.failures) out.failures.push_back(b.name + ": " + f);
    bound[use.t] = b.rhs;
  }

  Rational total = M + coprime_weight_sum(spec.k);
  std::vector<Int> grouped;
  for (const auto& pair : spec.pairs) {
    Rational when_empty = 0;  // |R_t| = 0
    Rational when_present = bound.at(pair.t);
    for (Int l : pair.partners) {
      when_empty += bound.at(l);
      auto b = paired_class_bound_unchecked({p, M, pair.t, l, pair.u, spec.k});
      for (auto& f : b.failures) out.failures.push_back(b.name + ": " + f);
      when_present += b.rhs;
      grouped.push_back(l);
    }
    grouped.push_back(pair.t);
    total += std::max(when_empty, when_present);
  }
  for (const auto& [t, rhs] : bound)
    if (std::find(grouped.begin(), grouped.end(), t) == grouped.end()) total += rhs;
  out.combined = total;
  return out;
}

CaseAudit audit_case(const CaseSpec& spec, Int p, unsigned parallelism) {
  CaseAudit out;
  out.number = spec.number;
  out.k = spec.k;
  out.m_lo = ceil_of(Rational(p + spec.lo_shift, spec.lo_den));
  out.m_hi = floor_of(Rational(p + spec.hi_shift, spec.hi_den));

  const Int span = std::max<Int>(0, out.m_hi - out.m_lo + 1);
  constexpr Int chunk = 4096;
  const auto chunks = static_cast<std::size_t>((span + chunk - 1) / chunk);
  std::vector<CaseAudit> partial(chunks);

  parallel_for(chunks, parallelism, [&](std::size_t c) {
    CaseAudit& acc = partial[c];
    const Int first = out.m_lo + static_cast<Int>(c) * chunk;
    const Int last = std::min(out.m_hi, first + chunk - 1);
    for (Int M = first; M <= last; ++M) {
      auto r = evaluate_case_at(spec, p, M);
      const Rational slack = Rational(p) - r.combined;
      if (acc.evaluated == 0 || slack < acc.min_slack) {
        acc.min_slack = slack;
        acc.tightest_m = M;
      }
      if (acc.evaluated == 0 || slack > acc.max_slack) acc.max_slack = slack;
      ++acc.evaluated;
      const bool bad_bound = !(r.combined < Rational(p));
      if (bad_bound) ++acc.violations;
      if (!r.failures.empty()) ++acc.hypothesis_failures;
      if (bad_bound || !r.failures.empty()) {
        if (!acc.first_violation) acc.first_violation = M;
        acc.failed_ms.push_back(M);
      }
      if (acc.sample_failures.size() < 3) {
        if (bad_bound)
          acc.sample_failures.push_back("M=" + std::to_string(M) + ": combined bound " +
                                        to_string(r.combined) + " >= p");
        for (const auto& f : r.failures) {
          if (acc.sample_failures.size() >= 3) break;
          acc.sample_failures.push_back("M=" + std::to_string(M) + ": " + f);
        }
      }
    }
  });

  for (const auto& acc : partial) {
    if (acc.evaluated == 0) continue;
    if (out.evaluated == 0 || acc.min_slack < out.min_slack) {
      out.min_slack = acc.min_slack;
      out.tightest_m = acc.tightest_m;
    }
    if (out.evaluated == 0 || acc.max_slack > out.max_slack) out.max_slack = acc.max_slack;
    out.evaluated += acc.evaluated;
    out.violations += acc.violations;
    out.hypothesis_failures += acc.hypothesis_failures;
    if (!out.first_violation && acc.first_violation) out.first_violation = acc.first_violation;
    for (const auto& f : acc.sample_failures)
      if (out.sample_failures.size() < 3) out.sample_failures.push_back(f);
    out.failed_ms.insert(out.failed_ms.end(), acc.failed_ms.begin(), acc.failed_ms.end());
  }

  const Rational worst = Rational(p) - out.min_slack;
  out.summary = make_evaluation("case " + std::to_string(spec.number), worst, Relation::less, p,
                                {{"p", p}, {"k", spec.k}, {"M_lo", out.m_lo}, {"M_hi", out.m_hi},
                                 {"tightest_M", out.tightest_m}, {"evaluated", out.evaluated}});
  if (out.violations > 0 || out.hypothesis_failures > 0 || out.evaluated == 0)
    out.summary.holds = false;
  return out;
}

}  // namespace

bool PrimeAudit::all_hold() const {
  return uncovered.empty() && !cases.empty() &&
         std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.evaluated > 0; });
}

PrimeAudit audit_prime_cases(Int p, const AuditOptions& options) {
  if (!is_prime(p)) throw Error("audit requires a prime p");
  PrimeAudit out{p, options.threshold, p <= options.threshold, {}, 0, 0, {}};
  for (const auto& spec : case_table()) out.cases.push_back(audit_case(spec, p, options.parallelism));

  out.m_lo = out.cases.front().m_lo;
  out.m_hi = out.cases.front().m_hi;
  for (const auto& c : out.cases) {
    out.m_lo = std::min(out.m_lo, c.m_lo);
    out.m_hi = std::max(out.m_hi, c.m_hi);
  }
  for (Int M = out.m_lo; M <= out.m_hi; ++M) {
    const bool covered = std::any_of(out.cases.begin(), out.cases.end(), [&](const CaseAudit& c) {
      return c.m_lo <= M && M <= c.m_hi && !std::binary_search(c.failed_ms.begin(), c.failed_ms.end(), M);
    });
    if (!covered) out.uncovered.push_back(M);
  }
  return out;
}

}  // namespace zindex
