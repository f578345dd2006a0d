#include "zindex/counterexample.hpp"

namespace zindex {

namespace {

void require_family(Int n, bool force) {
  const bool shape = n % 4 == 2;
  const Int k = (n - 2) / 4;
  if (!shape || k < (force ? 2 : 5)) throw Error("family requires n=4k+2, k>=5");
}

}  // namespace

CounterexampleSpec build_counterexample(Int n, bool force) {
  require_family(n, force);
  const Int half = n / 2;
  ZnSequence s{Modulus(n)};
  s.add(1, half - 3);
  s.add(half, 1);
  s.add(half + 1, half - 1);
  s.add(half + 2, n / 4 - 2);

  CounterexampleSpec out{(n - 2) / 4, n, s, n + n / 4 - 5, half - 1};
  if (s.length() != out.expected_length || repetition(s) != out.expected_repetition)
    throw InvariantViolation("family member has wrong shape for n=" + std::to_string(n));
  return out;
}

FamilyVerification verify_family(Int n, bool force, unsigned parallelism) {
  const auto spec = build_counterexample(n, force);
  SearchOptions options;
  options.parallelism = parallelism;
  auto search = find_index_n_subsequence(spec.sequence, options);
  const auto lk = conjecture_lk_check(spec.sequence, n, parallelism);
  if (search.found != lk.found)
    throw InvariantViolation("index-n search and d=n check disagree");
  return {n, !search.found, search.multipliers_checked, lk.found, (n - 2) / 4 < 5,
          std::move(search)};
}

Int t_lower_bound(Int n) {
  require_family(n, false);
  return n + n / 4 - 4;
}

}  // namespace zindex
