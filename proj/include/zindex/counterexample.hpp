#pragma once

// The n = 4k+2 family 1^{n/2-3} (n/2) (n/2+1)^{n/2-1} (n/2+2)^{floor(n/4)-2},
// which has no subsequence of index n, and the lower bound on t(n) it gives.

#include "zindex/index_engine.hpp"

namespace zindex {

struct CounterexampleSpec {
  Int k;
  Int n;
  ZnSequence sequence;
  Int expected_length;      // n + floor(n/4) - 5
  Int expected_repetition;  // n/2 - 1
};

struct FamilyVerification {
  Int n;
  bool no_index_subseq;
  Int multipliers_checked;
  bool lk_at_n_found;  // conjecture_lk_check(S, d = n).found
  bool forced;         // built outside k >= 5 via the escape hatch
  SubseqWitness witness;
};

/// Requires n = 4k+2 with k >= 5. With `force`, any n = 4k+2 >= 10 is built.
CounterexampleSpec build_counterexample(Int n, bool force = false);

FamilyVerification verify_family(Int n, bool force = false, unsigned parallelism = 1);

/// n + floor(n/4) - 4 for family members.
Int t_lower_bound(Int n);

}  // namespace zindex
