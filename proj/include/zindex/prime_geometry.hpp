#pragma once

// Half sets S_(p,j) = { i in [1, p/2] : |ij|_p < p/2 }, their complement
// identity and (p-1)/6 lower bound, and the four-term minimal zero-sum scan.

#include <functional>
#include <vector>

#include "zindex/zn_core.hpp"

namespace zindex {

struct HalfSet {
  Int p;
  Int j;
  std::vector<Int> members;  // ascending, in [1, floor(p/2)]
};

/// Requires p an odd prime and 1 <= j <= p-1.
HalfSet half_set(Int p, Int j);

/// True iff, for every j, S_(p,j) and S_(p,p-j) are disjoint, cover
/// [1, floor(p/2)] and have sizes summing to (p-1)/2.
bool check_half_set_complements(Int p);

struct HalfSetScan {
  Int p;
  Int min_size;
  Int min_j;
  std::vector<Int> violators;     // j with 6|S_(p,j)| < p-1
  std::vector<Int> equality_js;   // j with 6|S_(p,j)| == p-1
  std::vector<Int> allowed_equality;  // {p-3} plus (p-1)/3 when integral
  bool equality_as_expected;      // equality_js is a subset of allowed_equality
};

/// Scans j in [2, p-2]. Throws Error for p < 19 or composite p.
HalfSetScan scan_half_set_lower_bound(Int p);

/// Sorted 4-tuples in [1, p-1] with sum in {p, 2p, 3p} and no proper
/// nonempty zero-sum subset, in lexicographic order.
std::vector<ZnSequence> enumerate_min_zero_sum_4(Int p);
void for_each_min_zero_sum_4(Int p, Int first_term, const std::function<void(const ZnSequence&)>& fn);

struct FourSumReport {
  Int p;
  Int count;
  bool all_index_p;
  std::vector<ZnSequence> failures;
};

/// Applies index_of to every minimal zero-sum 4-sequence mod p; shards by first term.
FourSumReport verify_foursum(Int p, unsigned parallelism = 1);

}  // namespace zindex
