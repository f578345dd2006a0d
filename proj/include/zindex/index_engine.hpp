#pragma once

// Index(S) = min over units m of sigma(|mS|_n), the achievable-sum set,
// the interval quantities M(S) and m(S), and witness searches for
// subsequences of index n.

#include <optional>
#include <vector>

#include "zindex/zn_core.hpp"

namespace zindex {

struct IndexReport {
  Int value;
  Int witness_m;
};

/// A sub-multiset T of S and unit m with sigma(|mT|_n) == target_sum.
struct SubseqWitness {
  bool found = false;
  std::optional<ZnSequence> subsequence;
  Int multiplier = 0;
  Int target_sum = 0;
  Int multipliers_checked = 0;
};

struct SumIndexSet {
  std::vector<Int> sums;  // ascending, each in [1, n]
};

/// Throws Error on empty S. Ties go to the smallest m.
IndexReport index_of(const ZnSequence& s);

SumIndexSet sum_index_set(const ZnSequence& s);

/// Largest t such that some T | S has sum_index_set(T) == [1, t]; 0 if none.
Int big_M(const ZnSequence& s);

/// max over units r of big_M(rS). Prime modulus only.
Int little_m(const ZnSequence& s);

struct SearchOptions {
  std::optional<Int> len_cap;  // absent: unbounded
  unsigned parallelism = 1;
};

/// Searches every unit m for a nonempty T | S with sigma(|mT|_n) == n and
/// |T| <= len_cap. The witness is the smallest such m, then the
/// lexicographically smallest T in ascending-residue order.
SubseqWitness find_index_n_subsequence(const ZnSequence& s, const SearchOptions& options = {});

/// Decision-only form of find_index_n_subsequence; no witness, no allocation per m.
bool has_index_n_subsequence(const ZnSequence& s, std::optional<Int> len_cap = std::nullopt);

/// Searches units m and sums s with d | s | n for sigma(|mT|_n) == s.
/// Witness order: m, then s, then T. Throws Error if d does not divide n.
SubseqWitness conjecture_lk_check(const ZnSequence& s, Int d, unsigned parallelism = 1);

/// A nonempty zero-sum T | S with |T| <= h(S) (lexicographically smallest),
/// or nullopt when none exists.
std::optional<ZnSequence> short_zero_sum(const ZnSequence& s);

/// Re-checks a witness with plain zn-core arithmetic.
bool verify_witness(const ZnSequence& s, const SubseqWitness& w);

}  // namespace zindex
