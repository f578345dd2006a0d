#pragma once

// Brute-force reference implementations. Nothing here calls the DP-based
// library code; only zn-core arithmetic is shared.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "zindex/zn_core.hpp"

namespace zindex::oracle {

/// Calls fn for every sub-multiset of s (including the empty one).
inline void for_each_submultiset(const ZnSequence& s, const std::function<void(const ZnSequence&)>& fn) {
  std::vector<std::pair<Int, Int>> entries(s.counts().begin(), s.counts().end());
  std::vector<Int> pick(entries.size(), 0);
  while (true) {
    ZnSequence t(s.modulus());
    for (std::size_t i = 0; i < entries.size(); ++i) t.add(entries[i].first, pick[i]);
    fn(t);
    std::size_t i = 0;
    while (i < entries.size() && pick[i] == entries[i].second) pick[i++] = 0;
    if (i == entries.size()) return;
    ++pick[i];
  }
}

inline Int sigma_scaled(const ZnSequence& t, Int m) {
  Int total = 0;
  for (Int v : t.values()) total += abs_residue(m * v, t.modulus());
  return total;
}

inline Int brute_index(const ZnSequence& t) {
  Int best = -1;
  for (Int m = 1; m < t.n(); ++m)
    if (std::gcd(m, t.n()) == 1 && (best < 0 || sigma_scaled(t, m) < best)) best = sigma_scaled(t, m);
  return best;
}

/// Some nonempty T | s with Index(T) == n and |T| <= cap.
inline bool brute_has_index_n(const ZnSequence& s, Int cap = 1'000'000) {
  bool found = false;
  for_each_submultiset(s, [&](const ZnSequence& t) {
    if (found || t.empty() || t.length() > cap) return;
    if (brute_index(t) == s.n()) found = true;
  });
  return found;
}

inline std::vector<Int> brute_sum_index_set(const ZnSequence& s) {
  std::vector<Int> out;
  for_each_submultiset(s, [&](const ZnSequence& t) {
    Int sum = 0;
    for (Int v : t.values()) sum += abs_residue(v, s.modulus());
    if (sum >= 1 && sum <= s.n()) out.push_back(sum);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Int brute_big_M(const ZnSequence& s) {
  Int best = 0;
  for_each_submultiset(s, [&](const ZnSequence& t) {
    const auto sums = brute_sum_index_set(t);
    const auto t_max = static_cast<Int>(sums.size());
    if (t_max > 0 && sums.back() == t_max) best = std::max(best, t_max);
  });
  return best;
}

inline bool brute_minimal_zero_sum(const ZnSequence& s) {
  bool zero = false, proper_zero = false;
  for_each_submultiset(s, [&](const ZnSequence& t) {
    if (t.empty()) return;
    Int sum = 0;
    for (Int v : t.values()) sum += v;
    if (sum % s.n() != 0) return;
    if (t.length() == s.length()) zero = true;
    else proper_zero = true;
  });
  return zero && !proper_zero;
}

inline std::vector<ZnSequence> all_multisets(Modulus mod, Int len, Int lo = 0) {
  std::vector<ZnSequence> out;
  std::vector<Int> tuple(static_cast<std::size_t>(len), lo);
  const Int top = mod.value() - 1;
  while (true) {
    out.emplace_back(mod, tuple);
    Int i = len - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == top) --i;
    if (i < 0) return out;
    const Int v = tuple[static_cast<std::size_t>(i)] + 1;
    for (Int j = i; j < len; ++j) tuple[static_cast<std::size_t>(j)] = v;
  }
}

/// Lexicographically smallest ascending index set I (1-based) over all
/// nonempty subsets of [1, limit] with sum of a_i == m (mod n).
inline std::vector<Int> brute_subset_hit(std::span<const Int> a, Int n, Int m, Int limit) {
  std::vector<std::vector<Int>> hits;
  for (Int mask = 1; mask < (Int{1} << limit); ++mask) {
    std::vector<Int> idx;
    Int sum = 0;
    for (Int i = 0; i < limit; ++i)
      if (mask >> i & 1) {
        idx.push_back(i + 1);
        sum += a[static_cast<std::size_t>(i)];
      }
    if (((sum - m) % n + n) % n == 0) hits.push_back(idx);
  }
  if (hits.empty()) return {};
  return *std::min_element(hits.begin(), hits.end());
}

}  // namespace zindex::oracle
