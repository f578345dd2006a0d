#include "zindex/prime_geometry.hpp"

#include <algorithm>

#include "zindex/index_engine.hpp"
#include "zindex/parallel.hpp"

namespace zindex {

namespace {

void require_odd_prime(Int p) {
  if (p < 3 || !is_prime(p)) throw Error("p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

HalfSet half_set(Int p, Int j) {
  require_odd_prime(p);
  if (j < 1 || j > p - 1) throw Error("j must lie in [1, p-1]");
  HalfSet out{p, j, {}};
  for (Int i = 1; 2 * i <= p; ++i) {
    // |ij|_p < p/2 with p odd
    if (2 * ((i * j) % p) < p) out.members.push_back(i);
  }
  return out;
}

bool check_half_set_complements(Int p) {
  require_odd_prime(p);
  const Int half = p / 2;
  for (Int j = 1; j <= p - 1; ++j) {
    const auto a = half_set(p, j).members;
    const auto b = half_set(p, p - j).members;
    if (static_cast<Int>(a.size() + b.size()) * 2 != p - 1) return false;
    std::vector<Int> both;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (static_cast<Int>(both.size()) != half) return false;  // overlap or gap
    for (Int i = 0; i < half; ++i)
      if (both[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

HalfSetScan scan_half_set_lower_bound(Int p) {
  if (p < 19) throw Error("lemma requires p >= 19");
  require_odd_prime(p);
  HalfSetScan out{p, p, 0, {}, {}, {p - 3}, true};
  if ((p - 1) % 3 == 0) out.allowed_equality.push_back((p - 1) / 3);
  std::sort(out.allowed_equality.begin(), out.allowed_equality.end());

  for (Int j = 2; j <= p - 2; ++j) {
    const Int size = static_cast<Int>(half_set(p, j).members.size());
    if (size < out.min_size) {
      out.min_size = size;
      out.min_j = j;
    }
    if (6 * size < p - 1) out.violators.push_back(j);
    if (6 * size == p - 1) out.equality_js.push_back(j);
  }
  out.equality_as_expected = std::all_of(out.equality_js.begin(), out.equality_js.end(), [&](Int j) {
    return std::binary_search(out.allowed_equality.begin(), out.allowed_equality.end(), j);
  });
  return out;
}

void for_each_min_zero_sum_4(Int p, Int a1, const std::function<void(const ZnSequence&)>& fn) {
  const Modulus mod(p);
  auto nonzero = [p](Int x) { return x % p != 0; };
  for (Int a2 = a1; a2 < p; ++a2) {
    for (Int a3 = a2; a3 < p; ++a3) {
      for (Int total = p; total <= 3 * p; total += p) {
        const Int a4 = total - a1 - a2 - a3;
        if (a4 < a3) continue;
        if (a4 >= p) continue;
        // The 14 proper nonempty subsets; complements of pairs and triples
        // reduce the check to singletons (never zero) and pairs.
        if (!nonzero(a1 + a2) || !nonzero(a1 + a3) || !nonzero(a1 + a4) || !nonzero(a2 + a3) ||
            !nonzero(a2 + a4) || !nonzero(a3 + a4))
          continue;
        fn(ZnSequence(mod, {a1, a2, a3, a4}));
      }
    }
  }
}

std::vector<ZnSequence> enumerate_min_zero_sum_4(Int p) {
  if (p < 5 || !is_prime(p)) throw Error("four-term enumeration requires a prime p >= 5");
  std::vector<ZnSequence> out;
  for (Int a1 = 1; a1 < p; ++a1)
    for_each_min_zero_sum_4(p, a1, [&](const ZnSequence& s) { out.push_back(s); });
  return out;
}

FourSumReport verify_foursum(Int p, unsigned parallelism) {
  if (p < 5 || !is_prime(p)) throw Error("four-term verification requires a prime p >= 5");
  struct Shard {
    Int count = 0;
    std::vector<ZnSequence> failures;
  };
  std::vector<Shard> shards(static_cast<std::size_t>(p - 1));
  parallel_for(shards.size(), parallelism, [&](std::size_t i) {
    Shard& shard = shards[i];
    for_each_min_zero_sum_4(p, static_cast<Int>(i) + 1, [&](const ZnSequence& s) {
      ++shard.count;
      if (index_of(s).value != p) shard.failures.push_back(s);
    });
  });
  FourSumReport out{p, 0, true, {}};
  for (auto& shard : shards) {
    out.count += shard.count;
    for (auto& f : shard.failures) out.failures.push_back(std::move(f));
  }
  out.all_index_p = out.failures.empty();
  return out;
}

}  // namespace zindex
