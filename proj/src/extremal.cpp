#include "zindex/extremal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "zindex/counterexample.hpp"
#include "zindex/index_engine.hpp"
#include "zindex/parallel.hpp"

namespace zindex {

namespace {

constexpr std::size_t batch_size = 4096;

// C(a, b), saturating at `ceiling`.
Int binomial_capped(Int a, Int b, Int ceiling) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Int acc = 1;
  for (Int i = 1; i <= b; ++i) {
    if (acc > std::numeric_limits<Int>::max() / (a - b + i)) return ceiling + 1;
    acc = acc * (a - b + i) / i;
    if (acc > ceiling) return ceiling + 1;
  }
  return acc;
}

// Lexicographic successor of a nondecreasing (multiset) or strictly
// increasing (distinct) tuple over [1, n-1].
bool advance(std::vector<Int>& tuple, Int n, ExtremalKind kind) {
  const Int top = n - 1;
  const auto len = static_cast<Int>(tuple.size());
  for (Int i = len - 1; i >= 0; --i) {
    const Int limit = kind == ExtremalKind::multiset ? top : top - (len - 1 - i);
    if (tuple[static_cast<std::size_t>(i)] < limit) {
      Int v = tuple[static_cast<std::size_t>(i)] + 1;
      for (Int j = i; j < len; ++j) {
        tuple[static_cast<std::size_t>(j)] = v;
        if (kind == ExtremalKind::distinct) ++v;
      }
      return true;
    }
  }
  return false;
}

std::vector<Int> first_tuple(Int len, ExtremalKind kind) {
  std::vector<Int> t(static_cast<std::size_t>(len), 1);
  if (kind == ExtremalKind::distinct) std::iota(t.begin(), t.end(), Int{1});
  return t;
}

struct LengthOutcome {
  Int enumerated = 0;
  std::optional<ZnSequence> counterexample;  // lexicographically first
};

LengthOutcome scan_length(Int n, Int len, ExtremalKind kind, const ExtremalOptions& options) {
  const Modulus mod(n);
  LengthOutcome out;
  std::vector<Int> tuple = first_tuple(len, kind);
  bool more = kind == ExtremalKind::multiset || len <= n - 1;
  std::vector<std::vector<Int>> batch;
  std::vector<char> lacks;

  while (more) {
    batch.clear();
    while (more && batch.size() < batch_size) {
      batch.push_back(tuple);
      more = advance(tuple, n, kind);
    }
    out.enumerated += static_cast<Int>(batch.size());
    lacks.assign(batch.size(), 0);
    parallel_for(batch.size(), options.parallelism, [&](std::size_t i) {
      if (options.symmetry_reduction && !is_orbit_representative(batch[i], mod)) return;
      lacks[i] = !has_index_n_subsequence(ZnSequence(mod, batch[i]));
    });
    const auto hit = std::find(lacks.begin(), lacks.end(), 1);
    if (hit != lacks.end()) {
      out.counterexample = ZnSequence(mod, batch[static_cast<std::size_t>(hit - lacks.begin())]);
      return out;
    }
  }
  return out;
}

ExtremalReport run_search(Int n, ExtremalKind kind, const ExtremalOptions& options) {
  if (n < 2) throw Error("extremal search requires n >= 2");
  const Modulus mod(n);
  const Int cap = options.cap.value_or(2 * n);

  ExtremalReport out{n, kind, ExtremalStatus::exact, 1, std::nullopt, 0, 0, ""};
  if (kind == ExtremalKind::multiset) {
    std::vector<ZnSequence> seeds;
    ZnSequence ones(mod);
    ones.add(1, n - 1);
    seeds.push_back(ones);
    if (n % 4 == 2 && n >= 22) seeds.push_back(build_counterexample(n).sequence);
    for (const auto& seed : seeds) {
      if (has_index_n_subsequence(seed)) throw InvariantViolation("seed counterexample has an index-n subsequence");
      if (seed.length() > out.seeded_length) {
        out.seeded_length = seed.length();
        out.witness = seed;
      }
    }
  }
  out.value = out.seeded_length + 1;

  for (Int len = out.seeded_length + 1;; ++len) {
    if (len > cap) {
      out.status = ExtremalStatus::exceeds_cap;
      out.note = "length cap " + std::to_string(cap) + " reached";
      return out;
    }
    const Int pool = kind == ExtremalKind::multiset ? n - 1 + len - 1 : n - 1;
    const Int candidates = binomial_capped(pool, len, options.budget);
    if (candidates > options.budget) {
      out.status = ExtremalStatus::exceeds_cap;
      out.note = "length " + std::to_string(len) + " exceeds the search budget of " +
                 std::to_string(options.budget) + " candidates";
      return out;
    }
    auto step = scan_length(n, len, kind, options);
    out.search_space_size += step.enumerated;
    if (!step.counterexample) {
      out.value = len;
      return out;
    }
    out.witness = std::move(step.counterexample);
    out.value = len + 1;
  }
}

}  // namespace

bool is_orbit_representative(std::span<const Int> sorted_values, Modulus mod) {
  std::vector<Int> image(sorted_values.size());
  for (Int m : coprime_multipliers(mod)) {
    if (m == 1) continue;
    std::transform(sorted_values.begin(), sorted_values.end(), image.begin(),
                   [&](Int v) { return mod.reduce(m * v); });
    std::sort(image.begin(), image.end());
    if (std::lexicographical_compare(image.begin(), image.end(), sorted_values.begin(),
                                     sorted_values.end()))
      return false;
  }
  return true;
}

ExtremalReport compute_t(Int n, const ExtremalOptions& options) {
  return run_search(n, ExtremalKind::multiset, options);
}

ExtremalReport compute_T_distinct(Int n, const ExtremalOptions& options) {
  return run_search(n, ExtremalKind::distinct, options);
}

std::string_view to_string(ExtremalKind kind) {
  return kind == ExtremalKind::multiset ? "t" : "T";
}

std::string_view to_string(ExtremalStatus status) {
  return status == ExtremalStatus::exact ? "exact" : "exceeds_cap";
}

}  // namespace zindex
