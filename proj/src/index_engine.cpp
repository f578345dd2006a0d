#include "zindex/index_engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "zindex/parallel.hpp"
#include "zindex/subset_table.hpp"

namespace zindex {

namespace {

// Distinct residues of S in ascending order, weighted by |m r|_n.
std::vector<WeightedItem> scaled_items(const ZnSequence& s, Int m) {
  std::vector<WeightedItem> items;
  items.reserve(s.counts().size());
  const Modulus mod = s.modulus();
  for (const auto& [r, c] : s.counts()) items.push_back({abs_residue(mod.reduce(m) * r, mod), c});
  return items;
}

ZnSequence selection_to_sequence(const ZnSequence& s, const std::vector<Int>& taken) {
  ZnSequence out(s.modulus());
  std::size_t i = 0;
  for (const auto& [r, c] : s.counts()) out.add(r, taken[i++]);
  return out;
}

Int effective_cap(std::optional<Int> cap) {
  return cap ? *cap : std::numeric_limits<Int>::max() / 8;
}

}  // namespace

IndexReport index_of(const ZnSequence& s) {
  if (s.empty()) throw Error("index of empty sequence undefined");
  const Modulus mod = s.modulus();
  IndexReport best{std::numeric_limits<Int>::max(), 0};
  for (Int m = 1; m < mod.value(); ++m) {
    if (std::gcd(m, mod.value()) != 1) continue;
    Int value = 0;  // sigma(|mS|_n)
    for (const auto& [r, c] : s.counts()) value += c * abs_residue(m * r, mod);
    if (value < best.value) best = {value, m};
  }
  return best;
}

SumIndexSet sum_index_set(const ZnSequence& s) {
  const Int n = s.n();
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (Int v : normalize(s).values)
    for (Int t = n; t >= v; --t)
      if (reach[t - v]) reach[t] = 1;
  SumIndexSet out;
  for (Int t = 1; t <= n; ++t)
    if (reach[t]) out.sums.push_back(t);
  return out;
}

Int big_M(const ZnSequence& s) {
  // Ascending values extend a covered interval [1, t] exactly while v <= t + 1.
  Int reach = 0;
  for (Int v : normalize(s).values) {
    if (v > reach + 1) break;
    reach += v;
  }
  return std::min(reach, s.n());
}

Int little_m(const ZnSequence& s) {
  if (!is_prime(s.n())) throw Error("m(S) defined for prime modulus only");
  Int best = 0;
  for (Int r : coprime_multipliers(s.modulus())) best = std::max(best, big_M(scale(r, s)));
  return best;
}

bool has_index_n_subsequence(const ZnSequence& s, std::optional<Int> len_cap) {
  if (s.empty()) return false;
  const Int cap = effective_cap(len_cap);
  if (cap < 1) return false;
  std::vector<WeightedItem> items;
  for (Int m : coprime_multipliers(s.modulus())) {
    items = scaled_items(s, m);
    if (min_card_exact(items, s.n()) <= cap) return true;
  }
  return false;
}

SubseqWitness find_index_n_subsequence(const ZnSequence& s, const SearchOptions& options) {
  const auto units = coprime_multipliers(s.modulus());
  SubseqWitness out;
  out.target_sum = s.n();
  out.multipliers_checked = static_cast<Int>(units.size());
  if (s.empty()) return out;

  const Int cap = effective_cap(options.len_cap);
  std::vector<char> hit(units.size(), 0);
  parallel_for(units.size(), options.parallelism, [&](std::size_t i) {
    const auto items = scaled_items(s, units[i]);
    hit[i] = min_card_exact(items, s.n()) <= cap;
  });

  const auto first = std::find(hit.begin(), hit.end(), 1);
  if (first == hit.end()) return out;
  const Int m = units[static_cast<std::size_t>(first - hit.begin())];
  SubsetTable table(scaled_items(s, m), s.n(), SumKind::exact);
  auto taken = table.lex_smallest(s.n(), cap, true);
  if (!taken) throw InvariantViolation("decision and reconstruction disagree");
  out.found = true;
  out.multiplier = m;
  out.subsequence = selection_to_sequence(s, *taken);
  return out;
}

SubseqWitness conjecture_lk_check(const ZnSequence& s, Int d, unsigned parallelism) {
  const Int n = s.n();
  if (d < 1 || n % d != 0) throw Error("d must divide n");
  std::vector<Int> targets;
  for (Int t = d; t <= n; t += d)
    if (n % t == 0) targets.push_back(t);

  const auto units = coprime_multipliers(s.modulus());
  std::vector<SubseqWitness> per_unit(units.size());
  parallel_for(units.size(), parallelism, [&](std::size_t i) {
    if (s.empty()) return;
    SubsetTable table(scaled_items(s, units[i]), n, SumKind::exact);
    for (Int t : targets) {
      if (table.min_card_nonempty(t) == SubsetTable::unreachable) continue;
      auto taken = table.lex_smallest(t, effective_cap(std::nullopt), true);
      if (!taken) throw InvariantViolation("reachable sum without reconstruction");
      per_unit[i].found = true;
      per_unit[i].multiplier = units[i];
      per_unit[i].target_sum = t;
      per_unit[i].subsequence = selection_to_sequence(s, *taken);
      return;
    }
  });

  SubseqWitness out;
  for (auto& w : per_unit) {
    if (w.found) {
      out = std::move(w);
      break;
    }
  }
  out.multipliers_checked = static_cast<Int>(units.size());
  return out;
}

std::optional<ZnSequence> short_zero_sum(const ZnSequence& s) {
  if (s.empty()) return std::nullopt;
  std::vector<WeightedItem> items;
  for (const auto& [r, c] : s.counts()) items.push_back({r, c});
  SubsetTable table(std::move(items), s.n(), SumKind::modular);
  auto taken = table.lex_smallest(0, repetition(s), true);
  if (!taken) {
    if (s.length() >= s.n())
      throw InvariantViolation("no zero-sum subsequence of length <= h(S) with |S| >= n");
    return std::nullopt;
  }
  return selection_to_sequence(s, *taken);
}

bool verify_witness(const ZnSequence& s, const SubseqWitness& w) {
  if (!w.found) return true;
  if (!w.subsequence || w.subsequence->empty()) return false;
  if (!s.contains(*w.subsequence)) return false;
  if (std::gcd(w.multiplier, s.n()) != 1) return false;
  return sigma(normalize(scale(w.multiplier, *w.subsequence))) == w.target_sum;
}

}  // namespace zindex
