#include "zindex/subset_table.hpp"

#include <algorithm>

namespace zindex {

SubsetTable::SubsetTable(std::vector<WeightedItem> items, Int limit, SumKind kind)
    : items_(std::move(items)), limit_(limit), kind_(kind) {
  if (limit_ < 1) throw Error("subset table limit must be positive");
  const Int width = slots();
  table_.assign((items_.size() + 1) * static_cast<std::size_t>(width), unreachable);
  table_[items_.size() * width + 0] = 0;

  for (std::size_t i = items_.size(); i-- > 0;) {
    const auto [w, copies] = items_[i];
    const Int* next = &table_[(i + 1) * width];
    Int* row = &table_[i * width];
    for (Int s = 0; s < width; ++s) {
      Int best = next[s];
      Int r = s;
      for (Int j = 1; j <= copies; ++j) {
        auto prev = minus(r, w);
        if (!prev) break;
        r = *prev;
        if (next[r] != unreachable) best = std::min(best, next[r] + j);
      }
      row[s] = best;
    }
  }
}

std::optional<Int> SubsetTable::minus(Int s, Int w) const {
  if (kind_ == SumKind::exact) {
    if (s < w) return std::nullopt;
    return s - w;
  }
  Int r = (s - w) % limit_;
  return r < 0 ? r + limit_ : r;
}

Int SubsetTable::best_from(std::size_t i, Int used, Int s) const {
  if (i >= items_.size()) return s == 0 ? 0 : unreachable;
  const auto [w, copies] = items_[i];
  Int best = suffix_at(i + 1, s);
  Int r = s;
  for (Int j = 1; j <= copies - used; ++j) {
    auto prev = minus(r, w);
    if (!prev) break;
    r = *prev;
    const Int rest = suffix_at(i + 1, r);
    if (rest != unreachable) best = std::min(best, rest + j);
  }
  return best;
}

Int SubsetTable::min_card_nonempty(Int target) const {
  Int best = unreachable;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].copies < 1) continue;
    auto rest = minus(target, items_[i].weight);
    if (!rest) continue;
    const Int tail = best_from(i, 1, *rest);
    if (tail != unreachable) best = std::min(best, tail + 1);
  }
  return best;
}

std::optional<std::vector<Int>> SubsetTable::lex_smallest(Int target, Int card_cap,
                                                          bool nonempty) const {
  if (target < 0 || target >= slots()) return std::nullopt;
  std::vector<Int> taken(items_.size(), 0);
  Int remaining = target;
  Int budget = card_cap;
  std::size_t cursor = 0;
  bool started = false;

  while (true) {
    if (remaining == 0 && (started || !nonempty)) return taken;
    bool advanced = false;
    for (std::size_t j = cursor; j < items_.size(); ++j) {
      if (taken[j] >= items_[j].copies) continue;
      auto rest = minus(remaining, items_[j].weight);
      if (!rest) continue;
      const Int tail = best_from(j, taken[j] + 1, *rest);
      if (tail == unreachable || tail + 1 > budget) continue;
      ++taken[j];
      remaining = *rest;
      budget -= 1;
      cursor = j;
      started = true;
      advanced = true;
      break;
    }
    if (!advanced) {
      if (started) throw InvariantViolation("subset reconstruction lost feasibility");
      return std::nullopt;
    }
  }
}

Int min_card_exact(std::span<const WeightedItem> items, Int target) {
  constexpr Int inf = SubsetTable::unreachable;
  thread_local std::vector<Int> dp;
  dp.assign(static_cast<std::size_t>(target) + 1, inf);
  dp[0] = 0;
  for (const auto& [w, copies] : items) {
    if (w > target) continue;
    // Bounded item expanded as 0/1 copies; sums stay small so this is cheap.
    for (Int c = 0; c < copies; ++c) {
      bool changed = false;
      for (Int s = target; s >= w; --s) {
        if (dp[s - w] != inf && dp[s - w] + 1 < dp[s]) {
          dp[s] = dp[s - w] + 1;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }
  return dp[target];
}

}  // namespace zindex
