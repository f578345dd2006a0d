#pragma once

// Bounded-multiplicity subset-sum tables with minimum cardinality.
//
// Items are (weight, copies) pairs in a caller-chosen order. A table answers
// "what is the fewest items summing to s" over either exact integer sums in
// [0, limit] or residues mod `limit`, and reconstructs the lexicographically
// smallest selection (items listed in table order, a proper prefix being
// smaller) under a cardinality cap.

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "zindex/zn_core.hpp"

namespace zindex {

enum class SumKind {
  exact,    // integer sums in [0, limit]
  modular,  // residues in [0, limit)
};

struct WeightedItem {
  Int weight;
  Int copies;
};

class SubsetTable {
 public:
  static constexpr Int unreachable = std::numeric_limits<Int>::max() / 4;

  SubsetTable(std::vector<WeightedItem> items, Int limit, SumKind kind);

  /// Fewest items (empty allowed, so min_card(0) == 0) reaching `target`.
  Int min_card(Int target) const { return suffix_at(0, target); }

  /// Fewest items in a nonempty selection reaching `target`.
  Int min_card_nonempty(Int target) const;

  /// Copies taken per item, or nullopt if no selection of at most `card_cap`
  /// items reaches `target`.
  std::optional<std::vector<Int>> lex_smallest(Int target, Int card_cap, bool nonempty) const;

  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<WeightedItem>& items() const noexcept { return items_; }

 private:
  Int slots() const noexcept { return kind_ == SumKind::exact ? limit_ + 1 : limit_; }
  Int suffix_at(std::size_t i, Int s) const { return table_[i * slots() + s]; }
  // s - w in the table's arithmetic; nullopt when an exact sum would go negative.
  std::optional<Int> minus(Int s, Int w) const;
  // Fewest items to reach s from item i onward when `used` copies of item i are spent.
  Int best_from(std::size_t i, Int used, Int s) const;

  std::vector<WeightedItem> items_;
  Int limit_;
  SumKind kind_;
  std::vector<Int> table_;  // (items+1) rows of slots()
};

/// Decision-only variant of SubsetTable::min_card for exact sums: fewest items
/// reaching `target` (<= limit), or SubsetTable::unreachable.
Int min_card_exact(std::span<const WeightedItem> items, Int target);

}  // namespace zindex
