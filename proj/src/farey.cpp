#include "zindex/farey.hpp"

#include <numeric>

#include "zindex/subset_table.hpp"

namespace zindex {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::equal: return "==";
  }
  return "?";
}

BoundEvaluation make_evaluation(std::string name, Rational lhs, Relation rel, Rational rhs,
                                std::map<std::string, Rational> parameters) {
  bool holds = false;
  switch (rel) {
    case Relation::less: holds = lhs < rhs; break;
    case Relation::less_equal: holds = lhs <= rhs; break;
    case Relation::equal: holds = lhs == rhs; break;
  }
  return {std::move(name), lhs, rhs, rel, holds, std::move(parameters)};
}

FareySet farey_set(Int k) {
  if (k < 2) throw Error("farey set requires k >= 2");
  // Walk the Farey sequence of order k from 0/1, 1/k and stop before 1/1.
  FareySet out{k, {}};
  Int a = 0, b = 1, c = 1, d = k;
  while (!(c == 1 && d == 1)) {
    out.fractions.push_back({c, d});
    const Int q = (k + b) / d;
    const Int next_c = q * c - a;
    const Int next_d = q * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return out;
}

std::vector<BoundEvaluation> check_adjacency(const FareySet& set) {
  std::vector<BoundEvaluation> out;
  for (std::size_t i = 0; i + 1 < set.fractions.size(); ++i) {
    const auto [a, b] = set.fractions[i];
    const auto [c, d] = set.fractions[i + 1];
    const std::map<std::string, Rational> params{
        {"k", set.k}, {"left", Rational(a, b)}, {"right", Rational(c, d)}};
    const std::string pair = std::to_string(a) + "/" + std::to_string(b) + " < " +
                             std::to_string(c) + "/" + std::to_string(d);
    out.push_back(make_evaluation("denominator sum " + pair, set.k + 1, Relation::less_equal,
                                  b + d, params));
    out.push_back(make_evaluation("determinant " + pair, b * c - a * d, Relation::equal, 1, params));
  }
  return out;
}

PartitionGapError::PartitionGapError(Int value)
    : Error("term outside partition: " + std::to_string(value)), value_(value) {}

PartitionResult partition_sequence(const ZnSequence& s, Int M) {
  const Int p = s.n();
  if (!is_prime(p)) throw Error("partition requires a prime modulus");
  if (M < 1 || M > p - 2) throw Error("partition requires 1 <= M <= p-2");
  const Int k = p / M;
  if (k < 2) throw Error("partition requires floor(p/M) >= 2");

  PartitionResult out{p, M, k, farey_set(k), {}};
  const auto& fr = out.farey.fractions;
  const std::size_t f = fr.size();
  auto part = [&](int index, Rational lo, Rational hi) {
    out.parts.push_back({index, lo, hi, ZnSequence(s.modulus())});
  };
  part(1, 1, M);
  part(2, M + 2, Rational(p - 1, fr[0].b));
  for (std::size_t i = 1; i <= f; ++i) {
    const auto [a, b] = fr[i - 1];
    part(static_cast<int>(2 * i + 1), Rational(a * p + 1, b), Rational(a * p + M, b));
    if (i < f) {
      const auto [a2, b2] = fr[i];
      part(static_cast<int>(2 * i + 2), Rational(a * p + M + 1, b), Rational(a2 * p - 1, b2));
    }
  }
  for (const auto& [r, c] : s.counts()) {
    const Int v = abs_residue(r, s.modulus());
    PartitionPart* home = nullptr;
    if (v != M + 1) {
      for (auto& candidate : out.parts) {
        if (v < candidate.lo || v > candidate.hi) continue;
        if (home) throw InvariantViolation("overlapping partition intervals at " + std::to_string(v));
        home = &candidate;
      }
    }
    if (!home) throw PartitionGapError(v);
    home->members.add(r, c);
  }
  return out;
}

ZnSequence r_set(const ZnSequence& s, Int i, Int M) {
  const Int p = s.n();
  if (!is_prime(p)) throw Error("R_i requires a prime modulus");
  if (M < 1 || i < 2 || i > p / M) throw Error("R_i requires 2 <= i <= floor(p/M)");
  ZnSequence out(s.modulus());
  for (const auto& [r, c] : s.counts()) {
    if (r == 0) continue;
    const Int v = abs_residue(i * r, s.modulus());
    if (v <= M && std::gcd(v, i) == 1) out.add(r, c);
  }
  return out;
}

std::vector<Int> residue_subset_hit(std::span<const Int> a, Int n, Int m) {
  if (n < 2) throw Error("residue subset search requires n >= 2");
  if (static_cast<Int>(a.size()) != n) throw Error("residue subset search requires |a| == n");
  for (Int x : a)
    if (std::gcd(x, n) != 1) throw Error("hypothesis violated: a_i not coprime to n");

  const Modulus mod(n);
  const Int target = mod.reduce(m);
  const std::size_t usable = target == 0 ? a.size() : a.size() - 1;
  std::vector<WeightedItem> items;
  items.reserve(usable);
  for (std::size_t i = 0; i < usable; ++i) items.push_back({mod.reduce(a[i]), 1});

  SubsetTable table(std::move(items), n, SumKind::modular);
  auto taken = table.lex_smallest(target, n, true);
  if (!taken) throw InvariantViolation("no subset hits residue " + std::to_string(target));
  std::vector<Int> indices;
  for (std::size_t i = 0; i < taken->size(); ++i)
    if ((*taken)[i] == 1) indices.push_back(static_cast<Int>(i) + 1);
  return indices;
}

}  // namespace zindex
