#pragma once

// Farey-interval fraction sets F[1/k, (k-1)/k], the interval partition of a
// sequence over Z_p they induce, the R_i filters, and the subset-residue
// search. All interval arithmetic is exact.

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "zindex/zn_core.hpp"

namespace zindex {

using Rational = boost::rational<Int>;

std::string to_string(const Rational& q);

struct FareyFraction {
  Int a;
  Int b;

  Rational value() const { return {a, b}; }
  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

struct FareySet {
  Int k;
  std::vector<FareyFraction> fractions;  // strictly increasing

  std::size_t f() const noexcept { return fractions.size(); }
};

enum class Relation { less, less_equal, equal };

/// One checked inequality or identity: `lhs relation rhs`.
struct BoundEvaluation {
  std::string name;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::less_equal;
  bool holds = false;
  std::map<std::string, Rational> parameters;
};

BoundEvaluation make_evaluation(std::string name, Rational lhs, Relation rel, Rational rhs,
                                std::map<std::string, Rational> parameters = {});
std::string_view to_string(Relation rel);

/// Reduced a/b with 2 <= b <= k and 1/k <= a/b <= (k-1)/k, ascending. k >= 2.
FareySet farey_set(Int k);

/// For each adjacent pair a/b < c/d: "denominator sum" (k+1 <= b+d) and
/// "determinant" (bc-ad == 1). Empty for f < 2.
std::vector<BoundEvaluation> check_adjacency(const FareySet& set);

/// Raised when a term lies in no part of the partition.
class PartitionGapError : public Error {
 public:
  explicit PartitionGapError(Int value);
  Int value() const noexcept { return value_; }

 private:
  Int value_;
};

struct PartitionPart {
  int index;  // j in S_j, 1-based
  Rational lo;
  Rational hi;
  ZnSequence members;
};

struct PartitionResult {
  Int p;
  Int M;
  Int k;
  FareySet farey;
  std::vector<PartitionPart> parts;  // 2f+1 parts, S_1 first
};

/// Splits S (over prime p) by |x|_p into S_1 = [1,M], S_2 = [M+2,(p-1)/b_1],
/// S_{2i+1} = [(a_i p+1)/b_i, (a_i p+M)/b_i] and
/// S_{2i+2} = [(a_i p+M+1)/b_i, (a_{i+1} p-1)/b_{i+1}] with k = floor(p/M).
/// The value M+1 and anything outside every interval raise PartitionGapError.
PartitionResult partition_sequence(const ZnSequence& s, Int M);

/// R_i = { x | S : 1 <= |ix|_p <= M, gcd(|ix|_p, i) = 1 }.
ZnSequence r_set(const ZnSequence& s, Int i, Int M);

/// Nonempty I (1-based, ascending, lexicographically smallest) with
/// sum_{i in I} a_i == m (mod n); I avoids index n when m != 0 (mod n).
/// Requires |a| == n >= 2 and every a_i coprime to n.
std::vector<Int> residue_subset_hit(std::span<const Int> a, Int n, Int m);

}  // namespace zindex
