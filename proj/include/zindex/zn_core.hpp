#pragma once

// Residue and sequence algebra over the cyclic group Z_n.
//
// Sequences are unordered multisets stored as residue -> multiplicity,
// sorted by residue. |x|_n denotes the least positive integer in the class
// of x, so the zero class normalizes to n.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zindex {

using Int = std::int64_t;

/// Precondition or usage error raised by any library operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Never expected on valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed sequence literal; `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::string_view message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Modulus {
 public:
  explicit Modulus(Int n);

  Int value() const noexcept { return n_; }
  Int reduce(Int x) const noexcept {
    Int r = x % n_;
    return r < 0 ? r + n_ : r;
  }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  Int n_;
};

struct Residue {
  Residue(Int x, Modulus mod) : value(mod.reduce(x)), modulus(mod) {}

  Int value;
  Modulus modulus;
};

/// Finite multiset of residues mod n.
class ZnSequence {
 public:
  using Counts = std::map<Int, Int>;

  explicit ZnSequence(Modulus mod) : modulus_(mod) {}
  ZnSequence(Modulus mod, std::span<const Int> values);
  ZnSequence(Modulus mod, std::initializer_list<Int> values)
      : ZnSequence(mod, std::span<const Int>(values.begin(), values.size())) {}
  /// Keys are reduced mod n; zero multiplicities are dropped, negative ones rejected.
  ZnSequence(Modulus mod, const Counts& counts);

  Modulus modulus() const noexcept { return modulus_; }
  Int n() const noexcept { return modulus_.value(); }
  const Counts& counts() const noexcept { return counts_; }
  Int length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  Int multiplicity(Int residue) const;

  /// Terms expanded in ascending residue order.
  std::vector<Int> values() const;

  void add(Int x, Int copies = 1);

  /// Multiset inclusion; both sides must share the modulus.
  bool contains(const ZnSequence& sub) const;

  friend bool operator==(const ZnSequence&, const ZnSequence&) = default;

 private:
  Modulus modulus_;
  Counts counts_;
  Int length_ = 0;
};

/// |S|_n: values in [1, n], ascending.
struct NormalizedSequence {
  Modulus modulus;
  std::vector<Int> values;
};

Int abs_residue(Residue x);
inline Int abs_residue(Int x, Modulus mod) { return abs_residue(Residue(x, mod)); }

NormalizedSequence normalize(const ZnSequence& s);
Int sigma(const NormalizedSequence& t);
ZnSequence scale(Int m, const ZnSequence& s);
Int repetition(const ZnSequence& s);

/// All m in [1, n-1] coprime to n, ascending.
std::vector<Int> coprime_multipliers(Modulus mod);

bool is_zero_sum(const ZnSequence& s);
/// Throws Error("empty sequence") on empty input.
bool is_minimal_zero_sum(const ZnSequence& s);

// Sequence literal: `<term>(ws <term>)* "mod" <n>` with `<term>` = `<int>` or
// `<int>^<mult>`. Integers are reduced mod n. "mod n" alone is the empty sequence.
ZnSequence parse_sequence(std::string_view literal);
std::string to_literal(const ZnSequence& s);

// Small number-theory helpers shared across modules.
Int euler_phi(Int n);
bool is_prime(Int n);
Int next_prime(Int n);  // least prime > n
std::vector<Int> primes_in(Int lo, Int hi);

}  // namespace zindex
