#include "zindex/zn_core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "zindex/subset_table.hpp"

namespace zindex {

ParseError::ParseError(std::string_view message, std::size_t position)
    : Error(std::string(message) + " at position " + std::to_string(position)),
      position_(position) {}

Modulus::Modulus(Int n) : n_(n) {
  if (n < 2) throw Error("modulus must be at least 2, got " + std::to_string(n));
}

ZnSequence::ZnSequence(Modulus mod, std::span<const Int> values) : modulus_(mod) {
  for (Int v : values) add(v);
}

ZnSequence::ZnSequence(Modulus mod, const Counts& counts) : modulus_(mod) {
  for (const auto& [r, c] : counts) add(r, c);
}

Int ZnSequence::multiplicity(Int residue) const {
  auto it = counts_.find(modulus_.reduce(residue));
  return it == counts_.end() ? 0 : it->second;
}

std::vector<Int> ZnSequence::values() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (const auto& [r, c] : counts_) out.insert(out.end(), static_cast<std::size_t>(c), r);
  return out;
}

void ZnSequence::add(Int x, Int copies) {
  if (copies < 0) throw Error("negative multiplicity");
  if (copies == 0) return;
  counts_[modulus_.reduce(x)] += copies;
  length_ += copies;
}

bool ZnSequence::contains(const ZnSequence& sub) const {
  if (sub.modulus_ != modulus_) return false;
  return std::all_of(sub.counts_.begin(), sub.counts_.end(),
                     [&](const auto& rc) { return multiplicity(rc.first) >= rc.second; });
}

Int abs_residue(Residue x) { return x.value == 0 ? x.modulus.value() : x.value; }

NormalizedSequence normalize(const ZnSequence& s) {
  NormalizedSequence out{s.modulus(), {}};
  out.values.reserve(static_cast<std::size_t>(s.length()));
  for (const auto& [r, c] : s.counts())
    out.values.insert(out.values.end(), static_cast<std::size_t>(c), abs_residue(r, s.modulus()));
  std::sort(out.values.begin(), out.values.end());
  return out;
}

Int sigma(const NormalizedSequence& t) {
  return std::accumulate(t.values.begin(), t.values.end(), Int{0});
}

ZnSequence scale(Int m, const ZnSequence& s) {
  ZnSequence out(s.modulus());
  const Modulus mod = s.modulus();
  for (const auto& [r, c] : s.counts()) out.add(mod.reduce(mod.reduce(m) * r), c);
  return out;
}

Int repetition(const ZnSequence& s) {
  Int h = 0;
  for (const auto& [r, c] : s.counts()) h = std::max(h, c);
  return h;
}

std::vector<Int> coprime_multipliers(Modulus mod) {
  std::vector<Int> out;
  for (Int m = 1; m < mod.value(); ++m)
    if (std::gcd(m, mod.value()) == 1) out.push_back(m);
  return out;
}

bool is_zero_sum(const ZnSequence& s) {
  Int total = 0;
  for (const auto& [r, c] : s.counts()) total = s.modulus().reduce(total + r * c);
  return total == 0;
}

bool is_minimal_zero_sum(const ZnSequence& s) {
  if (s.empty()) throw Error("empty sequence");
  if (!is_zero_sum(s)) return false;
  // A proper zero-sum T leaves a zero-sum complement, so minimality is
  // exactly "the shortest nonempty zero-sum sub-multiset is S itself".
  std::vector<WeightedItem> items;
  for (const auto& [r, c] : s.counts()) items.push_back({r, c});
  SubsetTable table(std::move(items), s.n(), SumKind::modular);
  return table.min_card_nonempty(0) == s.length();
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  ZnSequence parse() {
    std::vector<std::pair<Int, Int>> terms;
    while (true) {
      skip_ws();
      if (at_end()) throw ParseError("expected term or \"mod\"", pos_);
      if (text_.substr(pos_, 3) == "mod" && (pos_ + 3 == text_.size() || std::isspace(
                                                 static_cast<unsigned char>(text_[pos_ + 3])))) {
        pos_ += 3;
        break;
      }
      const Int value = parse_int("term");
      Int mult = 1;
      if (!at_end() && text_[pos_] == '^') {
        ++pos_;
        const std::size_t at = pos_;
        mult = parse_int("multiplicity");
        if (mult < 1) throw ParseError("multiplicity must be at least 1", at);
      }
      if (!at_end() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
      terms.emplace_back(value, mult);
    }
    skip_ws();
    const std::size_t at = pos_;
    const Int n = parse_int("modulus");
    skip_ws();
    if (!at_end()) throw ParseError("trailing input", pos_);
    if (n < 2) throw ParseError("modulus must be at least 2", at);

    ZnSequence out{Modulus(n)};
    for (const auto& [v, c] : terms) out.add(v, c);
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  Int parse_int(std::string_view what) {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    Int value = 0;
    const char* first = text_.data() + start + (start < text_.size() && text_[start] == '+');
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end || end == start)
      throw ParseError("expected integer " + std::string(what), start);
    pos_ = end;
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ZnSequence parse_sequence(std::string_view literal) { return LiteralParser(literal).parse(); }

std::string to_literal(const ZnSequence& s) {
  std::ostringstream out;
  for (const auto& [r, c] : s.counts()) {
    out << r;
    if (c != 1) out << '^' << c;
    out << ' ';
  }
  out << "mod " << s.n();
  return out.str();
}

Int euler_phi(Int n) {
  Int result = n;
  for (Int q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

Int next_prime(Int n) {
  Int q = std::max<Int>(n + 1, 2);
  while (!is_prime(q)) ++q;
  return q;
}

std::vector<Int> primes_in(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int q = std::max<Int>(lo, 2); q <= hi; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

}  // namespace zindex
