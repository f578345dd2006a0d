#pragma once

// Exhaustive computation of t(n) (multisets) and T(n) (distinct-element
// subsets): the least length at which every candidate over Z_n contains a
// subsequence of index n.

#include <optional>
#include <string>

#include "zindex/zn_core.hpp"

namespace zindex {

enum class ExtremalKind { multiset, distinct };

enum class ExtremalStatus {
  exact,
  exceeds_cap,  // value is only a lower bound
};

struct ExtremalOptions {
  std::optional<Int> cap;        // longest length searched; default 2n
  bool symmetry_reduction = true;  // enumerate one representative per unit orbit
  Int budget = 200'000'000;      // max candidates enumerated at one length
  unsigned parallelism = 1;
};

struct ExtremalReport {
  Int n;
  ExtremalKind kind;
  ExtremalStatus status;
  Int value;  // t(n) / T(n) when exact, else a lower bound
  std::optional<ZnSequence> witness;  // length value-1, no index-n subsequence
  Int search_space_size = 0;   // candidates examined over all lengths
  Int seeded_length = 0;       // longest verified counterexample taken from known constructions
  std::string note;
};

/// t(n). Known counterexamples (1^{n-1}, and the 4k+2 family) seed the lower
/// bound; each longer length is then enumerated without the zero residue,
/// since |0|_n = n makes (0) an index-n subsequence on its own.
ExtremalReport compute_t(Int n, const ExtremalOptions& options = {});

/// T(n) over subsets of distinct elements.
ExtremalReport compute_T_distinct(Int n, const ExtremalOptions& options = {});

/// True iff `values` (sorted, nonzero) is the lexicographically least member
/// of its orbit under multiplication by units.
bool is_orbit_representative(std::span<const Int> sorted_values, Modulus mod);

std::string_view to_string(ExtremalKind kind);
std::string_view to_string(ExtremalStatus status);

}  // namespace zindex
