#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "penrose/ints.hpp"

namespace penrose {

// Integral weight of A_n in the fundamental-weight (Dynkin label) basis.
// rank() == n, one coordinate per node of the Dynkin diagram.
using Weight = std::vector<Int>;

// The same weight written in the epsilon basis: n+1 entries, normalized so
// the last entry is zero.  a_i = e_i - e_{i+1}.
using EpsilonSeq = std::vector<Int>;

inline int rank_of(const Weight& w) { return static_cast<int>(w.size()); }

EpsilonSeq to_epsilon(const Weight& w);
// Accepts any integer sequence; the result depends only on consecutive
// differences, so unnormalized sequences are fine.
Weight from_epsilon(const EpsilonSeq& e);

// Half the sum of positive roots: (1,...,1).
Weight rho(int n);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);

// Unshifted action of the simple reflection s_i (1 <= i <= n): swaps
// epsilon entries i and i+1.
Weight simple_reflect(int i, const Weight& w);

// Epsilon-lexicographic total order on weights of equal rank.
bool eps_lex_less(const Weight& a, const Weight& b);

// Descending epsilon-lex; the canonical display and storage order.
struct EpsLexGreater {
  bool operator()(const Weight& a, const Weight& b) const { return eps_lex_less(b, a); }
};

// Sorts an epsilon sequence into strictly decreasing order within each
// segment, counting the inversions consumed.  Segments are delimited by
// `cuts`: a strictly increasing list of positions j (1-based, 1 <= j <= n)
// meaning "cut between entries j and j+1".  Empty cuts = one full segment.
// `singular` is set when two entries within a segment coincide; `sorted`
// and `inversions` are still filled (stable sort) but carry no meaning.
struct SortResult {
  EpsilonSeq sorted;
  int inversions = 0;
  bool singular = false;
};
SortResult sort_and_count(const EpsilonSeq& e, const std::vector<int>& cuts);

// Dimension of the irreducible representation of sl(n+1) with highest
// weight w (all labels >= 0; throws NotLeviDominant otherwise).
Int weyl_dim(int n, const Weight& w);

// "a,b,c" with no whitespace; parse accepts optional spaces after commas.
std::string format_weight(const Weight& w);
// "(a,b,c)"; the display form used inside sums.
std::string format_weight_parens(const Weight& w);
Weight parse_weight(const std::string& text);

}  // namespace penrose
