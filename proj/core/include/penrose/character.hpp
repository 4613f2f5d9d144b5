#pragma once

#include <map>

#include "penrose/bundle.hpp"

namespace penrose {

// Weight multiset of a (virtual) Levi representation.  Keys are full A_n
// weights in Dynkin coordinates; values are multiplicities.
struct LeviCharacter {
  FlagSpace space;
  std::map<Weight, Int, EpsLexGreater> mult;

  friend bool operator==(const LeviCharacter&, const LeviCharacter&) = default;
};

Int total_dim(const LeviCharacter& c);
bool is_zero(const LeviCharacter& c);

// Weight multiset of the irreducible Levi representation with highest
// weight b.label (blockwise Gelfand-Tsetlin enumeration; crossed
// coordinates ride along).
LeviCharacter character_of(const Bundle& b);
LeviCharacter character_of(const BundleSum& s);

LeviCharacter tensor(const LeviCharacter& a, const LeviCharacter& b);
LeviCharacter exterior_power(const LeviCharacter& c, int p);

// Inverse of character_of: greedy peeling from the epsilon-lex-maximal
// Levi-dominant weight.  Throws PeelingFailure when the multiset is not a
// nonnegative combination of irreducible characters.
BundleSum decompose(const LeviCharacter& c);

// Convenience compositions (tensor/exterior power of actual bundles).
BundleSum tensor(const BundleSum& a, const BundleSum& b);
BundleSum exterior_power(const BundleSum& s, int p);

}  // namespace penrose
