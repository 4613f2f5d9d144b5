#pragma once

#include <string>
#include <vector>

#include "penrose/flag_space.hpp"
#include "penrose/weight.hpp"

namespace penrose {

// Irreducible homogeneous vector bundle, named by the Dynkin labels of the
// inducing representation (sign convention: the label is minus the lowest
// weight, so line-bundle twists sit on crossed nodes with their usual sign).
struct Bundle {
  FlagSpace space;
  Weight label;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

// Throws NotLeviDominant(node) unless label is >= 0 on every uncrossed node
// (rank mismatches throw InvalidArgument).
void validate(const FlagSpace& space, const Weight& label);
Bundle make_bundle(const FlagSpace& space, const Weight& label);

// Fiber dimension: product of Weyl dimensions over the uncrossed blocks.
Int rank(const Bundle& b);

// Formal nonnegative-integer combination of irreducible bundles on one
// space.  Terms are kept sorted in descending epsilon-lex order with
// positive multiplicities and distinct labels.
struct BundleSum {
  struct Term {
    Weight label;
    Int mult = 1;
    friend bool operator==(const Term&, const Term&) = default;
  };

  FlagSpace space;
  std::vector<Term> terms;

  friend bool operator==(const BundleSum&, const BundleSum&) = default;
};

BundleSum empty_sum(const FlagSpace& space);
BundleSum sum_of(const Bundle& b);
// Canonicalizes: merges duplicate labels, drops zero multiplicities, sorts.
// Validates every label; negative multiplicities throw InvalidArgument.
BundleSum make_sum(const FlagSpace& space, std::vector<BundleSum::Term> terms);

void add_term(BundleSum& s, const Weight& label, Int mult = 1);
BundleSum merge(const BundleSum& a, const BundleSum& b);
Int rank(const BundleSum& s);
Int total_multiplicity(const BundleSum& s);
bool is_empty(const BundleSum& s);

// "F:3:-2,3,0"
std::string format_bundle(const Bundle& b);
Bundle parse_bundle(const std::string& text);

// "(2,1,0) (+) (-1,1,1)" rendered with a real direct-sum sign; multiplicity
// shown as a prefix, e.g. "2*(0,2,0)".  Empty sum renders as "0".
std::string format_sum(const BundleSum& s);

}  // namespace penrose
