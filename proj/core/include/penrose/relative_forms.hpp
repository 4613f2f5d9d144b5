#pragma once

#include <vector>

#include "penrose/bundle.hpp"

namespace penrose {

// Bundle of relative 1-forms of the fibration F(n) -> M(n), pushed to
// G(n), decomposed into irreducibles.  Requires n >= 2.
BundleSum relative_cotangent(int n);

// p-th exterior power of the relative cotangent bundle, on G(n).
// p = 0 gives the trivial line bundle; p > n gives the empty sum.
BundleSum relative_forms(int n, int p);

// Pullback along the fibration F(n) -> G(n): the typed change of
// convention sending the label through the unshifted first reflection.
Bundle pullback(const Bundle& b);
BundleSum pullback(const BundleSum& s);

// Holomorphic tangent bundle of a flag space, graded by the nilradical
// filtration; grade k (1-based) collects the positive roots crossing
// exactly k crossed nodes.  Each grade is decomposed into irreducibles.
std::vector<BundleSum> tangent_series(const FlagSpace& s);

}  // namespace penrose
