#pragma once

#include <string>
#include <vector>

#include "penrose/weight.hpp"

namespace penrose {

// Generalized flag manifold of SL(n+1), encoded by the set of crossed
// nodes of the A_n diagram.  The three spaces of the twistor fibration
// carry distinct tags: F and G share the crossed set {1,2} but are kept
// apart so that pullback along the fibration is a typed map F -> G.
enum class SpaceKind { F, G, M, Generic };

struct FlagSpace {
  SpaceKind kind = SpaceKind::Generic;
  int n = 0;
  std::vector<int> crossed;  // strictly increasing, values in [1, n]

  friend bool operator==(const FlagSpace&, const FlagSpace&) = default;
};

// The fibered correspondence space F(n) and its intermediate quotient G(n),
// both crossed {1,2}; requires n >= 2.
FlagSpace space_F(int n);
FlagSpace space_G(int n);
// Projective space M(n) = CP_n, crossed {1}; requires n >= 1.
FlagSpace space_M(int n);
// Any other crossed-node set; requires a nonempty subset of [1, n].
FlagSpace space_generic(int n, std::vector<int> crossed);

bool is_crossed(const FlagSpace& s, int node);

// Maximal runs of consecutive uncrossed nodes, as [first, last] pairs.
std::vector<std::pair<int, int>> uncrossed_blocks(const FlagSpace& s);

// Number of positive roots of the Levi factor (inversions available to
// sort_and_count when the crossed nodes cut the epsilon sequence).
int levi_positive_roots(const FlagSpace& s);

// "F(3)", "M(2)", generic spaces as "X(4;1,3)".
std::string format_space(const FlagSpace& s);
// Accepts "F", "G", "M" with separate n, as used by the CLI.
FlagSpace parse_space(const std::string& letter, int n);

}  // namespace penrose
