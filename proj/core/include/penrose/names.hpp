#pragma once

#include <map>
#include <optional>
#include <string>

#include "penrose/bundle.hpp"

namespace penrose {

enum class NameSource { pinned, derived, raw };

// Hermitian display name of a bundle on M(n), e.g. "Λ^{0,1}" with LaTeX
// form "\Lambda^{0,1}".
struct HermitianName {
  std::string text;
  std::string latex;
  NameSource source = NameSource::raw;

  friend bool operator==(const HermitianName&, const HermitianName&) = default;
};

// The fixed name table for M(n) (nonempty for n = 2, 3): the classical
// Dolbeault and primitive-form names.  Entries here are never overridden.
const std::map<Weight, HermitianName, EpsLexGreater>& name_table(int n);

// Table lookup, then a smallest-total-size search over Schur functors
// S^lambda of the (0,1)-forms twisted by S^mu of the (1,0)-forms, then the
// raw label as a string.
HermitianName hermitian_name(const Bundle& b);

// Dynkin label of S^lambda applied to the bundle with the given label
// (Cartan leading term: lambda paired against the sorted weight list).
std::optional<Weight> schur_label(const Bundle& b, const std::vector<Int>& lambda);

}  // namespace penrose
