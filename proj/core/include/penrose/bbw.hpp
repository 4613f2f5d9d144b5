#pragma once

#include <optional>
#include <vector>

#include "penrose/bundle.hpp"

namespace penrose {

// One cohomology group: H^degree = irreducible with the given highest
// weight (full A_n dominant weight) and dimension.
struct CohomologyEntry {
  int degree = 0;
  Weight weight;
  Int dim = 0;

  friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

// Sorted by degree.  Empty means all cohomology vanishes.
using CohomologyResult = std::vector<CohomologyEntry>;

// Cohomology of an irreducible bundle over its whole space: add rho, pass
// to the epsilon sequence, sort the full sequence.  A repeated entry kills
// everything; otherwise exactly one group survives, in degree = number of
// inversions.
CohomologyResult cohomology(const Bundle& b);

struct DirectImage {
  int degree = 0;
  Bundle image;

  friend bool operator==(const DirectImage&, const DirectImage&) = default;
};

// Direct images along the fibration src -> dst (crossed(dst) must be a
// subset of crossed(src); same n).  Same recipe with the epsilon sequence
// cut after each node crossed in dst.  nullopt = all images vanish.
std::optional<DirectImage> direct_images(const Bundle& b, const FlagSpace& dst);

}  // namespace penrose
