#include "penrose/bbw.hpp"

#include <algorithm>

#include "penrose/errors.hpp"

namespace penrose {

CohomologyResult cohomology(const Bundle& b) {
  validate(b.space, b.label);
  const int n = b.space.n;
  const EpsilonSeq shifted = to_epsilon(add(b.label, rho(n)));
  const SortResult sorted = sort_and_count(shifted, {});
  if (sorted.singular) return {};
  CohomologyEntry entry;
  entry.degree = sorted.inversions;
  entry.weight = sub(from_epsilon(sorted.sorted), rho(n));
  entry.dim = weyl_dim(n, entry.weight);
  return {entry};
}

std::optional<DirectImage> direct_images(const Bundle& b, const FlagSpace& dst) {
  validate(b.space, b.label);
  if (dst.n != b.space.n) throw InvalidArgument("direct images need matching rank");
  if (!std::includes(b.space.crossed.begin(), b.space.crossed.end(), dst.crossed.begin(),
                     dst.crossed.end()))
    throw InvalidArgument("direct images need crossed(" + format_space(dst) +
                          ") inside crossed(" + format_space(b.space) + ")");

  const int n = b.space.n;
  const EpsilonSeq shifted = to_epsilon(add(b.label, rho(n)));
  const SortResult sorted = sort_and_count(shifted, dst.crossed);
  if (sorted.singular) return std::nullopt;
  DirectImage di;
  di.degree = sorted.inversions;
  di.image = make_bundle(dst, sub(from_epsilon(sorted.sorted), rho(n)));
  return di;
}

}  // namespace penrose
