#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "penrose/bbw.hpp"
#include "penrose/bundle.hpp"

namespace penrose {

// Input to the transform: a formal graded bundle on F(n).  Grade k of the
// input contributes at homogeneity k; most inputs have a single grade.
struct GradedInput {
  int n = 0;
  std::vector<BundleSum> grades;  // each on F(n), grade k at index k-1
  bool conjectural = false;

  friend bool operator==(const GradedInput&, const GradedInput&) = default;
};

GradedInput graded_from_bundle(const Bundle& b);  // b on F(n)
GradedInput graded_trivial(int n);
// The graded tangent series of F(n) (the deformation-theory input).
GradedInput graded_theta(int n);
// The two-step graded module conjectured to govern Yang-Mills fields; n=3.
GradedInput graded_conjecture();

// First page of the pushdown spectral sequence: cell (p, q) holds the
// degree-q direct images on M(n) of (relative p-forms) tensor (pullback of
// the input).  Only nonempty cells are stored.
struct E1Page {
  int n = 0;
  FlagSpace base;  // M(n)
  std::map<std::pair<int, int>, BundleSum> cells;
  CohomologyResult cohomology;
  bool cohomology_flagged = false;
  bool conjectural = false;

  friend bool operator==(const E1Page&, const E1Page&) = default;
};

E1Page e1_page(const GradedInput& input);

enum class ArrowType { dbar, d, mixed };

// Differential operator between a term of column col and a term of column
// col+1, of the given order.  type reflects how the node-1 charge moves:
// an order-k operator shifting it by +k is antiholomorphic (dbar), by -2k
// holomorphic (d), anything else mixed.
struct Arrow {
  int col = 0;
  Weight src;
  Weight dst;
  int order = 1;
  ArrowType type = ArrowType::dbar;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A term removed by cancellation, recorded once per column it left.
struct CancelledTerm {
  int col = 0;
  Weight label;
  Int mult = 0;

  friend bool operator==(const CancelledTerm&, const CancelledTerm&) = default;
};

// Complex of differential operators on M(n) with attached cohomology.
struct Complex {
  FlagSpace space;  // M(n)
  std::vector<BundleSum> columns;
  std::vector<Arrow> arrows;
  CohomologyResult cohomology;
  bool cohomology_flagged = false;
  bool conjectural = false;
  std::vector<CancelledTerm> cancelled;  // filled by cancel()

  friend bool operator==(const Complex&, const Complex&) = default;
};

// Thrown when a q > 0 cell is nonempty; carries the page so callers can
// report it instead.
class NotCollapsed : public Error {
 public:
  NotCollapsed(const std::string& what, E1Page page)
      : Error(what), page_(std::move(page)) {}
  const E1Page& page() const { return page_; }

 private:
  E1Page page_;
};

// Reads the q = 0 row off a collapsed page as a complex, emitting an arrow
// for every adjacent pair of terms that admits an invariant operator of
// order 1.  Throws NotCollapsed otherwise.
Complex to_complex(const E1Page& page);

// Gaussian elimination of identity operators: repeatedly removes a weight
// present in two adjacent columns (minimum multiplicity), composing the
// arrows through the removed summand (orders add).  Idempotent.
Complex cancel(const Complex& c);

// Full pipeline.  On collapse failure `complex` is empty and `page` holds
// the uncollapsed E1 page.  with_cancel=false keeps the raw q=0 row but
// still records in `cancelled` what cancel() would remove.
struct TransformResult {
  std::optional<Complex> complex;
  std::optional<E1Page> page;
};
TransformResult transform(const GradedInput& input, bool with_cancel = true);

// BBW cohomology of the input itself, one grade at a time, concatenated
// when the degree sets are pairwise disjoint across grades; otherwise the
// flag is set (entries are still listed, sorted by degree).
std::pair<CohomologyResult, bool> assemble_cohomology(const GradedInput& input);

}  // namespace penrose
