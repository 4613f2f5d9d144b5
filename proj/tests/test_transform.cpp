#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "penrose/errors.hpp"
#include "penrose/transform.hpp"

using namespace penrose;

namespace {

BundleSum msum(std::vector<BundleSum::Term> terms, int n = 3) {
  return make_sum(space_M(n), std::move(terms));
}

const BundleSum* cell(const E1Page& page, int p, int q) {
  auto it = page.cells.find({p, q});
  return it == page.cells.end() ? nullptr : &it->second;
}

Int alternating_rank(const Complex& c) {
  Int sum = 0;
  Int sign = 1;
  for (const auto& col : c.columns) {
    sum += sign * rank(col);
    sign = -sign;
  }
  return sum;
}

bool has_arrow(const Complex& c, int col, const Weight& src, const Weight& dst, int order,
               ArrowType type) {
  for (const auto& a : c.arrows)
    if (a.col == col && a.src == src && a.dst == dst && a.order == order && a.type == type)
      return true;
  return false;
}

// Column-level reference for cancellation: strike shared weights between
// adjacent columns one unit at a time, in random order, until none remain.
std::vector<BundleSum> strike_randomly(std::vector<BundleSum> cols, std::mt19937& rng) {
  for (;;) {
    std::vector<std::pair<int, Weight>> shared;
    for (int p = 0; p + 1 < static_cast<int>(cols.size()); ++p)
      for (const auto& t : cols[p].terms)
        for (const auto& u : cols[p + 1].terms)
          if (t.label == u.label) shared.emplace_back(p, t.label);
    if (shared.empty()) return cols;
    const auto& pick = shared[std::uniform_int_distribution<std::size_t>(
        0, shared.size() - 1)(rng)];
    for (int side = 0; side < 2; ++side) {
      BundleSum& col = cols[pick.first + side];
      for (auto it = col.terms.begin(); it != col.terms.end(); ++it)
        if (it->label == pick.second) {
          if (--it->mult == 0) col.terms.erase(it);
          break;
        }
    }
  }
}

}  // namespace

TEST_CASE("graded input constructors") {
  const GradedInput t = graded_trivial(3);
  CHECK(t.n == 3);
  REQUIRE(t.grades.size() == 1);
  CHECK(t.grades[0] == sum_of(make_bundle(space_F(3), {0, 0, 0})));
  CHECK(!t.conjectural);

  const GradedInput theta = graded_theta(3);
  REQUIRE(theta.grades.size() == 2);
  CHECK(theta.grades[0] == make_sum(space_F(3), {{{2, -1, 0}, 1}, {{-1, 1, 1}, 1}}));
  CHECK(theta.grades[1] == sum_of(make_bundle(space_F(3), {1, 0, 1})));

  const GradedInput conj = graded_conjecture();
  CHECK(conj.conjectural);
  REQUIRE(conj.grades.size() == 2);
  CHECK(conj.grades[0] == make_sum(space_F(3), {{{2, -1, 0}, 1}, {{-1, 1, 1}, 1}}));
  CHECK(conj.grades[1] == make_sum(space_F(3), {{{1, 0, 1}, 1}, {{-2, 3, 0}, 1}}));

  CHECK_THROWS_AS(graded_from_bundle(make_bundle(space_G(3), {0, 0, 0})), InvalidArgument);
  CHECK_THROWS_AS(e1_page(GradedInput{3, {}, false}), InvalidArgument);
}

TEST_CASE("pushdown page of the trivial bundle") {
  const E1Page page = e1_page(graded_trivial(3));
  CHECK(page.base == space_M(3));
  REQUIRE(page.cells.size() == 4);
  REQUIRE(cell(page, 0, 0));
  REQUIRE(cell(page, 1, 0));
  REQUIRE(cell(page, 2, 0));
  REQUIRE(cell(page, 3, 0));
  CHECK(*cell(page, 0, 0) == msum({{{0, 0, 0}, 1}}));
  CHECK(*cell(page, 1, 0) == msum({{{1, 0, 1}, 1}, {{-2, 1, 0}, 1}}));
  CHECK(*cell(page, 2, 0) == msum({{{2, 1, 0}, 1}, {{-1, 1, 1}, 1}}));
  CHECK(*cell(page, 3, 0) == msum({{{0, 2, 0}, 1}}));
  for (const auto& [pq, terms] : page.cells) CHECK(pq.second == 0);
  REQUIRE(page.cohomology.size() == 1);
  CHECK(page.cohomology[0] == CohomologyEntry{0, {0, 0, 0}, 1});
  CHECK(!page.cohomology_flagged);
}

TEST_CASE("pushdown pages of single irreducibles") {
  SUBCASE("first twisted input") {
    const E1Page page = e1_page(graded_from_bundle(make_bundle(space_F(3), {2, -1, 0})));
    REQUIRE(page.cells.size() == 4);
    CHECK(*cell(page, 0, 0) == msum({{{-2, 1, 0}, 1}}));
    CHECK(*cell(page, 1, 0) == msum({{{-1, 1, 1}, 1}, {{-4, 2, 0}, 1}}));
    CHECK(*cell(page, 2, 0) == msum({{{0, 2, 0}, 1}, {{-3, 2, 1}, 1}}));
    CHECK(*cell(page, 3, 0) == msum({{{-2, 3, 0}, 1}}));
    CHECK(page.cohomology.empty());
  }
  SUBCASE("second twisted input") {
    const E1Page page = e1_page(graded_from_bundle(make_bundle(space_F(3), {-1, 1, 1})));
    REQUIRE(page.cells.size() == 4);
    CHECK(*cell(page, 0, 0) == msum({{{1, 0, 1}, 1}}));
    CHECK(*cell(page, 1, 0) ==
          msum({{{2, 0, 2}, 1}, {{2, 1, 0}, 1}, {{-1, 1, 1}, 1}}));
    CHECK(*cell(page, 2, 0) ==
          msum({{{3, 1, 1}, 1}, {{0, 1, 2}, 1}, {{0, 2, 0}, 1}}));
    CHECK(*cell(page, 3, 0) == msum({{{1, 2, 1}, 1}}));
    CHECK(page.cohomology.empty());
  }
  SUBCASE("adjoint-type input") {
    const E1Page page = e1_page(graded_from_bundle(make_bundle(space_F(3), {1, 0, 1})));
    REQUIRE(page.cells.size() == 4);
    CHECK(*cell(page, 0, 0) == msum({{{-1, 1, 1}, 1}}));
    CHECK(*cell(page, 1, 0) ==
          msum({{{0, 1, 2}, 1}, {{0, 2, 0}, 1}, {{-3, 2, 1}, 1}}));
    CHECK(*cell(page, 2, 0) ==
          msum({{{1, 2, 1}, 1}, {{-2, 2, 2}, 1}, {{-2, 3, 0}, 1}}));
    CHECK(*cell(page, 3, 0) == msum({{{-1, 3, 1}, 1}}));
    REQUIRE(page.cohomology.size() == 1);
    CHECK(page.cohomology[0] == CohomologyEntry{0, {1, 0, 1}, 15});
  }
}

TEST_CASE("page cells merge additively over grades") {
  const GradedInput theta = graded_theta(3);
  E1Page merged;
  bool first = true;
  for (const auto& grade : theta.grades) {
    GradedInput single{3, {grade}, false};
    const E1Page part = e1_page(single);
    if (first) {
      merged = part;
      first = false;
    } else {
      for (const auto& [pq, terms] : part.cells) {
        auto [it, inserted] = merged.cells.emplace(pq, terms);
        if (!inserted) it->second = merge(it->second, terms);
      }
    }
  }
  CHECK(e1_page(theta).cells == merged.cells);
}

TEST_CASE("a page that does not collapse is reported, not flattened") {
  const GradedInput deep = graded_from_bundle(make_bundle(space_F(3), {0, -4, 0}));
  const E1Page page = e1_page(deep);
  REQUIRE(cell(page, 0, 2));
  CHECK(*cell(page, 0, 2) == msum({{{-3, 0, 1}, 1}}));
  CHECK_THROWS_AS(to_complex(page), NotCollapsed);
  try {
    to_complex(page);
  } catch (const NotCollapsed& e) {
    CHECK(e.page() == page);
  }

  const TransformResult result = transform(deep);
  CHECK(!result.complex.has_value());
  REQUIRE(result.page.has_value());
  CHECK(*result.page == page);
}

TEST_CASE("collapsed complex for the trivial bundle") {
  const TransformResult result = transform(graded_trivial(3));
  REQUIRE(result.complex.has_value());
  const Complex& c = *result.complex;

  REQUIRE(c.columns.size() == 4);
  CHECK(c.columns[0] == msum({{{0, 0, 0}, 1}}));
  CHECK(c.columns[1] == msum({{{1, 0, 1}, 1}, {{-2, 1, 0}, 1}}));
  CHECK(c.columns[2] == msum({{{2, 1, 0}, 1}, {{-1, 1, 1}, 1}}));
  CHECK(c.columns[3] == msum({{{0, 2, 0}, 1}}));

  CHECK(rank(c.columns[0]) == 1);
  CHECK(rank(c.columns[1]) == 6);
  CHECK(rank(c.columns[2]) == 11);
  CHECK(rank(c.columns[3]) == 6);

  // nothing cancels, so the raw arrows survive untouched
  CHECK(c.cancelled.empty());
  REQUIRE(c.arrows.size() == 7);
  CHECK(has_arrow(c, 0, {0, 0, 0}, {1, 0, 1}, 1, ArrowType::dbar));
  CHECK(has_arrow(c, 0, {0, 0, 0}, {-2, 1, 0}, 1, ArrowType::d));
  CHECK(has_arrow(c, 1, {1, 0, 1}, {2, 1, 0}, 1, ArrowType::dbar));
  CHECK(has_arrow(c, 1, {1, 0, 1}, {-1, 1, 1}, 1, ArrowType::d));
  CHECK(has_arrow(c, 1, {-2, 1, 0}, {-1, 1, 1}, 1, ArrowType::dbar));
  CHECK(has_arrow(c, 2, {2, 1, 0}, {0, 2, 0}, 1, ArrowType::d));
  CHECK(has_arrow(c, 2, {-1, 1, 1}, {0, 2, 0}, 1, ArrowType::dbar));

  REQUIRE(c.cohomology.size() == 1);
  CHECK(c.cohomology[0] == CohomologyEntry{0, {0, 0, 0}, 1});
}

TEST_CASE("collapsed complex at n = 2") {
  const TransformResult result = transform(graded_trivial(2));
  REQUIRE(result.complex.has_value());
  const Complex& c = *result.complex;
  REQUIRE(c.columns.size() == 3);
  CHECK(c.columns[0] == msum({{{0, 0}, 1}}, 2));
  CHECK(c.columns[1] == msum({{{1, 1}, 1}, {{-2, 1}, 1}}, 2));
  CHECK(c.columns[2] == msum({{{-1, 2}, 1}}, 2));
  CHECK(rank(c.columns[0]) == 1);
  CHECK(rank(c.columns[1]) == 4);
  CHECK(rank(c.columns[2]) == 3);
  REQUIRE(c.cohomology.size() == 1);
  CHECK(c.cohomology[0] == CohomologyEntry{0, {0, 0}, 1});
}

TEST_CASE("graded tangent input, uncancelled") {
  const TransformResult result = transform(graded_theta(3), /*with_cancel=*/false);
  REQUIRE(result.complex.has_value());
  const Complex& c = *result.complex;

  REQUIRE(c.columns.size() == 4);
  CHECK(c.columns[0] == msum({{{1, 0, 1}, 1}, {{-1, 1, 1}, 1}, {{-2, 1, 0}, 1}}));
  CHECK(c.columns[1] == msum({{{2, 0, 2}, 1},
                              {{0, 1, 2}, 1},
                              {{2, 1, 0}, 1},
                              {{0, 2, 0}, 1},
                              {{-1, 1, 1}, 2},
                              {{-3, 2, 1}, 1},
                              {{-4, 2, 0}, 1}}));
  CHECK(c.columns[2] == msum({{{3, 1, 1}, 1},
                              {{1, 2, 1}, 1},
                              {{0, 1, 2}, 1},
                              {{-2, 2, 2}, 1},
                              {{0, 2, 0}, 2},
                              {{-2, 3, 0}, 1},
                              {{-3, 2, 1}, 1}}));
  CHECK(c.columns[3] == msum({{{1, 2, 1}, 1}, {{-1, 3, 1}, 1}, {{-2, 3, 0}, 1}}));

  // the annotation lists what cancellation strikes, in matched pairs
  REQUIRE(c.cancelled.size() == 12);
  const std::vector<CancelledTerm> expected = {
      {0, {-1, 1, 1}, 1}, {1, {-1, 1, 1}, 1}, {1, {0, 1, 2}, 1},  {2, {0, 1, 2}, 1},
      {1, {0, 2, 0}, 1},  {2, {0, 2, 0}, 1},  {1, {-3, 2, 1}, 1}, {2, {-3, 2, 1}, 1},
      {2, {1, 2, 1}, 1},  {3, {1, 2, 1}, 1},  {2, {-2, 3, 0}, 1}, {3, {-2, 3, 0}, 1}};
  CHECK(c.cancelled == expected);
}

TEST_CASE("graded tangent input, cancelled") {
  const TransformResult result = transform(graded_theta(3));
  REQUIRE(result.complex.has_value());
  const Complex& c = *result.complex;

  REQUIRE(c.columns.size() == 4);
  CHECK(c.columns[0] == msum({{{1, 0, 1}, 1}, {{-2, 1, 0}, 1}}));
  CHECK(c.columns[1] ==
        msum({{{2, 0, 2}, 1}, {{2, 1, 0}, 1}, {{-1, 1, 1}, 1}, {{-4, 2, 0}, 1}}));
  CHECK(c.columns[2] == msum({{{3, 1, 1}, 1}, {{0, 2, 0}, 1}, {{-2, 2, 2}, 1}}));
  CHECK(c.columns[3] == msum({{{-1, 3, 1}, 1}}));

  REQUIRE(c.cohomology.size() == 1);
  CHECK(c.cohomology[0] == CohomologyEntry{0, {1, 0, 1}, 15});
  CHECK(!c.cohomology_flagged);
  CHECK(!c.conjectural);
  CHECK(c.cancelled.size() == 12);

  SUBCASE("second-order operators appear after cancellation") {
    CHECK(has_arrow(c, 1, {-4, 2, 0}, {-2, 2, 2}, 2, ArrowType::dbar));
    CHECK(has_arrow(c, 1, {2, 0, 2}, {-2, 2, 2}, 2, ArrowType::d));
    CHECK(has_arrow(c, 1, {-1, 1, 1}, {-2, 2, 2}, 2, ArrowType::mixed));
    CHECK(has_arrow(c, 2, {3, 1, 1}, {-1, 3, 1}, 2, ArrowType::d));
    CHECK(has_arrow(c, 2, {0, 2, 0}, {-1, 3, 1}, 2, ArrowType::mixed));
    CHECK(has_arrow(c, 2, {-2, 2, 2}, {-1, 3, 1}, 1, ArrowType::dbar));
  }

  SUBCASE("cancellation is idempotent") {
    Complex again = cancel(c);
    CHECK(again.columns == c.columns);
    CHECK(again.arrows == c.arrows);
  }
}

TEST_CASE("two-step graded input with attached first cohomology") {
  const TransformResult result = transform(graded_conjecture());
  REQUIRE(result.complex.has_value());
  const Complex& c = *result.complex;

  CHECK(c.conjectural);
  REQUIRE(c.columns.size() == 4);
  CHECK(c.columns[0] == msum({{{1, 0, 1}, 1}, {{-2, 1, 0}, 1}}));
  CHECK(c.columns[1] ==
        msum({{{2, 0, 2}, 1}, {{-1, 1, 1}, 1}, {{-4, 2, 0}, 1}}));
  CHECK(c.columns[2] ==
        msum({{{4, 2, 0}, 1}, {{1, 2, 1}, 1}, {{-2, 2, 2}, 1}}));
  CHECK(c.columns[3] == msum({{{2, 3, 0}, 1}, {{-1, 3, 1}, 1}}));

  REQUIRE(c.cohomology.size() == 2);
  CHECK(c.cohomology[0] == CohomologyEntry{0, {1, 0, 1}, 15});
  CHECK(c.cohomology[1] == CohomologyEntry{1, {0, 2, 0}, 20});
  CHECK(!c.cohomology_flagged);
}

TEST_CASE("single extra grade on its own") {
  const TransformResult result =
      transform(graded_from_bundle(make_bundle(space_F(3), {-2, 3, 0})));
  REQUIRE(result.complex.has_value());
  const Complex& c = *result.complex;
  CHECK(c.columns[0] == msum({{{2, 1, 0}, 1}}));
  CHECK(c.columns[1] == msum({{{3, 1, 1}, 1}, {{0, 2, 0}, 1}}));
  CHECK(c.columns[2] == msum({{{4, 2, 0}, 1}, {{1, 2, 1}, 1}}));
  CHECK(c.columns[3] == msum({{{2, 3, 0}, 1}}));
  REQUIRE(c.cohomology.size() == 1);
  CHECK(c.cohomology[0] == CohomologyEntry{1, {0, 2, 0}, 20});
}

TEST_CASE("graded tangent input at n = 2") {
  const TransformResult raw = transform(graded_theta(2), /*with_cancel=*/false);
  REQUIRE(raw.complex.has_value());
  CHECK(raw.complex->columns[0] ==
        msum({{{1, 1}, 1}, {{-1, 2}, 1}, {{-2, 1}, 1}}, 2));
  CHECK(raw.complex->columns[1] == msum({{{2, 2}, 1},
                                         {{0, 3}, 1},
                                         {{-1, 2}, 2},
                                         {{-3, 3}, 1},
                                         {{-4, 2}, 1}},
                                        2));
  CHECK(raw.complex->columns[2] == msum({{{0, 3}, 1}, {{-2, 4}, 1}, {{-3, 3}, 1}}, 2));

  const TransformResult result = transform(graded_theta(2));
  REQUIRE(result.complex.has_value());
  const Complex& c = *result.complex;
  REQUIRE(c.columns.size() == 3);
  CHECK(c.columns[0] == msum({{{1, 1}, 1}, {{-2, 1}, 1}}, 2));
  CHECK(c.columns[1] == msum({{{2, 2}, 1}, {{-1, 2}, 1}, {{-4, 2}, 1}}, 2));
  CHECK(c.columns[2] == msum({{{-2, 4}, 1}}, 2));
  REQUIRE(c.cohomology.size() == 1);
  CHECK(c.cohomology[0] == CohomologyEntry{0, {1, 1}, 8});

  CHECK(has_arrow(c, 1, {2, 2}, {-2, 4}, 2, ArrowType::d));
  CHECK(has_arrow(c, 1, {-1, 2}, {-2, 4}, 2, ArrowType::mixed));
  CHECK(has_arrow(c, 1, {-4, 2}, {-2, 4}, 2, ArrowType::dbar));
}

TEST_CASE("alternating rank sums vanish before and after cancellation") {
  const std::vector<GradedInput> inputs = {
      graded_trivial(2),
      graded_trivial(3),
      graded_from_bundle(make_bundle(space_F(3), {2, -1, 0})),
      graded_from_bundle(make_bundle(space_F(3), {-1, 1, 1})),
      graded_from_bundle(make_bundle(space_F(3), {1, 0, 1})),
      graded_theta(2),
      graded_theta(3),
      graded_conjecture()};
  for (const auto& input : inputs) {
    const TransformResult raw = transform(input, /*with_cancel=*/false);
    const TransformResult reduced = transform(input);
    REQUIRE(raw.complex.has_value());
    REQUIRE(reduced.complex.has_value());
    CHECK(alternating_rank(*raw.complex) == 0);
    CHECK(alternating_rank(*reduced.complex) == 0);
    CHECK(reduced.complex->cohomology == raw.complex->cohomology);
  }
}

TEST_CASE("cancellation is confluent on the corpus") {
  const std::vector<GradedInput> inputs = {graded_theta(2), graded_theta(3),
                                           graded_conjecture()};
  std::mt19937 rng(5);
  for (const auto& input : inputs) {
    const TransformResult raw = transform(input, /*with_cancel=*/false);
    const TransformResult reduced = transform(input);
    REQUIRE(raw.complex.has_value());
    for (int trial = 0; trial < 20; ++trial)
      CHECK(strike_randomly(raw.complex->columns, rng) == reduced.complex->columns);
  }
}

TEST_CASE("overlapping grade degrees are flagged, never merged") {
  const FlagSpace f = space_F(3);
  GradedInput twice;
  twice.n = 3;
  twice.grades = {sum_of(make_bundle(f, {1, 0, 1})), sum_of(make_bundle(f, {1, 0, 1}))};

  const auto [h, flagged] = assemble_cohomology(twice);
  CHECK(flagged);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == CohomologyEntry{0, {1, 0, 1}, 15});
  CHECK(h[1] == CohomologyEntry{0, {1, 0, 1}, 15});

  const TransformResult result = transform(twice);
  REQUIRE(result.complex.has_value());
  CHECK(result.complex->cohomology_flagged);
}
