#include "penrose/transform.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "penrose/character.hpp"
#include "penrose/relative_forms.hpp"

namespace penrose {

namespace {

void check_input(const GradedInput& input) {
  if (input.n < 2) throw InvalidArgument("transform needs n >= 2");
  if (input.grades.empty()) throw InvalidArgument("transform needs at least one grade");
  const FlagSpace f = space_F(input.n);
  for (const auto& g : input.grades)
    if (g.space != f) throw InvalidArgument("every grade must live on " + format_space(f));
}

// Node-1 charge shift of an order-k operator decides its type: +k is pure
// dbar, -2k pure d (each raw derivative moves the charge by +1 or -2).
ArrowType classify(Int delta, int order) {
  if (delta == order) return ArrowType::dbar;
  if (delta == -2 * order) return ArrowType::d;
  return ArrowType::mixed;
}

bool column_has(const BundleSum& col, const Weight& w) {
  for (const auto& t : col.terms)
    if (t.label == w) return true;
  return false;
}

Int column_mult(const BundleSum& col, const Weight& w) {
  for (const auto& t : col.terms)
    if (t.label == w) return t.mult;
  return 0;
}

void column_remove(BundleSum& col, const Weight& w, Int count) {
  for (auto it = col.terms.begin(); it != col.terms.end(); ++it)
    if (it->label == w) {
      it->mult -= count;
      if (it->mult <= 0) col.terms.erase(it);
      return;
    }
}

// Keyed arrow store with a deterministic order.
using ArrowKey = std::tuple<int, Weight, Weight>;
struct ArrowKeyLess {
  bool operator()(const ArrowKey& a, const ArrowKey& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return eps_lex_less(std::get<1>(b), std::get<1>(a));
    return eps_lex_less(std::get<2>(b), std::get<2>(a));
  }
};
using ArrowMap = std::map<ArrowKey, int, ArrowKeyLess>;  // value: order

ArrowMap arrows_to_map(const std::vector<Arrow>& arrows) {
  ArrowMap m;
  for (const auto& a : arrows) m.emplace(ArrowKey{a.col, a.src, a.dst}, a.order);
  return m;
}

std::vector<Arrow> arrows_from_map(const ArrowMap& m) {
  std::vector<Arrow> out;
  out.reserve(m.size());
  for (const auto& [key, order] : m) {
    const auto& [col, src, dst] = key;
    out.push_back(Arrow{col, src, dst, order, classify(dst[0] - src[0], order)});
  }
  return out;
}

}  // namespace

GradedInput graded_from_bundle(const Bundle& b) {
  if (b.space.kind != SpaceKind::F)
    throw InvalidArgument("transform input must live on F(n), got " + format_space(b.space));
  return GradedInput{b.space.n, {sum_of(b)}, false};
}

GradedInput graded_trivial(int n) {
  return GradedInput{n, {sum_of(make_bundle(space_F(n), Weight(n, 0)))}, false};
}

GradedInput graded_theta(int n) { return GradedInput{n, tangent_series(space_F(n)), false}; }

GradedInput graded_conjecture() {
  const FlagSpace f = space_F(3);
  GradedInput input;
  input.n = 3;
  input.grades = {make_sum(f, {{{2, -1, 0}, 1}, {{-1, 1, 1}, 1}}),
                  make_sum(f, {{{-2, 3, 0}, 1}, {{1, 0, 1}, 1}})};
  input.conjectural = true;
  return input;
}

std::pair<CohomologyResult, bool> assemble_cohomology(const GradedInput& input) {
  check_input(input);
  const FlagSpace f = space_F(input.n);
  CohomologyResult all;
  bool flagged = false;
  std::vector<std::vector<int>> degree_sets;
  for (const auto& grade : input.grades) {
    std::vector<int> degrees;
    for (const auto& t : grade.terms)
      for (CohomologyEntry e : cohomology(Bundle{f, t.label})) {
        e.dim = checked_mul(e.dim, t.mult);
        degrees.push_back(e.degree);
        all.push_back(e);
      }
    for (const auto& earlier : degree_sets)
      for (int d : degrees)
        if (std::find(earlier.begin(), earlier.end(), d) != earlier.end()) flagged = true;
    degree_sets.push_back(degrees);
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const CohomologyEntry& a, const CohomologyEntry& b) {
                     return a.degree < b.degree;
                   });
  return {all, flagged};
}

E1Page e1_page(const GradedInput& input) {
  check_input(input);
  const int n = input.n;
  const FlagSpace m = space_M(n);

  E1Page page;
  page.n = n;
  page.base = m;
  page.conjectural = input.conjectural;
  std::tie(page.cohomology, page.cohomology_flagged) = assemble_cohomology(input);

  for (const auto& grade : input.grades) {
    const BundleSum pulled = pullback(grade);
    for (int p = 0; p <= n; ++p) {
      const BundleSum product = tensor(relative_forms(n, p), pulled);
      for (const auto& t : product.terms) {
        const auto di = direct_images(Bundle{product.space, t.label}, m);
        if (!di) continue;
        auto [it, inserted] = page.cells.try_emplace({p, di->degree}, empty_sum(m));
        add_term(it->second, di->image.label, t.mult);
      }
    }
  }
  return page;
}

Complex to_complex(const E1Page& page) {
  for (const auto& [pq, cell] : page.cells)
    if (pq.second > 0 && !is_empty(cell))
      throw NotCollapsed("nonempty cell at (p=" + std::to_string(pq.first) +
                             ", q=" + std::to_string(pq.second) +
                             "): the page does not collapse to a single row",
                         page);

  Complex c;
  c.space = page.base;
  c.cohomology = page.cohomology;
  c.cohomology_flagged = page.cohomology_flagged;
  c.conjectural = page.conjectural;
  c.columns.assign(page.n + 1, empty_sum(page.base));
  for (const auto& [pq, cell] : page.cells) c.columns[pq.first] = cell;

  // Adjacent pairs admitting a first-order invariant operator.
  ArrowMap arrows;
  for (int p = 0; p + 1 < static_cast<int>(c.columns.size()); ++p)
    for (const auto& s : c.columns[p].terms)
      for (const auto& t : c.columns[p + 1].terms) {
        const Int delta = t.label[0] - s.label[0];
        if (delta == 1 || delta == -2) arrows.emplace(ArrowKey{p, s.label, t.label}, 1);
      }
  c.arrows = arrows_from_map(arrows);
  return c;
}

Complex cancel(const Complex& c) {
  Complex out = c;
  ArrowMap arrows = arrows_to_map(out.arrows);

  for (;;) {
    // leftmost boundary first, then the largest shared weight
    int found_p = -1;
    Weight found_w;
    for (int p = 0; found_p < 0 && p + 1 < static_cast<int>(out.columns.size()); ++p)
      for (const auto& t : out.columns[p].terms)
        if (column_has(out.columns[p + 1], t.label)) {
          found_p = p;
          found_w = t.label;
          break;
        }
    if (found_p < 0) break;

    const int p = found_p;
    const Weight& w = found_w;
    const Int count = std::min(column_mult(out.columns[p], w), column_mult(out.columns[p + 1], w));

    // Composite operators through the removed summand: going in via
    // s -> w and out via w -> t contributes an operator of summed order.
    // A lower-order operator between the same pair dominates it.
    std::vector<std::pair<ArrowKey, int>> composites;
    for (const auto& [k1, o1] : arrows) {
      if (std::get<0>(k1) != p || !(std::get<2>(k1) == w) || std::get<1>(k1) == w) continue;
      for (const auto& [k2, o2] : arrows) {
        if (std::get<0>(k2) != p || !(std::get<1>(k2) == w) || std::get<2>(k2) == w) continue;
        composites.emplace_back(ArrowKey{p, std::get<1>(k1), std::get<2>(k2)}, o1 + o2);
      }
    }

    column_remove(out.columns[p], w, count);
    column_remove(out.columns[p + 1], w, count);
    out.cancelled.push_back(CancelledTerm{p, w, count});
    out.cancelled.push_back(CancelledTerm{p + 1, w, count});

    for (const auto& [key, order] : composites) {
      const auto& [kp, src, dst] = key;
      if (!column_has(out.columns[kp], src) || !column_has(out.columns[kp + 1], dst)) continue;
      auto [it, inserted] = arrows.emplace(key, order);
      if (!inserted && order < it->second) it->second = order;
    }
    for (auto it = arrows.begin(); it != arrows.end();) {
      const auto& [kp, src, dst] = it->first;
      if (!column_has(out.columns[kp], src) || !column_has(out.columns[kp + 1], dst))
        it = arrows.erase(it);
      else
        ++it;
    }
  }

  out.arrows = arrows_from_map(arrows);
  return out;
}

TransformResult transform(const GradedInput& input, bool with_cancel) {
  const E1Page page = e1_page(input);
  TransformResult result;
  try {
    Complex raw = to_complex(page);
    Complex reduced = cancel(raw);
    if (with_cancel) {
      result.complex = std::move(reduced);
    } else {
      raw.cancelled = reduced.cancelled;  // annotate what cancellation removes
      result.complex = std::move(raw);
    }
  } catch (const NotCollapsed& e) {
    result.page = e.page();
  }
  return result;
}

}  // namespace penrose
