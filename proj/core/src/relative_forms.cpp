#include "penrose/relative_forms.hpp"

#include "penrose/character.hpp"
#include "penrose/errors.hpp"

namespace penrose {

namespace {

// Dynkin coordinates of epsilon_i - epsilon_j (1-based, i != j).
Weight eps_diff(int n, int i, int j) {
  EpsilonSeq e(n + 1, 0);
  e[i - 1] += 1;
  e[j - 1] -= 1;
  return from_epsilon(e);
}

}  // namespace

BundleSum relative_cotangent(int n) {
  if (n < 2) throw InvalidArgument("relative cotangent bundle needs n >= 2");
  // Conormal directions of the fibers of F(n) -> M(n), written on G(n):
  // the lines epsilon_1 - epsilon_j for j >= 3 together with
  // epsilon_2 - epsilon_1.
  LeviCharacter c{space_G(n), {}};
  c.mult[eps_diff(n, 2, 1)] += 1;
  for (int j = 3; j <= n + 1; ++j) c.mult[eps_diff(n, 1, j)] += 1;
  return decompose(c);
}

BundleSum relative_forms(int n, int p) {
  if (p < 0) throw InvalidArgument("relative forms need p >= 0");
  if (p > n) return empty_sum(space_G(n));
  return exterior_power(relative_cotangent(n), p);
}

Bundle pullback(const Bundle& b) {
  if (b.space.kind != SpaceKind::F)
    throw InvalidArgument("pullback expects a bundle on F(n), got " + format_space(b.space));
  validate(b.space, b.label);
  return make_bundle(space_G(b.space.n), simple_reflect(1, b.label));
}

BundleSum pullback(const BundleSum& s) {
  if (s.space.kind != SpaceKind::F)
    throw InvalidArgument("pullback expects a sum on F(n), got " + format_space(s.space));
  BundleSum out = empty_sum(space_G(s.space.n));
  for (const auto& t : s.terms) add_term(out, simple_reflect(1, t.label), t.mult);
  return out;
}

std::vector<BundleSum> tangent_series(const FlagSpace& s) {
  const int n = s.n;
  // Positive roots of the nilradical, graded by how many crossed nodes
  // sit under them.  Roots of the label convention coincide with the
  // epsilon differences themselves.
  std::vector<LeviCharacter> grades;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      int depth = 0;
      for (int node = i; node < j; ++node)
        if (is_crossed(s, node)) ++depth;
      if (depth == 0) continue;
      while (static_cast<int>(grades.size()) < depth) grades.push_back(LeviCharacter{s, {}});
      grades[depth - 1].mult[eps_diff(n, i, j)] += 1;
    }

  std::vector<BundleSum> out;
  out.reserve(grades.size());
  for (const auto& g : grades) out.push_back(decompose(g));
  return out;
}

}  // namespace penrose
