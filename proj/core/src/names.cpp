#include "penrose/names.hpp"

#include <algorithm>

#include "penrose/character.hpp"
#include "penrose/errors.hpp"

namespace penrose {

namespace {

HermitianName pinned(const char* text, const char* latex) {
  return HermitianName{text, latex, NameSource::pinned};
}

std::map<Weight, HermitianName, EpsLexGreater> build_table(int n) {
  std::map<Weight, HermitianName, EpsLexGreater> t;
  if (n == 3) {
    t[{0, 0, 0}] = pinned("Λ^{0,0}", "\\Lambda^{0,0}");
    t[{1, 0, 1}] = pinned("Λ^{0,1}", "\\Lambda^{0,1}");
    t[{-2, 1, 0}] = pinned("Λ^{1,0}", "\\Lambda^{1,0}");
    t[{2, 1, 0}] = pinned("Λ^{0,2}", "\\Lambda^{0,2}");
    t[{-1, 1, 1}] = pinned("Λ^{1,1}_⊥", "\\Lambda^{1,1}_\\perp");
    t[{0, 2, 0}] = pinned("Λ^{1,2}_⊥", "\\Lambda^{1,2}_\\perp");
    t[{2, 0, 2}] = pinned("S²Λ^{0,1}", "S^2\\Lambda^{0,1}");
    t[{-4, 2, 0}] = pinned("S²Λ^{1,0}", "S^2\\Lambda^{1,0}");
    t[{3, 1, 1}] = pinned("S^{2,1}Λ^{0,1}", "S^{2,1}\\Lambda^{0,1}");
    t[{-2, 2, 2}] = pinned("S²Λ^{0,1}⊗_⊥S²Λ^{1,0}",
                           "S^2\\Lambda^{0,1}\\otimes_\\perp S^2\\Lambda^{1,0}");
    t[{-1, 3, 1}] = pinned("S^{2,1}Λ^{0,1}⊗_⊥S²Λ^{1,0}",
                           "S^{2,1}\\Lambda^{0,1}\\otimes_\\perp S^2\\Lambda^{1,0}");
  } else if (n == 2) {
    t[{0, 0}] = pinned("Λ^{0,0}", "\\Lambda^{0,0}");
    t[{1, 1}] = pinned("Λ^{0,1}", "\\Lambda^{0,1}");
    t[{-2, 1}] = pinned("Λ^{1,0}", "\\Lambda^{1,0}");
    t[{-1, 2}] = pinned("Λ^{1,1}_⊥", "\\Lambda^{1,1}_\\perp");
    t[{2, 2}] = pinned("S²Λ^{0,1}", "S^2\\Lambda^{0,1}");
    t[{-4, 2}] = pinned("S²Λ^{1,0}", "S^2\\Lambda^{1,0}");
    t[{-2, 4}] = pinned("S²Λ^{0,1}⊗_⊥S²Λ^{1,0}",
                        "S^2\\Lambda^{0,1}\\otimes_\\perp S^2\\Lambda^{1,0}");
  }
  return t;
}

// Schur-functor decoration for a nonempty partition: nothing for a single
// box, powers of S for rows, powers of Lambda for columns, S^{parts}
// in general.
std::string schur_text(const std::vector<Int>& lam) {
  const std::size_t k = lam.size();
  if (k == 1 && lam[0] == 1) return "";
  if (k == 1) {
    if (lam[0] == 2) return "S²";
    if (lam[0] == 3) return "S³";
    return "S^{" + std::to_string(lam[0]) + "}";
  }
  if (std::all_of(lam.begin(), lam.end(), [](Int v) { return v == 1; })) {
    if (k == 2) return "Λ²";
    if (k == 3) return "Λ³";
    return "Λ^{" + std::to_string(k) + "}";
  }
  std::string s = "S^{";
  for (std::size_t i = 0; i < k; ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s + "}";
}

std::string schur_latex(const std::vector<Int>& lam) {
  const std::size_t k = lam.size();
  if (k == 1 && lam[0] == 1) return "";
  if (k == 1) return "S^" + std::to_string(lam[0]);
  if (std::all_of(lam.begin(), lam.end(), [](Int v) { return v == 1; }))
    return "\\Lambda^" + std::to_string(k);
  std::string s = "S^{";
  for (std::size_t i = 0; i < k; ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s + "}";
}

// All partitions of s into at most max_parts parts, descending lex.
std::vector<std::vector<Int>> partitions_of(Int s, int max_parts) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int left, Int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (Int next = std::min(cap, left); next >= 1; --next) {
      cur.push_back(next);
      self(self, left - next, next);
      cur.pop_back();
    }
  };
  rec(rec, s, s);
  return out;
}

}  // namespace

const std::map<Weight, HermitianName, EpsLexGreater>& name_table(int n) {
  static const std::map<Weight, HermitianName, EpsLexGreater> t2 = build_table(2);
  static const std::map<Weight, HermitianName, EpsLexGreater> t3 = build_table(3);
  static const std::map<Weight, HermitianName, EpsLexGreater> empty;
  if (n == 2) return t2;
  if (n == 3) return t3;
  return empty;
}

std::optional<Weight> schur_label(const Bundle& b, const std::vector<Int>& lambda) {
  // Leading term of the Schur functor: pair the partition against the
  // weights of b sorted descending.
  const LeviCharacter c = character_of(b);
  std::vector<Weight> sorted;
  for (const auto& [w, m] : c.mult)
    for (Int i = 0; i < m; ++i) sorted.push_back(w);
  if (lambda.size() > sorted.size()) return std::nullopt;
  Weight out(b.space.n, 0);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (Int rep = 0; rep < lambda[i]; ++rep) out = add(out, sorted[i]);
  return out;
}

HermitianName hermitian_name(const Bundle& b) {
  if (b.space.kind != SpaceKind::M)
    throw InvalidArgument("hermitian names live on M(n), got " + format_space(b.space));
  validate(b.space, b.label);
  const int n = b.space.n;

  const auto& table = name_table(n);
  if (auto it = table.find(b.label); it != table.end()) return it->second;

  if (n >= 2) {
    Weight l01(n, 0), l10(n, 0);
    l01.front() = 1;
    l01.back() += 1;  // n = 2 collapses both onto node coordinates (1,1)
    l10.front() = -2;
    l10[1] = 1;
    const Bundle v01{b.space, l01}, v10{b.space, l10};

    // Smallest total number of boxes wins; antiholomorphic boxes first.
    constexpr Int kMaxBoxes = 6;
    for (Int total = 1; total <= kMaxBoxes; ++total) {
      for (Int s01 = total; s01 >= 0; --s01) {
        for (const auto& lam : partitions_of(s01, n)) {
          const auto part01 = schur_label(v01, lam);
          if (!part01) continue;
          for (const auto& mu : partitions_of(total - s01, n)) {
            const auto part10 = schur_label(v10, mu);
            if (!part10) continue;
            if (add(*part01, *part10) != b.label) continue;
            HermitianName name;
            name.source = NameSource::derived;
            if (!lam.empty()) {
              name.text = schur_text(lam) + "Λ^{0,1}";
              name.latex = schur_latex(lam) + "\\Lambda^{0,1}";
            }
            if (!lam.empty() && !mu.empty()) {
              name.text += "⊗_⊥";
              name.latex += "\\otimes_\\perp ";
            }
            if (!mu.empty()) {
              name.text += schur_text(mu) + "Λ^{1,0}";
              name.latex += schur_latex(mu) + "\\Lambda^{1,0}";
            }
            return name;
          }
        }
      }
    }
  }

  return HermitianName{format_weight_parens(b.label), format_weight_parens(b.label),
                       NameSource::raw};
}

}  // namespace penrose
