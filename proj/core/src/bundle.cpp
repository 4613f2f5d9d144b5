#include "penrose/bundle.hpp"

#include <algorithm>
#include <sstream>

#include "penrose/errors.hpp"

namespace penrose {

void validate(const FlagSpace& space, const Weight& label) {
  if (rank_of(label) != space.n)
    throw InvalidArgument("label rank " + std::to_string(label.size()) +
                          " does not match " + format_space(space));
  for (int node = 1; node <= space.n; ++node)
    if (!is_crossed(space, node) && label[node - 1] < 0)
      throw NotLeviDominant("label " + format_weight_parens(label) + " on " +
                                format_space(space) + " is negative at uncrossed node " +
                                std::to_string(node),
                            node);
}

Bundle make_bundle(const FlagSpace& space, const Weight& label) {
  validate(space, label);
  return Bundle{space, label};
}

Int rank(const Bundle& b) {
  validate(b.space, b.label);
  Int r = 1;
  for (const auto& [first, last] : uncrossed_blocks(b.space)) {
    Weight part(b.label.begin() + (first - 1), b.label.begin() + last);
    r = checked_mul(r, weyl_dim(last - first + 1, part));
  }
  return r;
}

BundleSum empty_sum(const FlagSpace& space) { return BundleSum{space, {}}; }

BundleSum sum_of(const Bundle& b) {
  validate(b.space, b.label);
  return BundleSum{b.space, {{b.label, 1}}};
}

BundleSum make_sum(const FlagSpace& space, std::vector<BundleSum::Term> terms) {
  BundleSum s = empty_sum(space);
  for (auto& t : terms) add_term(s, t.label, t.mult);
  return s;
}

void add_term(BundleSum& s, const Weight& label, Int mult) {
  if (mult < 0) throw InvalidArgument("negative multiplicity in bundle sum");
  if (mult == 0) return;
  validate(s.space, label);
  const EpsLexGreater greater;
  auto it = std::lower_bound(
      s.terms.begin(), s.terms.end(), label,
      [&](const BundleSum::Term& t, const Weight& w) { return greater(t.label, w); });
  if (it != s.terms.end() && it->label == label)
    it->mult = checked_add(it->mult, mult);
  else
    s.terms.insert(it, BundleSum::Term{label, mult});
}

BundleSum merge(const BundleSum& a, const BundleSum& b) {
  if (a.space != b.space) throw InvalidArgument("cannot merge sums over different spaces");
  BundleSum r = a;
  for (const auto& t : b.terms) add_term(r, t.label, t.mult);
  return r;
}

Int rank(const BundleSum& s) {
  Int r = 0;
  for (const auto& t : s.terms)
    r = checked_add(r, checked_mul(t.mult, rank(Bundle{s.space, t.label})));
  return r;
}

Int total_multiplicity(const BundleSum& s) {
  Int r = 0;
  for (const auto& t : s.terms) r = checked_add(r, t.mult);
  return r;
}

bool is_empty(const BundleSum& s) { return s.terms.empty(); }

std::string format_bundle(const Bundle& b) {
  std::string letter;
  switch (b.space.kind) {
    case SpaceKind::F: letter = "F"; break;
    case SpaceKind::G: letter = "G"; break;
    case SpaceKind::M: letter = "M"; break;
    case SpaceKind::Generic:
      throw InvalidArgument("no wire format for generic spaces");
  }
  return letter + ":" + std::to_string(b.space.n) + ":" + format_weight(b.label);
}

Bundle parse_bundle(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = (c1 == std::string::npos) ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw ParseError("expected <space>:<n>:<labels>, got '" + text + "'");
  const std::string letter = text.substr(0, c1);
  const std::string n_text = text.substr(c1 + 1, c2 - c1 - 1);
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(n_text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad rank '" + n_text + "' in '" + text + "'");
  }
  if (used != n_text.size()) throw ParseError("bad rank '" + n_text + "' in '" + text + "'");
  return make_bundle(parse_space(letter, n), parse_weight(text.substr(c2 + 1)));
}

std::string format_sum(const BundleSum& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : s.terms) {
    if (!first) os << " ⊕ ";
    first = false;
    if (t.mult != 1) os << t.mult << "*";
    os << format_weight_parens(t.label);
  }
  return os.str();
}

}  // namespace penrose
