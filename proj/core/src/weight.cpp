#include "penrose/weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "penrose/errors.hpp"

namespace penrose {

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // Exact at every step: a product of i consecutive integers is
    // divisible by i!.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

EpsilonSeq to_epsilon(const Weight& w) {
  const int n = rank_of(w);
  EpsilonSeq e(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) e[i] = checked_add(w[i], e[i + 1]);
  return e;
}

Weight from_epsilon(const EpsilonSeq& e) {
  if (e.empty()) throw InvalidArgument("epsilon sequence must be nonempty");
  Weight w(e.size() - 1);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) w[i] = checked_sub(e[i], e[i + 1]);
  return w;
}

Weight rho(int n) { return Weight(n, 1); }

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw InvalidArgument("rank mismatch in weight addition");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw InvalidArgument("rank mismatch in weight subtraction");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

Weight simple_reflect(int i, const Weight& w) {
  const int n = rank_of(w);
  if (i < 1 || i > n) throw InvalidArgument("reflection index out of range");
  EpsilonSeq e = to_epsilon(w);
  std::swap(e[i - 1], e[i]);
  return from_epsilon(e);
}

bool eps_lex_less(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw InvalidArgument("rank mismatch in weight comparison");
  const EpsilonSeq ea = to_epsilon(a), eb = to_epsilon(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

SortResult sort_and_count(const EpsilonSeq& e, const std::vector<int>& cuts) {
  const int len = static_cast<int>(e.size());
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const int j = cuts[k];
    if (j < 1 || j >= len || (k > 0 && cuts[k - 1] >= j))
      throw InvalidArgument("segment cuts must be strictly increasing positions inside the sequence");
  }

  SortResult r;
  r.sorted = e;
  int start = 0;
  for (std::size_t k = 0; k <= cuts.size(); ++k) {
    const int end = (k < cuts.size()) ? cuts[k] : len;  // [start, end)
    for (int i = start; i < end; ++i)
      for (int j = i + 1; j < end; ++j) {
        if (e[i] == e[j]) r.singular = true;
        if (e[i] < e[j]) ++r.inversions;
      }
    std::sort(r.sorted.begin() + start, r.sorted.begin() + end, std::greater<Int>());
    start = end;
  }
  return r;
}

Int weyl_dim(int n, const Weight& w) {
  if (rank_of(w) != n) throw InvalidArgument("rank mismatch in weyl_dim");
  for (int i = 0; i < n; ++i)
    if (w[i] < 0) throw NotLeviDominant("weyl_dim requires a dominant weight", i + 1);
  const EpsilonSeq e = to_epsilon(add(w, rho(n)));
  Int num = 1, den = 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num = checked_mul(num, e[i] - e[j]);
      den = checked_mul(den, j - i);
      const Int g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  if (den != 1) throw OverflowError("weyl_dim: non-integral product");
  return num;
}

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

std::string format_weight_parens(const Weight& w) {
  return "(" + format_weight(w) + ")";
}

Weight parse_weight(const std::string& text) {
  Weight w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    // tolerate surrounding blanks, but not an empty coordinate
    const auto a = piece.find_first_not_of(" \t");
    const auto b = piece.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty coordinate in weight '" + text + "'");
    piece = piece.substr(a, b - a + 1);
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + piece + "' in weight '" + text + "'");
    }
    if (used != piece.size()) throw ParseError("bad coordinate '" + piece + "' in weight '" + text + "'");
    w.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (w.empty()) throw ParseError("empty weight");
  return w;
}

}  // namespace penrose
