#include "penrose/flag_space.hpp"

#include <algorithm>
#include <sstream>

#include "penrose/errors.hpp"

namespace penrose {

namespace {

void check_crossed(int n, const std::vector<int>& crossed) {
  if (n < 1) throw InvalidArgument("flag space needs n >= 1");
  if (crossed.empty()) throw InvalidArgument("flag space needs at least one crossed node");
  for (std::size_t i = 0; i < crossed.size(); ++i) {
    if (crossed[i] < 1 || crossed[i] > n) throw InvalidArgument("crossed node out of range");
    if (i > 0 && crossed[i - 1] >= crossed[i])
      throw InvalidArgument("crossed nodes must be strictly increasing");
  }
}

}  // namespace

FlagSpace space_F(int n) {
  if (n < 2) throw InvalidArgument("F(n) needs n >= 2");
  return FlagSpace{SpaceKind::F, n, {1, 2}};
}

FlagSpace space_G(int n) {
  if (n < 2) throw InvalidArgument("G(n) needs n >= 2");
  return FlagSpace{SpaceKind::G, n, {1, 2}};
}

FlagSpace space_M(int n) {
  if (n < 1) throw InvalidArgument("M(n) needs n >= 1");
  return FlagSpace{SpaceKind::M, n, {1}};
}

FlagSpace space_generic(int n, std::vector<int> crossed) {
  check_crossed(n, crossed);
  return FlagSpace{SpaceKind::Generic, n, std::move(crossed)};
}

bool is_crossed(const FlagSpace& s, int node) {
  return std::binary_search(s.crossed.begin(), s.crossed.end(), node);
}

std::vector<std::pair<int, int>> uncrossed_blocks(const FlagSpace& s) {
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (int node = 1; node <= s.n + 1; ++node) {
    if (node <= s.n && !is_crossed(s, node)) {
      if (start == 0) start = node;
    } else if (start != 0) {
      blocks.emplace_back(start, node - 1);
      start = 0;
    }
  }
  return blocks;
}

int levi_positive_roots(const FlagSpace& s) {
  // The crossed nodes cut {1..n+1} into segments; each segment of size m
  // contributes m(m-1)/2.
  int count = 0;
  int prev = 0;
  auto flush = [&](int end) {
    const int m = end - prev;
    count += m * (m - 1) / 2;
    prev = end;
  };
  for (int c : s.crossed) flush(c);
  flush(s.n + 1);
  return count;
}

std::string format_space(const FlagSpace& s) {
  std::ostringstream os;
  switch (s.kind) {
    case SpaceKind::F: os << "F(" << s.n << ")"; return os.str();
    case SpaceKind::G: os << "G(" << s.n << ")"; return os.str();
    case SpaceKind::M: os << "M(" << s.n << ")"; return os.str();
    case SpaceKind::Generic: break;
  }
  os << "X(" << s.n << ";";
  for (std::size_t i = 0; i < s.crossed.size(); ++i) {
    if (i) os << ',';
    os << s.crossed[i];
  }
  os << ")";
  return os.str();
}

FlagSpace parse_space(const std::string& letter, int n) {
  if (letter == "F") return space_F(n);
  if (letter == "G") return space_G(n);
  if (letter == "M") return space_M(n);
  throw ParseError("unknown space '" + letter + "' (expected F, G, or M)");
}

}  // namespace penrose
