#include "penrose/character.hpp"

#include <algorithm>

#include "penrose/errors.hpp"

namespace penrose {

namespace {

using GlWeights = std::map<std::vector<Int>, Int>;

// Weight multiset of the GL(m) irreducible with weakly decreasing highest
// weight hw, by Gelfand-Tsetlin branching: restrict to GL(m-1) over all
// interlacing patterns, the removed coordinate being the weight difference.
GlWeights gl_weights(const std::vector<Int>& hw) {
  const int m = static_cast<int>(hw.size());
  GlWeights out;
  if (m == 0) {
    out[{}] = 1;
    return out;
  }
  if (m == 1) {
    out[{hw[0]}] = 1;
    return out;
  }
  Int total = 0;
  for (Int v : hw) total = checked_add(total, v);

  std::vector<Int> mu(m - 1);
  for (int i = 0; i < m - 1; ++i) mu[i] = hw[i + 1];
  for (;;) {
    Int mu_total = 0;
    for (Int v : mu) mu_total = checked_add(mu_total, v);
    const GlWeights sub = gl_weights(mu);
    for (const auto& [v, c] : sub) {
      std::vector<Int> w = v;
      w.push_back(checked_sub(total, mu_total));
      out[w] = checked_add(out[w], c);
    }
    // odometer over the interlacing box hw[i+1] <= mu[i] <= hw[i]
    int i = m - 2;
    while (i >= 0 && mu[i] == hw[i]) {
      mu[i] = hw[i + 1];
      --i;
    }
    if (i < 0) break;
    ++mu[i];
  }
  return out;
}

std::vector<std::pair<int, int>> segments(const FlagSpace& s) {
  // 0-based [start, end) ranges of the epsilon sequence, cut after each
  // crossed node.
  std::vector<std::pair<int, int>> segs;
  int prev = 0;
  for (int c : s.crossed) {
    segs.emplace_back(prev, c);
    prev = c;
  }
  segs.emplace_back(prev, s.n + 1);
  return segs;
}

void add_to(LeviCharacter& c, const Weight& w, Int mult) {
  auto [it, inserted] = c.mult.emplace(w, mult);
  if (!inserted) it->second = checked_add(it->second, mult);
  if (it->second == 0) c.mult.erase(it);
}

}  // namespace

Int total_dim(const LeviCharacter& c) {
  Int d = 0;
  for (const auto& [w, m] : c.mult) d = checked_add(d, m);
  return d;
}

bool is_zero(const LeviCharacter& c) { return c.mult.empty(); }

LeviCharacter character_of(const Bundle& b) {
  validate(b.space, b.label);
  const EpsilonSeq eps = to_epsilon(b.label);
  const auto segs = segments(b.space);

  // Per-segment weight multisets, then a cartesian product glued back into
  // a full epsilon sequence.
  std::vector<GlWeights> parts;
  parts.reserve(segs.size());
  for (const auto& [start, end] : segs)
    parts.push_back(gl_weights(std::vector<Int>(eps.begin() + start, eps.begin() + end)));

  LeviCharacter out{b.space, {}};
  std::vector<GlWeights::const_iterator> its;
  for (const auto& p : parts) its.push_back(p.begin());
  for (;;) {
    EpsilonSeq e;
    Int mult = 1;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      e.insert(e.end(), its[k]->first.begin(), its[k]->first.end());
      mult = checked_mul(mult, its[k]->second);
    }
    add_to(out, from_epsilon(e), mult);
    std::size_t k = parts.size();
    while (k > 0 && ++its[k - 1] == parts[k - 1].end()) {
      its[k - 1] = parts[k - 1].begin();
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

LeviCharacter character_of(const BundleSum& s) {
  LeviCharacter out{s.space, {}};
  for (const auto& t : s.terms) {
    const LeviCharacter c = character_of(Bundle{s.space, t.label});
    for (const auto& [w, m] : c.mult) add_to(out, w, checked_mul(m, t.mult));
  }
  return out;
}

LeviCharacter tensor(const LeviCharacter& a, const LeviCharacter& b) {
  if (a.space != b.space) throw InvalidArgument("tensor of characters over different spaces");
  LeviCharacter out{a.space, {}};
  for (const auto& [wa, ma] : a.mult)
    for (const auto& [wb, mb] : b.mult) add_to(out, add(wa, wb), checked_mul(ma, mb));
  return out;
}

LeviCharacter exterior_power(const LeviCharacter& c, int p) {
  if (p < 0) throw InvalidArgument("exterior power needs p >= 0");
  // Layered product of (1 + t x^w)^mult over distinct weights; layer k of
  // the result is the coefficient of t^k.
  std::vector<LeviCharacter> layers(p + 1, LeviCharacter{c.space, {}});
  layers[0].mult[Weight(c.space.n, 0)] = 1;
  for (const auto& [w, m] : c.mult) {
    if (m < 0) throw InvalidArgument("exterior power of a virtual character");
    std::vector<LeviCharacter> next(p + 1, LeviCharacter{c.space, {}});
    for (int k = 0; k <= p; ++k) {
      for (int j = 0; j <= k && j <= m; ++j) {
        const Int ways = binomial(m, j);
        Weight shift(c.space.n, 0);
        for (int t = 0; t < j; ++t) shift = add(shift, w);
        for (const auto& [v, q] : layers[k - j].mult)
          add_to(next[k], add(v, shift), checked_mul(q, ways));
      }
    }
    layers = std::move(next);
  }
  return layers[p];
}

BundleSum decompose(const LeviCharacter& c) {
  LeviCharacter rest = c;
  BundleSum out = empty_sum(c.space);
  for (;;) {
    // drop exhausted entries, then take the epsilon-lex-largest
    // Levi-dominant weight still present
    for (auto it = rest.mult.begin(); it != rest.mult.end();) {
      if (it->second == 0)
        it = rest.mult.erase(it);
      else
        ++it;
    }
    if (rest.mult.empty()) return out;

    auto lead = rest.mult.end();
    for (auto it = rest.mult.begin(); it != rest.mult.end(); ++it) {
      bool dominant = true;
      for (int node = 1; node <= c.space.n && dominant; ++node)
        if (!is_crossed(c.space, node) && it->first[node - 1] < 0) dominant = false;
      if (dominant) {
        lead = it;
        break;
      }
    }
    if (lead == rest.mult.end())
      throw PeelingFailure("no Levi-dominant leading weight in " + format_space(c.space) +
                           " character");
    if (lead->second < 0)
      throw PeelingFailure("negative multiplicity " + std::to_string(lead->second) +
                           " at leading weight " + format_weight_parens(lead->first));

    const Weight label = lead->first;
    const Int mult = lead->second;
    const LeviCharacter piece = character_of(Bundle{c.space, label});
    for (const auto& [w, m] : piece.mult) {
      auto it = rest.mult.find(w);
      const Int have = (it == rest.mult.end()) ? 0 : it->second;
      const Int next = checked_sub(have, checked_mul(mult, m));
      if (next < 0)
        throw PeelingFailure("peeling " + format_weight_parens(label) + " drives " +
                             format_weight_parens(w) + " negative");
      if (it == rest.mult.end())
        rest.mult.emplace(w, next);
      else
        it->second = next;
    }
    add_term(out, label, mult);
  }
}

BundleSum tensor(const BundleSum& a, const BundleSum& b) {
  return decompose(tensor(character_of(a), character_of(b)));
}

BundleSum exterior_power(const BundleSum& s, int p) {
  return decompose(exterior_power(character_of(s), p));
}

}  // namespace penrose
