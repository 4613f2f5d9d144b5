#include <random>
#include <vector>

#include "doctest.h"
#include "penrose/character.hpp"
#include "penrose/errors.hpp"

using namespace penrose;

namespace {

Int mult_of(const LeviCharacter& c, const Weight& w) {
  auto it = c.mult.find(w);
  return it == c.mult.end() ? 0 : it->second;
}

// Uniform valid label on the space: uncrossed nodes nonnegative.
Weight random_label(const FlagSpace& s, std::mt19937& rng) {
  std::uniform_int_distribution<Int> any(-4, 4), nonneg(0, 4);
  Weight w(s.n);
  for (int node = 1; node <= s.n; ++node)
    w[node - 1] = is_crossed(s, node) ? any(rng) : nonneg(rng);
  return w;
}

}  // namespace

TEST_CASE("character weights of small bundles") {
  SUBCASE("line bundles have a single weight") {
    const LeviCharacter c = character_of(make_bundle(space_F(3), {2, -1, 0}));
    CHECK(c.mult.size() == 1);
    CHECK(mult_of(c, {2, -1, 0}) == 1);
  }
  SUBCASE("rank-two block") {
    const LeviCharacter c = character_of(make_bundle(space_G(3), {1, 0, 1}));
    CHECK(total_dim(c) == 2);
    CHECK(mult_of(c, {1, 0, 1}) == 1);
    CHECK(mult_of(c, {1, 1, -1}) == 1);
  }
  SUBCASE("vector bundle on projective space") {
    const LeviCharacter c = character_of(make_bundle(space_M(3), {1, 0, 1}));
    CHECK(total_dim(c) == 3);
    CHECK(mult_of(c, {1, 0, 1}) == 1);
    CHECK(mult_of(c, {1, 1, -1}) == 1);
    CHECK(mult_of(c, {2, -1, 0}) == 1);
  }
  SUBCASE("symmetric square") {
    const LeviCharacter c = character_of(make_bundle(space_M(3), {0, 2, 0}));
    CHECK(total_dim(c) == 6);
    CHECK(mult_of(c, {0, 2, 0}) == 1);
    CHECK(mult_of(c, {2, -2, 2}) == 1);
    CHECK(mult_of(c, {2, 0, -2}) == 1);
    CHECK(mult_of(c, {1, 0, 1}) == 1);
    CHECK(mult_of(c, {1, 1, -1}) == 1);
    CHECK(mult_of(c, {2, -1, 0}) == 1);
  }
}

TEST_CASE("character dimension equals bundle rank") {
  std::mt19937 rng(7);
  const std::vector<FlagSpace> spaces = {space_F(3), space_G(3), space_M(3),
                                         space_M(2), space_M(4), space_generic(4, {2})};
  for (const auto& s : spaces)
    for (int trial = 0; trial < 40; ++trial) {
      const Bundle b = make_bundle(s, random_label(s, rng));
      CHECK(total_dim(character_of(b)) == rank(b));
    }
}

TEST_CASE("tensor of characters") {
  const FlagSpace g = space_G(3);
  const BundleSum product =
      tensor(sum_of(make_bundle(g, {1, 0, 1})), sum_of(make_bundle(g, {1, 0, 1})));
  CHECK(product == make_sum(g, {{{2, 0, 2}, 1}, {{2, 1, 0}, 1}}));
}

TEST_CASE("tensor against a sum distributes") {
  const FlagSpace g = space_G(3);
  const BundleSum forms = make_sum(g, {{{1, 0, 1}, 1}, {{-2, 1, 0}, 1}});
  const BundleSum product = tensor(forms, sum_of(make_bundle(g, {1, 0, 1})));
  CHECK(product == make_sum(g, {{{2, 0, 2}, 1}, {{2, 1, 0}, 1}, {{-1, 1, 1}, 1}}));
}

TEST_CASE("tensor on the base space") {
  const FlagSpace m = space_M(3);
  CHECK(tensor(sum_of(make_bundle(m, {1, 0, 1})), sum_of(make_bundle(m, {1, 0, 1}))) ==
        make_sum(m, {{{2, 0, 2}, 1}, {{2, 1, 0}, 1}}));
  // dual vector times vector: adjoint plus trivial
  CHECK(tensor(sum_of(make_bundle(m, {-2, 1, 0})), sum_of(make_bundle(m, {1, 0, 1}))) ==
        make_sum(m, {{{-1, 1, 1}, 1}, {{0, 0, 0}, 1}}));
}

TEST_CASE("tensor is commutative and rank-multiplicative") {
  std::mt19937 rng(11);
  const std::vector<FlagSpace> spaces = {space_G(3), space_M(3), space_M(2)};
  for (const auto& s : spaces)
    for (int trial = 0; trial < 12; ++trial) {
      const BundleSum a = sum_of(make_bundle(s, random_label(s, rng)));
      const BundleSum b = sum_of(make_bundle(s, random_label(s, rng)));
      const BundleSum ab = tensor(a, b);
      CHECK(ab == tensor(b, a));
      CHECK(rank(ab) == rank(a) * rank(b));
    }
  CHECK_THROWS_AS(tensor(character_of(make_bundle(space_G(3), {0, 0, 0})),
                         character_of(make_bundle(space_M(3), {0, 0, 0}))),
                  InvalidArgument);
}

TEST_CASE("exterior powers of a rank-three sum") {
  const FlagSpace g = space_G(3);
  const BundleSum forms = make_sum(g, {{{1, 0, 1}, 1}, {{-2, 1, 0}, 1}});
  CHECK(rank(forms) == 3);
  CHECK(exterior_power(forms, 0) == sum_of(make_bundle(g, {0, 0, 0})));
  CHECK(exterior_power(forms, 1) == forms);
  CHECK(exterior_power(forms, 2) == make_sum(g, {{{2, 1, 0}, 1}, {{-1, 1, 1}, 1}}));
  CHECK(exterior_power(forms, 3) == sum_of(make_bundle(g, {0, 2, 0})));
  CHECK(is_empty(exterior_power(forms, 4)));
  CHECK_THROWS_AS(exterior_power(character_of(forms), -1), InvalidArgument);
}

TEST_CASE("exterior power on the base space") {
  const FlagSpace m = space_M(3);
  const BundleSum one_forms = make_sum(m, {{{1, 0, 1}, 1}, {{-2, 1, 0}, 1}});
  CHECK(exterior_power(one_forms, 2) ==
        make_sum(m, {{{2, 1, 0}, 1}, {{-1, 1, 1}, 1}, {{0, 0, 0}, 1}, {{-3, 0, 1}, 1}}));
}

TEST_CASE("exterior power ranks follow the binomial coefficients") {
  std::mt19937 rng(13);
  const std::vector<FlagSpace> spaces = {space_G(3), space_M(3), space_M(2)};
  for (const auto& s : spaces)
    for (int trial = 0; trial < 10; ++trial) {
      // keep ranks small so high powers stay cheap
      BundleSum sum = empty_sum(s);
      while (rank(sum) < 2 || rank(sum) > 6) {
        sum = empty_sum(s);
        add_term(sum, random_label(s, rng));
        if (trial % 2) add_term(sum, random_label(s, rng));
      }
      const Int r = rank(sum);
      Int total = 0;
      for (int p = 0; p <= r; ++p) {
        const Int rp = rank(exterior_power(sum, p));
        CHECK(rp == binomial(r, p));
        total += rp;
      }
      CHECK(total == (Int(1) << r));
      CHECK(is_empty(exterior_power(sum, static_cast<int>(r) + 1)));
    }
}

TEST_CASE("decompose inverts character_of on pinned examples") {
  const std::vector<std::pair<FlagSpace, Weight>> cases = {
      {space_F(3), {2, -1, 0}}, {space_G(3), {1, 0, 1}},   {space_M(3), {0, 2, 0}},
      {space_M(3), {-2, 3, 0}}, {space_M(3), {-2, 2, 2}},  {space_M(2), {-1, 2}},
      {space_M(4), {1, 0, 1, 1}}};
  for (const auto& [s, w] : cases) {
    const Bundle b = make_bundle(s, w);
    CHECK(decompose(character_of(b)) == sum_of(b));
  }
}

TEST_CASE("decompose inverts character_of on random labels") {
  std::mt19937 rng(2026);
  const std::vector<FlagSpace> spaces = {space_F(3), space_G(3),          space_M(3),
                                         space_F(2), space_M(2),          space_M(1),
                                         space_M(4), space_generic(4, {2})};
  int checked = 0;
  for (int trial = 0; trial < 70; ++trial)
    for (const auto& s : spaces) {
      const Bundle b = make_bundle(s, random_label(s, rng));
      REQUIRE(decompose(character_of(b)) == sum_of(b));
      ++checked;
    }
  CHECK(checked >= 500);
}

TEST_CASE("decompose inverts character_of on random sums") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<Int> mults(1, 3);
  const std::vector<FlagSpace> spaces = {space_G(3), space_M(3), space_M(2)};
  for (const auto& s : spaces)
    for (int trial = 0; trial < 15; ++trial) {
      BundleSum sum = empty_sum(s);
      add_term(sum, random_label(s, rng), mults(rng));
      add_term(sum, random_label(s, rng), mults(rng));
      REQUIRE(decompose(character_of(sum)) == sum);
    }
}

TEST_CASE("decompose rejects what is not a representation") {
  const FlagSpace m = space_M(3);

  SUBCASE("missing interior weight") {
    LeviCharacter c = character_of(make_bundle(m, {1, 0, 1}));
    c.mult.erase(Weight{1, 1, -1});
    CHECK_THROWS_AS(decompose(c), PeelingFailure);
  }
  SUBCASE("headless multiset") {
    LeviCharacter c = character_of(make_bundle(m, {1, 0, 1}));
    c.mult.erase(Weight{1, 0, 1});
    CHECK_THROWS_AS(decompose(c), PeelingFailure);
  }
  SUBCASE("negative multiplicity") {
    LeviCharacter c{m, {}};
    c.mult[{0, 0, 0}] = -1;
    CHECK_THROWS_AS(decompose(c), PeelingFailure);
  }
}

TEST_CASE("zero character decomposes to the empty sum") {
  const LeviCharacter zero{space_M(3), {}};
  CHECK(is_zero(zero));
  CHECK(is_empty(decompose(zero)));
}
