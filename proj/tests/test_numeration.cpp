#include <doctest.h>

#include <random>
#include <vector>

#include "naive.hpp"
#include "parryac/errors.hpp"
#include "parryac/numeration.hpp"

using namespace parryac;

namespace {

UDigits digits(std::initializer_list<std::uint32_t> d) { return UDigits{std::vector<std::uint32_t>(d)}; }

std::vector<Morphism> small_grid() {
  std::vector<Morphism> out;
  for (std::uint32_t p = 1; p <= 5; ++p) {
    for (std::uint32_t q = 1; q <= p; ++q) {
      out.push_back(make_morphism(p, q, Family::Simple));
      if (q < p) out.push_back(make_morphism(p, q, Family::NonSimple));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("U sequence") {
  const auto non31 = make_morphism(3, 1, Family::NonSimple);
  const std::vector<int> expected{1, 4, 14, 48, 164};
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(u_value(non31, k) == expected[k]);

  const auto s32 = make_morphism(3, 2, Family::Simple);
  CHECK(u_value(s32, 0) == 1);
  CHECK(u_value(s32, 1) == 4);
  CHECK(u_value(s32, 2) == 14);
}

TEST_CASE("U is strictly increasing and bounded by (p+1) U_N") {
  for (const auto& m : small_grid()) {
    // |phi(A)| = p + 1 = (p+1) U_0, so the bound is only strict from N = 1 on.
    CHECK(u_value(m, 1) == m.p() + 1);
    for (std::size_t k = 1; k < 40; ++k) {
      CHECK(u_value(m, k) < u_value(m, k + 1));
      CHECK(u_value(m, k + 1) < u_value(m, k) * (m.p() + 1));
    }
  }
}

TEST_CASE("U_k and its B count agree with naive iteration") {
  for (const auto& m : small_grid()) {
    const naive::Rule rule{m.p(), m.q(), m.is_simple()};
    for (std::size_t k = 0; k < 8; ++k) {
      const std::string img = rule.power("A", k);
      CHECK(u_value(m, k) == BigInt(img.size()));
      CHECK(u_b_count(m, k) == BigInt(naive::count_b(img)));
    }
  }
}

TEST_CASE("normal U-representation examples") {
  const auto non31 = make_morphism(3, 1, Family::NonSimple);
  const auto s32 = make_morphism(3, 2, Family::Simple);
  CHECK(normal_u_rep(non31, 7, 4) == digits({0, 0, 1, 3}));
  CHECK(normal_u_rep(non31, 157, 4) == digits({3, 0, 3, 1}));
  CHECK(normal_u_rep(non31, 7) == digits({1, 3}));
  CHECK(normal_u_rep(s32, 5) == digits({1, 1}));
  CHECK(normal_u_rep(s32, 2) == digits({2}));
  CHECK(normal_u_rep(s32, 2, 2) == digits({0, 2}));
  CHECK(normal_u_rep(non31, 0) == digits({0}));
  // min_places never truncates.
  CHECK(normal_u_rep(non31, 157, 1) == digits({3, 0, 3, 1}));
}

TEST_CASE("u_rep_value") {
  const auto non31 = make_morphism(3, 1, Family::NonSimple);
  const auto s32 = make_morphism(3, 2, Family::Simple);
  CHECK(u_rep_value(non31, digits({3, 0, 3, 1})) == 157);
  CHECK(u_rep_value(non31, digits({0})) == 0);
  CHECK(u_rep_value(s32, digits({1, 1})) == 5);
  // Non-normal strings are accepted.
  CHECK(u_rep_value(s32, digits({0, 9})) == 9);
}

TEST_CASE("greedy representation: roundtrip, digit bound, greedy choice, padding") {
  for (const auto& m : small_grid()) {
    for (int n = 0; n <= 10'000; ++n) {
      const UDigits d = normal_u_rep(m, n);
      REQUIRE(u_rep_value(m, d) == n);
      BigInt residual = n;
      for (std::size_t j = d.places(); j-- > 0;) {
        const auto dj = d.at_power(j);
        CHECK(dj <= m.p());
        CHECK(BigInt(dj) == residual / u_value(m, j));
        residual -= u_value(m, j) * dj;
      }
      if (n > 0) CHECK(d.digits.front() != 0);
      if (n % 97 == 0) {
        const UDigits padded = normal_u_rep(m, n, d.places() + 3);
        CHECK(padded.places() == d.places() + 3);
        CHECK(u_rep_value(m, padded) == n);
        for (std::size_t j = 0; j < padded.places(); ++j) CHECK(padded.at_power(j) == d.at_power(j));
      }
    }
  }
}

TEST_CASE("prefix decomposition examples") {
  const auto non31 = make_morphism(3, 1, Family::NonSimple);
  CHECK(prefix_decomposition(non31, 0).empty());
  CHECK(prefix_decomposition(non31, 7) == std::vector<PowerBlock>{{1, 1}, {0, 3}});
  CHECK(prefix_decomposition(non31, 14) == std::vector<PowerBlock>{{2, 1}, {1, 0}, {0, 0}});
}

TEST_CASE("prefix decomposition rebuilds the prefix (sampled n up to 1e5)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick(1, 100'000);
  for (const auto& m : small_grid()) {
    const FiniteWord u = fixed_point_prefix(m, 100'000);
    std::vector<int> ns{1, 2, 3, 100'000};
    for (int i = 0; i < 40; ++i) ns.push_back(pick(rng));
    for (int n : ns) {
      FiniteWord rebuilt;
      for (const auto& block : prefix_decomposition(m, n)) {
        const auto len = static_cast<std::size_t>(u_value(m, block.power));
        for (std::uint32_t r = 0; r < block.exponent; ++r) rebuilt.append(u.prefix(len));
      }
      CHECK(rebuilt == u.prefix(static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("prefix B counts") {
  const auto non31 = make_morphism(3, 1, Family::NonSimple);
  CHECK(prefix_b_count(non31, 7) == 1);
  CHECK(prefix_b_count(non31, 1) == 0);
  CHECK(prefix_b_count(non31, 157) == 45);
  CHECK(prefix_b_count(non31, 0) == 0);
  CHECK_THROWS_AS(prefix_b_count_nonsimple(make_morphism(3, 2, Family::Simple), 5), FamilyMismatch);
}

TEST_CASE("prefix B counts match direct counting for n up to 1e5") {
  for (const auto& m : small_grid()) {
    const FiniteWord u = fixed_point_prefix(m, 100'000);
    std::size_t running = 0;
    for (std::size_t n = 1; n <= u.size(); ++n) {
      running += u[n - 1] == Letter::B ? 1 : 0;
      if (n <= 2'000 || n % 37 == 0) {
        REQUIRE(prefix_b_count(m, n) == running);
        if (!m.is_simple()) REQUIRE(prefix_b_count_nonsimple(m, n) == running);
      }
    }
  }
}

TEST_CASE("greedy_top_index") {
  const auto non31 = make_morphism(3, 1, Family::NonSimple);
  CHECK(greedy_top_index(non31, 0) == 0);
  CHECK(greedy_top_index(non31, 3) == 0);
  CHECK(greedy_top_index(non31, 4) == 1);
  CHECK(greedy_top_index(non31, 163) == 3);
  CHECK(greedy_top_index(non31, 164) == 4);
  CHECK_THROWS_AS(greedy_top_index(non31, -1), ArgumentError);
}
