#include "autoplex/dio.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace autoplex;

namespace {

BigInt euclid(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Nested loops over the whole box.
void box(const std::vector<long>& c, const std::vector<long>& lo, long rest, std::size_t i, std::vector<long>& v,
         std::vector<std::vector<BigInt>>& out) {
  if (i == c.size()) {
    if (rest == 0) out.emplace_back(v.begin(), v.end());
    return;
  }
  for (long x = lo[i]; c[i] * x <= rest; ++x) {
    v[i] = x;
    box(c, lo, rest - c[i] * x, i + 1, v, out);
  }
}

std::vector<std::vector<BigInt>> box_solutions(const std::vector<long>& c, long constant, long target,
                                               const std::vector<long>& lo) {
  std::vector<std::vector<BigInt>> out;
  std::vector<long> v(c.size());
  box(c, lo, target - constant, 0, v, out);
  return out;
}

}  // namespace

TEST_CASE("extended gcd") {
  BigInt u, v;
  CHECK(extended_gcd(240, 46, u, v) == 2);
  CHECK(240 * u + 46 * v == 2);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const BigInt a = static_cast<long>(rng() % 2001) - 1000;
    const BigInt b = static_cast<long>(rng() % 2001) - 1000;
    const BigInt g = extended_gcd(a, b, u, v);
    CHECK(g == euclid(a, b));
    CHECK(a * u + b * v == g);
  }
  const BigInt big_a = pow2(200) + 1, big_b = pow2(150) * 3;
  const BigInt g = extended_gcd(big_a, big_b, u, v);
  CHECK(big_a * u + big_b * v == g);
}

TEST_CASE("two-variable families") {
  CHECK_FALSE(solve_two(4, 6, 5).has_value());
  const auto f = solve_two(3, 5, 14);
  REQUIRE(f);
  CHECK(3 * f->x0 + 5 * f->y0 == 14);
  CHECK(f->step_x == 5);
  CHECK(f->step_y == -3);
  CHECK_THROWS_AS(solve_two(0, 0, 1), std::invalid_argument);

  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    const BigInt a = static_cast<long>(rng() % 201) - 100;
    const BigInt b = static_cast<long>(rng() % 201) - 100;
    const BigInt c = static_cast<long>(rng() % 2001) - 1000;
    if (a == 0 && b == 0) continue;
    const auto fam = solve_two(a, b, c);
    const BigInt g = euclid(a, b);
    CHECK(fam.has_value() == (c % g == 0));
    if (!fam) continue;
    for (long d = -3; d <= 3; ++d) CHECK(a * (fam->x0 + d * fam->step_x) + b * (fam->y0 + d * fam->step_y) == c);
  }
}

TEST_CASE("enumeration examples") {
  const auto c = enumerate_nonneg({3, 5}, 0, 14);
  CHECK(c.solutions == std::vector<std::vector<BigInt>>{{3, 1}});
  CHECK(c.unique());
  CHECK(c.satisfied_by({3, 1}));
  CHECK_FALSE(c.satisfied_by({0, 1}));
  CHECK(enumerate_nonneg({2, 3}, 0, 12).solutions == std::vector<std::vector<BigInt>>{{0, 4}, {3, 2}, {6, 0}});
  CHECK(enumerate_nonneg({2, 3}, 0, 12, {1, 1}).solutions == std::vector<std::vector<BigInt>>{{3, 2}});
  CHECK(enumerate_nonneg({2}, 20, 12).solutions.empty());
  CHECK(enumerate_nonneg({4, 6}, 0, 13).solutions.empty());
  CHECK_THROWS_AS(enumerate_nonneg({}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_nonneg({3, 0}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_nonneg({3, -2}, 0, 1), std::invalid_argument);
}

TEST_CASE("enumeration against the full box") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = autoplex::testing::uniform(rng, 1, 4);
    std::vector<long> c(k), lo(k);
    std::vector<BigInt> bc(k), blo(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<long>(autoplex::testing::uniform(rng, 1, 12));
      lo[i] = static_cast<long>(autoplex::testing::uniform(rng, 0, 2));
      bc[i] = c[i];
      blo[i] = lo[i];
    }
    const long constant = static_cast<long>(autoplex::testing::uniform(rng, 0, 10));
    const long target = static_cast<long>(autoplex::testing::uniform(rng, 0, 60));
    const auto cert = enumerate_nonneg(bc, constant, target, blo);
    CHECK(cert.solutions == box_solutions(c, constant, target, lo));
    for (const auto& s : cert.solutions) CHECK(cert.satisfied_by(s));
  }
}

TEST_CASE("big coefficients") {
  const BigInt a = pow2(70) - 1, b = pow2(71);
  const BigInt target = 7 + a * 5 + b * 9;
  const auto cert = enumerate_nonneg({a, b}, 7, target);
  CHECK(cert.solutions == std::vector<std::vector<BigInt>>{{5, 9}});
}

TEST_CASE("JSON renders integers as strings") {
  const auto j = to_json(enumerate_nonneg({pow2(79), 3}, 1, pow2(80) + 3));
  CHECK(j["target"] == (pow2(80) + 3).str());
  CHECK(j["coefficients"][1] == "3");
  CHECK(j["solutions"][0][1] == ((pow2(80) + 2) / 3).str());
  CHECK(j["unique"].is_boolean());
  CHECK(j["solutions"].is_array());
}
