#include "autoplex/debruijn.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace autoplex;

namespace {

// Every length-n word occurs exactly once cyclically.
bool cyclic_windows_distinct(const std::string& u, int n) {
  if (u.size() != (std::size_t{1} << n)) return false;
  const std::string wrap = u + u.substr(0, static_cast<std::size_t>(n - 1));
  std::set<std::string> seen;
  for (std::size_t i = 0; i < u.size(); ++i) seen.insert(wrap.substr(i, static_cast<std::size_t>(n)));
  return seen.size() == u.size();
}

}  // namespace

TEST_CASE("small lex-least strings") {
  CHECK(generate_lex_least(1).bits.to_text() == "01");
  CHECK(generate_lex_least(2).bits.to_text() == "0011");
  CHECK(generate_lex_least(3).bits.to_text() == "00010111");
  CHECK(generate_lex_least(4).bits.to_text() == "0000100110101111");
  CHECK(generate_lex_least(6).bits.to_text() ==
        "0000001000011000101000111001001011001101001111010101110110111111");
}

TEST_CASE("lex-least against exhaustive search") {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t len = std::size_t{1} << n;
    std::string best;
    std::size_t total = 0;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << len); ++r) {
      const std::string s = autoplex::testing::rank_text(len, r);
      if (!cyclic_windows_distinct(s, n)) continue;
      ++total;
      if (best.empty()) best = s;
      CHECK(is_debruijn(BitString::from_text(s), n));
    }
    CHECK(generate_lex_least(n).bits.to_text() == best);
    // 2^(2^(n-1) - n) cycles, each with 2^n rotations
    CHECK(total == (std::size_t{1} << ((std::size_t{1} << (n - 1)) - n)) * len);
  }
}

TEST_CASE("is_debruijn rejects non-examples") {
  CHECK_FALSE(is_debruijn(BitString::from_text("0101"), 2));
  CHECK_FALSE(is_debruijn(BitString::from_text("001"), 2));
  CHECK_FALSE(is_debruijn(BitString::from_text("00011"), 2));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(autoplex::testing::uniform(rng, 1, 5));
    const BitString u = autoplex::testing::random_bits(rng, std::size_t{1} << n);
    CHECK(is_debruijn(u, n) == cyclic_windows_distinct(u.to_text(), n));
  }
}

TEST_CASE("prefix 0^n, suffix 1^n and cyclic check up to order 14") {
  for (int n = 1; n <= 14; ++n) {
    const BitString d = generate_lex_least(n).bits;
    const auto un = static_cast<std::size_t>(n);
    CHECK(d.substr(0, un) == BitString::zeros(un));
    CHECK(d.substr(d.size() - un, un) == BitString::ones(un));
    if (n <= 10) CHECK(cyclic_windows_distinct(d.to_text(), n));
  }
}

TEST_CASE("rotations") {
  const DeBruijnString d = generate_lex_least(5);
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t a = rng() % 32, b = rng() % 32;
    const DeBruijnString ra = rotate(d, a);
    CHECK(ra.rotation == a);
    CHECK(is_debruijn(ra.bits, 5));
    const std::string s = d.bits.to_text();
    CHECK(ra.bits.to_text() == s.substr(a) + s.substr(0, a));
    const DeBruijnString rab = rotate(ra, b);
    CHECK(rab.rotation == (a + b) % 32);
    CHECK(rab.bits == rotate(d, (a + b) % 32).bits);
  }
  CHECK(rotate_left(BitString::from_text("0011"), 5).to_text() == "0110");
}

TEST_CASE("start bit choice") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(generate_with_start_bit(n, false).bits == generate_lex_least(n).bits);
    const DeBruijnString one = generate_with_start_bit(n, true);
    CHECK(one.bits[0]);
    CHECK(one.rotation == static_cast<std::uint64_t>(n));
    CHECK(is_debruijn(one.bits, n));
  }
}

TEST_CASE("order bounds") {
  CHECK_THROWS(generate_lex_least(0));
  CHECK_THROWS(generate_lex_least(kMaxDeBruijnOrder + 1));
}
