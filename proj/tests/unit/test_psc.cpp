#include "autoplex/debruijn.hpp"
#include "autoplex/error.hpp"
#include "autoplex/psc.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace autoplex;

namespace {

std::string rotl(const std::string& s, std::size_t j) {
  j %= s.size();
  return s.substr(j) + s.substr(0, j);
}

// Zone n built straight from the definition, on std::string.
std::string zone_oracle(int n) {
  std::size_t s = 0, t = static_cast<std::size_t>(n);
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  const std::string d = generate_lex_least(n).bits.to_text();
  std::string out;
  for (std::size_t j = 0; j < (std::size_t{1} << s); ++j) {
    for (std::size_t r = 0; r < t; ++r) out += rotl(d, j);
  }
  return out;
}

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1).s == 0);
  CHECK(factorize(1).t == 1);
  CHECK(factorize(6).s == 1);
  CHECK(factorize(6).t == 3);
  CHECK(factorize(64).s == 6);
  CHECK(factorize(64).t == 1);
  CHECK(factorize(40).t == 5);
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  for (std::uint64_t n = 1; n < 2000; ++n) {
    const auto f = factorize(n);
    CHECK((f.t << f.s) == n);
    CHECK(f.t % 2 == 1);
    CHECK(is_power_of_two(n) == (f.t == 1));
  }
}

TEST_CASE("zone lengths") {
  CHECK(cumulative_length(0) == 0);
  BigInt sum = 0;
  for (std::uint64_t n = 1; n <= 70; ++n) {
    CHECK(zone_length(n) == BigInt(n) * pow2(n));
    sum += zone_length(n);
    CHECK(cumulative_length(n) == sum);
  }
}

TEST_CASE("golden zones") {
  const PscSequence psc;
  CHECK(psc.zone(1).to_text() == "01");
  CHECK(psc.zone(2).to_text() == "00110110");
  CHECK(psc.zone(3).to_text() == "000101110001011100010111");
  CHECK(psc.zone(4).to_text() ==
        "0000100110101111"
        "0001001101011110"
        "0010011010111100"
        "0100110101111000");
  const std::string b0 = "0000001000011000101000111001001011001101001111010101110110111111";
  const std::string b1 = "0000010000110001010001110010010110011010011110101011101101111110";
  CHECK(psc.zone(6).to_text() == b0 + b0 + b0 + b1 + b1 + b1);
}

TEST_CASE("zones match the definition") {
  const PscSequence psc;
  for (int n = 1; n <= 12; ++n) {
    CHECK(psc.zone(n).to_text() == zone_oracle(n));
    CHECK(psc.zone(n).size() == static_cast<std::size_t>(zone_length(static_cast<std::uint64_t>(n))));
  }
}

TEST_CASE("prefix, slice and bit_at agree") {
  const PscSequence psc;
  std::string oracle;
  for (int n = 1; n <= 9; ++n) oracle += zone_oracle(n);
  CHECK(psc.prefix(oracle.size()).to_text() == oracle);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t from = autoplex::testing::uniform(rng, 0, oracle.size() - 1);
    const std::size_t len = autoplex::testing::uniform(rng, 0, std::min<std::size_t>(300, oracle.size() - from));
    CHECK(psc.slice(from, len).to_text() == oracle.substr(from, len));
    CHECK(psc.bit_at(from) == (oracle[from] == '1'));
  }
}

TEST_CASE("v tail") {
  const PscSequence psc;
  CHECK(psc.v_tail(3).to_text() == "0111");
  for (int n = 1; n <= 12; ++n) {
    const auto un = static_cast<std::size_t>(n);
    BitString d = BitString::zeros(un);
    d.push_back(true);
    d.append(psc.v_tail(n));
    CHECK(d == psc.debruijn(n));
  }
}

TEST_CASE("Champernowne property") {
  const PscSequence psc;
  for (int n = 1; n <= 12; ++n) CHECK(psc.verify_zone(n));

  // block counts against occ_block
  for (int n = 1; n <= 6; ++n) {
    const BitString& z = psc.zone(n);
    const auto counts = block_counts(z, n);
    for (const BitString& w : autoplex::testing::all_strings(static_cast<std::size_t>(n))) {
      CHECK(counts[w.window(0, w.size())] == occ_block(w, z));
    }
  }
}

TEST_CASE("another de Bruijn choice keeps the property") {
  const PscSequence psc([](int n) { return generate_with_start_bit(n, true).bits; });
  for (int n = 1; n <= 10; ++n) CHECK(psc.verify_zone(n));
  CHECK(psc.zone(2).to_text() == "11001001");
}

TEST_CASE("a non de Bruijn choice is rejected") {
  const PscSequence psc([](int n) { return BitString::zeros(std::size_t{1} << n); });
  CHECK_THROWS_AS(psc.zone(3), DomainError);
  CHECK_THROWS_AS(psc.verify_zone(3), DomainError);
}

TEST_CASE("loop lemmas at desk scale") {
  const PscSequence psc;
  for (int j : {3, 4, 5}) {
    const LoopLemmaReport r = psc.verify_loop_lemma(j);
    CHECK(r.ok());
    CHECK(r.squares_checked > 0);
    const std::uint64_t mod = (j & (j - 1)) == 0 ? (std::uint64_t{1} << j) - 1 : std::uint64_t{1} << j;
    CHECK(r.modulus == mod);
    for (std::size_t h : r.half_lengths) CHECK(h % mod == 0);
  }
}

TEST_CASE("zone cap") {
  const PscSequence psc({}, 8);
  CHECK(psc.zone(8).size() == 8 * 256);
  CHECK_THROWS_AS(psc.zone(9), CapExceeded);
}
