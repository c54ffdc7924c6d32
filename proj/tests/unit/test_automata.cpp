#include "autoplex/automata.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace autoplex;
using autoplex::testing::all_strings;
using autoplex::testing::uniform;

namespace {

Dfa random_dfa(std::mt19937_64& rng, std::size_t q) {
  std::vector<std::array<State, 2>> delta(q);
  for (auto& row : delta) row = {static_cast<State>(rng() % q), static_cast<State>(rng() % q)};
  std::vector<State> accept;
  for (State s = 0; s < q; ++s) {
    if (rng() % 3 == 0) accept.push_back(s);
  }
  return Dfa(q, static_cast<State>(rng() % q), std::move(delta), accept);
}

State walk(const Dfa& m, const BitString& x) {
  State s = m.start();
  for (std::size_t i = 0; i < x.size(); ++i) s = m.transitions()[s][x[i] ? 1 : 0];
  return s;
}

}  // namespace

TEST_CASE("constructor validates indices") {
  CHECK_THROWS_AS(Dfa(2, 2, {{0, 1}, {1, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 0, {{0, 2}, {1, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(2, 0, {{0, 1}, {1, 1}}, {3}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(3, 0, {{0, 1}, {1, 1}}, {}), std::invalid_argument);
}

TEST_CASE("zeros machine") {
  const Dfa m(2, 0, {{0, 1}, {1, 1}}, {0});
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(count_accepted(m, n) == 1);
    CHECK(uniquely_accepts(m, BitString::zeros(n)));
  }
  CHECK_FALSE(accepts(m, BitString::from_text("010")));
  CHECK(m.accept_states() == std::vector<State>{0});
}

TEST_CASE("single all-accepting state") {
  const Dfa m(1, 0, {{0, 0}}, {0});
  CHECK(accepts(m, BitString::from_text("01")));
  CHECK(count_accepted(m, 2) == 4);
  CHECK_FALSE(uniquely_accepts(m, BitString::from_text("01")));
  CHECK(uniquely_accepts(m, BitString{}));
  CHECK(count_accepted(m, 300) == pow2(300));
}

TEST_CASE("run, counts and uniqueness against enumeration") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const Dfa m = random_dfa(rng, uniform(rng, 1, 6));
    const std::size_t n = uniform(rng, 0, 10);
    std::size_t accepted = 0;
    std::vector<BigInt> per_state(m.state_count(), 0);
    for (const BitString& x : all_strings(n)) {
      CHECK(run(m, x) == walk(m, x));
      ++per_state[walk(m, x)];
      accepted += accepts(m, x);
    }
    CHECK(path_counts(m, n) == per_state);
    CHECK(count_accepted(m, n) == accepted);
    const BitString probe = autoplex::testing::random_bits(rng, n);
    CHECK(uniquely_accepts(m, probe) == (accepts(m, probe) && accepted == 1));
  }
}

TEST_CASE("path counts conserve mass") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const Dfa m = random_dfa(rng, uniform(rng, 1, 30));
    const std::size_t n = uniform(rng, 0, 200);
    BigInt total = 0;
    for (const BigInt& c : path_counts(m, n)) total += c;
    CHECK(total == pow2(n));
  }
}

TEST_CASE("shrinking the accept set keeps unique acceptance") {
  std::mt19937_64 rng(53);
  int seen = 0;
  for (int trial = 0; trial < 2000 && seen < 50; ++trial) {
    const Dfa m = random_dfa(rng, uniform(rng, 2, 5));
    const BitString x = autoplex::testing::random_bits(rng, uniform(rng, 0, 6));
    if (!uniquely_accepts(m, x)) continue;
    ++seen;
    CHECK(uniquely_accepts(m.with_accept({run(m, x)}), x));
  }
  CHECK(seen > 0);
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    const Dfa m = random_dfa(rng, uniform(rng, 1, 8));
    const auto j = to_json(m);
    CHECK(j["states"] == m.state_count());
    CHECK(dfa_from_json(j) == m);
    CHECK(dfa_from_json(nlohmann::json::parse(j.dump())) == m);
  }
  CHECK_THROWS_AS(dfa_from_json(nlohmann::json::parse(R"({"states":2})")), std::invalid_argument);
  CHECK_THROWS_AS(
      dfa_from_json(nlohmann::json::parse(R"({"states":1,"start":0,"accept":[],"delta":[[0,1]]})")),
      std::invalid_argument);
}
