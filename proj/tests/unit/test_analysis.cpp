#include "autoplex/acsearch.hpp"
#include "autoplex/analysis.hpp"
#include "autoplex/error.hpp"
#include "autoplex/psc.hpp"
#include "autoplex/witness.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace autoplex;

namespace {

std::vector<BigInt> range(long from, long to, long step = 1) {
  std::vector<BigInt> out;
  for (long m = from; m <= to; m += step) out.emplace_back(m);
  return out;
}

double value(SeriesKind kind, int n, TseqMode mode = TseqMode::scaled) {
  return bound_series(kind, {n}, mode)[0].convert_to<double>();
}

}  // namespace

TEST_CASE("frequency report against sliding counts") {
  const FrequencyReport r = frequency_report(BitString::from_text("0110"), 1);
  CHECK(r.windows == 4);
  CHECK(r.counts == std::vector<std::uint64_t>{2, 2});
  CHECK(r.max_deviation == 0);
  const FrequencyReport r2 = frequency_report(BitString::from_text("0001"), 2);
  CHECK(r2.counts == std::vector<std::uint64_t>{2, 1, 0, 0});
  CHECK(r2.max_deviation == Rational(5, 12));

  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const BitString x = autoplex::testing::random_bits(rng, autoplex::testing::uniform(rng, 6, 400));
    const int k = static_cast<int>(autoplex::testing::uniform(rng, 1, 5));
    const FrequencyReport f = frequency_report(x, k);
    Rational worst = 0;
    for (const BitString& w : autoplex::testing::all_strings(static_cast<std::size_t>(k))) {
      const std::size_t c = occ(w, x);
      CHECK(f.counts[w.window(0, w.size())] == c);
      Rational d = Rational(BigInt(c), BigInt(f.windows)) - Rational(BigInt(1), pow2(static_cast<std::uint64_t>(k)));
      if (d < 0) d = -d;
      if (d > worst) worst = d;
    }
    CHECK(f.max_deviation == worst);
  }
  CHECK_THROWS_AS(frequency_report(BitString::from_text("01"), 3), std::invalid_argument);
  CHECK_THROWS_AS(frequency_report(BitString::from_text("01"), 0), std::invalid_argument);
}

TEST_CASE("sequence and series names") {
  CHECK(parse_sequence_kind("psc") == SequenceKind::psc);
  CHECK(to_string(SequenceKind::tseq) == "tseq");
  CHECK_THROWS_AS(parse_sequence_kind("pi"), std::invalid_argument);
  for (SeriesKind k : {SeriesKind::sup1, SeriesKind::case3, SeriesKind::case1_limit, SeriesKind::case2_limit,
                       SeriesKind::case4_limit, SeriesKind::ic_quarter, SeriesKind::m1_ratio}) {
    CHECK(parse_series_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_series_kind("case5"), std::invalid_argument);
}

TEST_CASE("short prefixes use exact search") {
  for (SequenceKind kind : {SequenceKind::psc, SequenceKind::tseq}) {
    const BitSource& src =
        kind == SequenceKind::psc ? static_cast<const BitSource&>(default_sources().psc) : default_sources().tseq_scaled;
    for (long m = 0; m < static_cast<long>(kExactRateLength); ++m) {
      const RatePoint p = witness_bound(kind, m);
      const auto len = static_cast<std::size_t>(m + 1);
      CHECK(p.source == "exact");
      CHECK(p.states == exact_A(src.slice(0, len)).value);
      CHECK(p.bound == Rational(p.states, BigInt(len)));
    }
  }
  CHECK_THROWS_AS(witness_bound(SequenceKind::psc, -1), std::invalid_argument);
}

TEST_CASE("witness bounds never undercut the true complexity") {
  for (SequenceKind kind : {SequenceKind::psc, SequenceKind::tseq}) {
    const BitSource& src =
        kind == SequenceKind::psc ? static_cast<const BitSource&>(default_sources().psc) : default_sources().tseq_scaled;
    for (const RatePoint& p : rate_profile(kind, range(0, static_cast<long>(kExactSearchCap) - 1))) {
      const auto len = static_cast<std::size_t>(p.m + 1);
      CAPTURE(p.m);
      CHECK(p.states >= exact_A(src.slice(0, len)).value);
    }
  }
}

TEST_CASE("psc profile") {
  const auto points = rate_profile(SequenceKind::psc, range(0, 4000));
  REQUIRE(points.size() == 4001);
  for (const RatePoint& p : points) {
    CAPTURE(p.m);
    CHECK(p.bound == Rational(p.states, p.m + 1));
    CHECK(p.states <= p.m + 3);
    if (p.m >= 38) CHECK(p.bound <= 1);
    if (p.m >= 1000) CHECK(p.source.rfind("case", 0) == 0);
  }
  // zone 7 ends at m = 1537; the Case 3 machine of n = 6 covers its end
  CHECK(witness_bound(SequenceKind::psc, cumulative_length(7) - 1).source == "case3(n=6)");
  CHECK(witness_bound(SequenceKind::psc, cumulative_length(7) - 1).states ==
        build_case(3, 6, 0).state_count());
}

TEST_CASE("tseq profile") {
  const TSequence& t = default_sources().tseq_scaled;
  for (const RatePoint& p : rate_profile(SequenceKind::tseq, range(1, 3000))) {
    CAPTURE(p.m);
    CHECK(p.bound <= 1);
    CHECK(p.bound == Rational(p.states, p.m + 1));
  }
  for (int n = 2; n <= 4; ++n) {
    const RatePoint p = witness_bound(SequenceKind::tseq, t.cumulative_length(n) - 1);
    CHECK(p.source == "M1(n=" + std::to_string(n) + ")");
    CHECK(p.states == build_M1(n, TseqMode::scaled).state_count());
  }
}

TEST_CASE("rates CSV") {
  std::ostringstream os;
  write_rates_csv(os, rate_profile(SequenceKind::psc, {BigInt(1), BigInt(1537)}));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "m,bound_num,bound_den,bound_decimal,source");
  std::getline(in, line);
  CHECK(line.rfind("1,", 0) == 0);
  std::getline(in, line);
  const Rational b(build_case(3, 6, 0).state_count(), 1538);
  std::ostringstream expect;
  expect << "1537," << boost::multiprecision::numerator(b) << ',' << boost::multiprecision::denominator(b) << ','
         << to_decimal_string(b, 6) << ",case3(n=6)";
  CHECK(line == expect.str());
}

TEST_CASE("closed-form series") {
  CHECK(value(SeriesKind::case3, 6) == doctest::Approx(0.703240).epsilon(1e-5));
  CHECK(value(SeriesKind::case3, 50) == doctest::Approx(0.671052).epsilon(1e-5));
  CHECK(value(SeriesKind::case1_limit, 64) == doctest::Approx(0.576496).epsilon(1e-5));
  CHECK(value(SeriesKind::case2_limit, 63) == doctest::Approx(0.408805).epsilon(1e-5));
  CHECK(value(SeriesKind::case4_limit, 61) == doctest::Approx(0.603896).epsilon(1e-5));
  CHECK(value(SeriesKind::sup1, 8) == doctest::Approx(0.506237).epsilon(1e-5));

  // (|T_1| + 4 + 1) / |T_1 T_2| = 7 / 18
  CHECK(bound_series(SeriesKind::m1_ratio, {2})[0] == Rational(7, 18));
  // exact mode: (4 + 4 + 1) / 1028
  CHECK(bound_series(SeriesKind::m1_ratio, {2}, TseqMode::exact)[0] == Rational(9, 1028));

  double prev = 1;
  for (int n = 6; n <= 50; n += 2) {
    if (!series_applies(SeriesKind::case3, n)) continue;
    const double v = value(SeriesKind::case3, n);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(bound_series(SeriesKind::case3, {8}), DomainError);
  CHECK_THROWS_AS(bound_series(SeriesKind::case1_limit, {1}), DomainError);
  CHECK_THROWS_AS(bound_series(SeriesKind::m1_ratio, {4}, TseqMode::exact), RepresentationOverflow);
}

TEST_CASE("ic_quarter is the Case 1 machine on C_1...C_{n+1}") {
  for (int n : {2, 4, 8, 16, 32, 64}) {
    const auto un = static_cast<std::uint64_t>(n);
    // |C_1...C_k| = (k - 1) 2^(k+1) + 2
    const BigInt prefix = BigInt(n - 2) * pow2(un) + 2;
    const BigInt whole = BigInt(n) * pow2(un + 2) + 2;
    const Rational expect(prefix + pow2(un) + pow2(un + 1) + 2 * n, whole);
    CHECK(bound_series(SeriesKind::ic_quarter, {n})[0] == expect);
  }
  CHECK(value(SeriesKind::ic_quarter, 64) > 0.25);
  CHECK(value(SeriesKind::ic_quarter, 64) < 0.254);
}

TEST_CASE("constant-state series") {
  const auto v = constant_state_series(6, {BigInt(1), BigInt(100), BigInt(10000)});
  CHECK(v[0] > v[1]);
  CHECK(v[1] > v[2]);
  CHECK(v[0] < bound_series(SeriesKind::case3, {6})[0]);
  CHECK_THROWS_AS(constant_state_series(8, {BigInt(1)}), DomainError);
  CHECK_THROWS_AS(constant_state_series(6, {BigInt(0)}), DomainError);
}
