#include "autoplex/analysis.hpp"

#include "autoplex/acsearch.hpp"
#include "autoplex/error.hpp"
#include "autoplex/psc.hpp"
#include "autoplex/witness.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace autoplex {

FrequencyReport frequency_report(const BitString& x, int k) {
  if (k < 1 || k > 26) throw std::invalid_argument("word length must lie in [1, 26]");
  const auto uk = static_cast<std::size_t>(k);
  if (uk > x.size()) throw std::invalid_argument("word length exceeds the string");
  FrequencyReport r;
  r.k = k;
  r.windows = x.size() - uk + 1;
  r.counts.assign(std::size_t{1} << k, 0);
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::uint64_t w = x.window(0, uk);
  ++r.counts[w];
  for (std::size_t i = uk; i < x.size(); ++i) {
    w = ((w << 1) | static_cast<std::uint64_t>(x[i])) & mask;
    ++r.counts[w];
  }
  const Rational share(BigInt(1), pow2(uk));
  r.max_deviation = 0;
  for (std::uint64_t c : r.counts) {
    Rational d = Rational(BigInt(c), BigInt(r.windows)) - share;
    if (d < 0) d = -d;
    if (d > r.max_deviation) r.max_deviation = d;
  }
  return r;
}

SequenceKind parse_sequence_kind(const std::string& text) {
  if (text == "psc") return SequenceKind::psc;
  if (text == "tseq") return SequenceKind::tseq;
  throw std::invalid_argument("unknown sequence '" + text + "' (expected psc or tseq)");
}

std::string to_string(SequenceKind kind) { return kind == SequenceKind::psc ? "psc" : "tseq"; }

namespace {

const BitSource& source_of(SequenceKind kind, TseqMode mode) {
  const BitSources& src = default_sources();
  if (kind == SequenceKind::psc) return src.psc;
  return mode == TseqMode::scaled ? src.tseq_scaled : src.tseq_exact;
}

std::optional<RatePoint> certified(const std::function<WitnessSpec()>& build, const BigInt& length,
                                   const std::string& source) {
  try {
    const WitnessSpec spec = build();
    if (!acceptance_length_equation(spec, length).unique()) return std::nullopt;
    const BigInt states = spec.state_count();
    if (states > length + 2) return std::nullopt;  // worse than the trivial chain
    return RatePoint{length - 1, states, Rational(states, length), source};
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

RatePoint fallback(SequenceKind kind, const BigInt& length, TseqMode mode) {
  if (length <= kExactSearchCap) {
    const ComplexityResult r = exact_A(source_of(kind, mode).slice(0, static_cast<std::size_t>(length)));
    return RatePoint{length - 1, BigInt(r.value), Rational(BigInt(r.value), length), "exact"};
  }
  return RatePoint{length - 1, length + 2, Rational(length + 2, length), "trivial"};
}

std::string tag(int case_id, int n) { return "case" + std::to_string(case_id) + "(n=" + std::to_string(n) + ")"; }

// Largest p for which the zone-n machine is kept.
Rational switch_threshold(int case_id, int n) {
  const auto un = static_cast<std::uint64_t>(n);
  const BigInt pn = pow2(un);
  const Rational third(BigInt(n), BigInt(3));
  switch (case_id) {
    case 1:
      return Rational(pn * (n - 1) - n + 2 * pn * (n + 2));
    case 2:
      return Rational(BigInt(2) + n + pn * (n - 1) + 4 * pn);
    case 3:
      return Rational(pn * (n - static_cast<long>(factorize(un).t)) + 1 + 2 * pn * (n + 2)) - third;
    case 4:
      return third + Rational(pn * (n - 1) + 4 * pn);
    default:
      throw std::logic_error("unknown case");
  }
}

RatePoint psc_bound(const BigInt& length) {
  int n = 1;
  while (cumulative_length(static_cast<std::uint64_t>(n) + 2) <= length) ++n;
  const BigInt p = length - cumulative_length(static_cast<std::uint64_t>(n) + 1);
  const int here = case_for(n);
  const int next = case_for(n + 1);
  auto own = [&] { return certified([&] { return build_case(here, n, p); }, length, tag(here, n)); };
  auto ahead = [&] {
    return certified([&] { return build_case_at(next, n + 1, length); }, length, tag(next, n + 1) + "@");
  };
  const bool keep = Rational(p) <= switch_threshold(here, n);
  if (auto r = keep ? own() : ahead()) return *r;
  if (auto r = keep ? ahead() : own()) return *r;
  return fallback(SequenceKind::psc, length, TseqMode::scaled);
}

RatePoint tseq_bound(const BigInt& length, TseqMode mode) {
  const TSequence& t = mode == TseqMode::scaled ? default_sources().tseq_scaled : default_sources().tseq_exact;
  int n = 1;
  while (t.cumulative_length(n + 1) <= length) ++n;
  const BigInt w = length - t.cumulative_length(n);
  const std::string nn = "(n=" + std::to_string(n) + ")";
  std::optional<RatePoint> r;
  if (w == 0) {
    r = certified([&] { return build_M1(n, mode); }, length, "M1" + nn);
  } else if (w <= m2_max_w(n, mode)) {
    r = certified([&] { return build_M2(n, w, mode); }, length, "M2" + nn);
  } else {
    r = certified([&] { return build_M1_at(n + 1, length, mode); }, length,
                  "M1(n=" + std::to_string(n + 1) + ")@");
  }
  if (r) return *r;
  return fallback(SequenceKind::tseq, length, mode);
}

}  // namespace

RatePoint witness_bound(SequenceKind kind, const BigInt& m, TseqMode mode) {
  if (m < 0) throw std::invalid_argument("prefix index must be nonnegative");
  const BigInt length = m + 1;
  if (length <= kExactRateLength) {
    const BitString x = source_of(kind, mode).slice(0, static_cast<std::size_t>(length));
    const ComplexityResult r = exact_A(x);
    return RatePoint{m, BigInt(r.value), Rational(BigInt(r.value), length), "exact"};
  }
  return kind == SequenceKind::psc ? psc_bound(length) : tseq_bound(length, mode);
}

std::vector<RatePoint> rate_profile(SequenceKind kind, const std::vector<BigInt>& m_values, TseqMode mode) {
  std::vector<RatePoint> out;
  out.reserve(m_values.size());
  for (const BigInt& m : m_values) out.push_back(witness_bound(kind, m, mode));
  return out;
}

void write_rates_csv(std::ostream& os, const std::vector<RatePoint>& points, unsigned digits) {
  os << "m,bound_num,bound_den,bound_decimal,source\n";
  for (const RatePoint& p : points) {
    os << p.m << ',' << boost::multiprecision::numerator(p.bound) << ','
       << boost::multiprecision::denominator(p.bound) << ',' << to_decimal_string(p.bound, digits) << ','
       << p.source << '\n';
  }
}

SeriesKind parse_series_kind(const std::string& text) {
  for (SeriesKind k : {SeriesKind::sup1, SeriesKind::case3, SeriesKind::case1_limit, SeriesKind::case2_limit,
                       SeriesKind::case4_limit, SeriesKind::ic_quarter, SeriesKind::m1_ratio}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown series '" + text + "'");
}

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::sup1:
      return "sup1";
    case SeriesKind::case3:
      return "case3";
    case SeriesKind::case1_limit:
      return "case1_limit";
    case SeriesKind::case2_limit:
      return "case2_limit";
    case SeriesKind::case4_limit:
      return "case4_limit";
    case SeriesKind::ic_quarter:
      return "ic_quarter";
    case SeriesKind::m1_ratio:
      return "m1_ratio";
  }
  return {};
}

bool series_applies(SeriesKind kind, int n) {
  switch (kind) {
    case SeriesKind::sup1:
    case SeriesKind::m1_ratio:
      return n >= 1;
    case SeriesKind::case3:
      return case_applies(3, n);
    case SeriesKind::case1_limit:
    case SeriesKind::ic_quarter:
      return case_applies(1, n);
    case SeriesKind::case2_limit:
      return case_applies(2, n);
    case SeriesKind::case4_limit:
      return case_applies(4, n);
  }
  return false;
}

namespace {

Rational series_value(SeriesKind kind, int n, TseqMode mode) {
  const auto un = static_cast<std::uint64_t>(n);
  const Rational third(BigInt(n), BigInt(3));
  const BigInt pn = pow2(un);
  switch (kind) {
    case SeriesKind::case3: {
      const BigInt tail = 2 * pn * (n + 2);
      return Rational(cumulative_length(un) + n + 2 * pn + 1 + tail) /
             (Rational(cumulative_length(un + 1) + 1 + tail) - third);
    }
    case SeriesKind::case1_limit: {
      const BigInt tail = 2 * pn * (n + 2);
      return Rational(cumulative_length(un) + 1 + n + 2 * pn + tail,
                      cumulative_length(un + 1) - n + pn * (n - 1) + tail);
    }
    case SeriesKind::case2_limit:
      return Rational(cumulative_length(un) + 2 + 2 * n + 2 * pn + 4 * pn,
                      cumulative_length(un + 1) + 2 + n + pn * (n - 1) + 4 * pn);
    case SeriesKind::case4_limit: {
      const auto t = static_cast<long>(factorize(un + 1).t);
      return (Rational(cumulative_length(un) + 2 * pn * t + 4 * pn) + 4 * third) /
             (Rational(cumulative_length(un + 1) + pn * (n - 1) + 4 * pn) + third);
    }
    case SeriesKind::ic_quarter:
      return Rational(build_case(1, n, 0).state_count(), cumulative_length(un + 1));
    case SeriesKind::sup1: {
      const TSequence t(mode);
      const BigInt prev = t.cumulative_length(n - 1);
      const BigInt zone = t.zone_length(n);
      return Rational(prev + zone + 2 * pn + 1, prev + 2 * zone + pn);
    }
    case SeriesKind::m1_ratio: {
      const TSequence t(mode);
      return Rational(t.cumulative_length(n - 1) + pn + 1, t.cumulative_length(n));
    }
  }
  throw std::logic_error("unknown series");
}

}  // namespace

std::vector<Rational> bound_series(SeriesKind kind, const std::vector<int>& n_values, TseqMode mode) {
  std::vector<Rational> out;
  out.reserve(n_values.size());
  for (int n : n_values) {
    if (!series_applies(kind, n)) {
      throw DomainError("series " + to_string(kind) + " is not stated for n = " + std::to_string(n));
    }
    out.push_back(series_value(kind, n, mode));
  }
  return out;
}

std::vector<Rational> constant_state_series(int n, const std::vector<BigInt>& j_values) {
  if (!case_applies(3, n)) throw DomainError("constant-state series needs n even and not a power of two");
  const auto un = static_cast<std::uint64_t>(n);
  const BigInt pn = pow2(un);
  const BigInt tail = 2 * pn * (n + 2);
  const Rational third(BigInt(n), BigInt(3));
  const Rational num(cumulative_length(un) + n + 2 * pn + 1 + tail);
  std::vector<Rational> out;
  for (const BigInt& j : j_values) {
    if (j < 1) throw DomainError("j must be positive");
    out.push_back(num / (Rational(cumulative_length(un + 1) + 1 + tail + j) - third));
  }
  return out;
}

}  // namespace autoplex
