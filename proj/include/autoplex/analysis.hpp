#pragma once

#include "autoplex/bigint.hpp"
#include "autoplex/tseq.hpp"
#include "autoplex/words.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace autoplex {

struct FrequencyReport {
  int k = 0;
  std::uint64_t windows = 0;           // |x| - k + 1
  std::vector<std::uint64_t> counts;   // sliding counts, indexed by word rank
  Rational max_deviation;              // max |count / windows - 2^-k|

  double max_deviation_value() const { return max_deviation.convert_to<double>(); }
};

/// Throws std::invalid_argument unless 1 <= k <= min(|x|, 26).
FrequencyReport frequency_report(const BitString& x, int k);

enum class SequenceKind { psc, tseq };

SequenceKind parse_sequence_kind(const std::string& text);
std::string to_string(SequenceKind kind);

struct RatePoint {
  BigInt m;        // last index of the prefix; the prefix has m + 1 bits
  BigInt states;   // size of the witness used
  Rational bound;  // states / (m + 1)
  std::string source;
};

/// Prefixes of at most this many bits use exact_A.
inline constexpr std::size_t kExactRateLength = 12;

/// Upper bound on A(prefix of m + 1 bits), from the witness the case analysis picks
/// for that prefix length. Every machine used is certified by its length
/// equation; if the preferred machine is not uniquely accepting the other
/// candidate is tried (a machine above |x| + 2 states counts as failing),
/// then exact search (up to its length cap), then the
/// trivial |x| + 2 chain.
RatePoint witness_bound(SequenceKind kind, const BigInt& m, TseqMode mode = TseqMode::scaled);

std::vector<RatePoint> rate_profile(SequenceKind kind, const std::vector<BigInt>& m_values,
                                    TseqMode mode = TseqMode::scaled);

void write_rates_csv(std::ostream& os, const std::vector<RatePoint>& points, unsigned digits = 6);

enum class SeriesKind { sup1, case3, case1_limit, case2_limit, case4_limit, ic_quarter, m1_ratio };

SeriesKind parse_series_kind(const std::string& text);
std::string to_string(SeriesKind kind);

/// Whether the series formula is stated for n.
bool series_applies(SeriesKind kind, int n);

/// Exact closed-form values. Throws DomainError where the formula is not
/// stated for n, RepresentationOverflow for unrepresentable T lengths.
std::vector<Rational> bound_series(SeriesKind kind, const std::vector<int>& n_values,
                                   TseqMode mode = TseqMode::scaled);

/// Case-3 machine kept fixed while the prefix grows by j past the
/// switch-over point.
std::vector<Rational> constant_state_series(int n, const std::vector<BigInt>& j_values);

}  // namespace autoplex
