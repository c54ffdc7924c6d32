#pragma once

#include "autoplex/bigint.hpp"
#include "autoplex/bitsource.hpp"
#include "autoplex/words.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace autoplex {

enum class TseqMode {
  scaled,  // f(j) = j^j
  exact,   // f(1) = 2, f(j) = |T_1...T_{j-1}|^|T_1...T_{j-1}|
};

std::string to_string(TseqMode mode);
TseqMode parse_tseq_mode(const std::string& text);

/// Decimal size of |T_j| when the value itself may be unrepresentable.
struct SizeMagnitude {
  std::optional<BigInt> exact;   // the length itself, when representable
  std::optional<BigInt> digits;  // its decimal digit count, when representable
  double log10_digits = 0;       // log10 of the digit count
};

/// T = d_1^{f(1)} d_2^{f(2)} ...  with d_j[0] = 1 iff j is odd.
class TSequence final : public BitSource {
 public:
  /// Highest zone with an exact value in exact mode.
  static constexpr int kExactZoneLimit = 3;
  static constexpr int kScaledZoneLimit = 200;

  explicit TSequence(TseqMode mode = TseqMode::scaled);

  TseqMode mode() const noexcept { return mode_; }

  /// f(j). Throws RepresentationOverflow when the value is not representable.
  BigInt exponent(int j) const;
  /// |T_j| = 2^j f(j).
  BigInt zone_length(int j) const;
  /// |T_1 ... T_j|; 0 for j = 0.
  BigInt cumulative_length(int j) const;

  SizeMagnitude zone_length_magnitude(int j) const;

  /// d_j: lex-least de Bruijn string, rotated left by j when j is odd.
  const BitString& debruijn(int j) const;

  bool bit_at(const BigInt& index) const override;
  BitString slice(const BigInt& from, std::size_t length) const override;
  BitString prefix(std::size_t m) const { return slice(0, m); }

  /// Upper bound on prefix() sizes accepted, in bits.
  static constexpr std::size_t kPrefixBudget = std::size_t{1} << 30;

 private:
  void check_zone(int j) const;
  int zone_of(const BigInt& index) const;

  TseqMode mode_;
  mutable std::mutex mutex_;
  mutable std::map<int, BigInt> exponent_cache_;
  mutable std::map<int, std::unique_ptr<const BitString>> debruijn_cache_;
};

}  // namespace autoplex
