#pragma once

#include "autoplex/bigint.hpp"
#include "autoplex/bitsource.hpp"
#include "autoplex/words.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

namespace autoplex {

struct ZoneFactorization {
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;  // odd
};

/// n = 2^s * t with t odd. Throws std::invalid_argument for n = 0.
ZoneFactorization factorize(std::uint64_t n);

bool is_power_of_two(std::uint64_t n) noexcept;

/// |C_1 ... C_n| = sum_{k<=n} k 2^k = (n - 1) 2^(n+1) + 2, and 0 for n = 0.
BigInt cumulative_length(std::uint64_t n);

/// |C_n| = n 2^n.
BigInt zone_length(std::uint64_t n);

struct LoopLemmaReport {
  int j = 0;
  std::uint64_t modulus = 0;
  std::size_t squares_checked = 0;
  std::set<std::size_t> half_lengths;
  std::vector<Square> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Pierce-Shields Champernowne sequence C = C_1 C_2 ...  Zone C_n with
/// n = 2^s t is B_{n,0} ... B_{n,2^s-1}, B_{n,j} = (d_{n,j})^t.
class PscSequence final : public BitSource {
 public:
  using DeBruijnChoice = std::function<BitString(int order)>;

  static constexpr int kDefaultZoneCap = 20;

  /// Default choice is the lexicographically least de Bruijn string.
  explicit PscSequence(DeBruijnChoice choice = {}, int zone_cap = kDefaultZoneCap);

  int zone_cap() const noexcept { return zone_cap_; }

  /// d_n for this sequence (cached).
  const BitString& debruijn(int n) const;

  /// C_n, materialized. Throws CapExceeded above the zone cap.
  const BitString& zone(int n) const;

  bool bit_at(const BigInt& index) const override;
  BitString slice(const BigInt& from, std::size_t length) const override;
  BitString prefix(std::size_t m) const { return slice(0, m); }

  /// v_n with d_n = 0^n 1 v_n. Requires d_n to start with 0^n 1.
  BitString v_tail(int n) const;

  /// occ_block(x, C_n) == 1 for every x of length n.
  bool verify_zone(int n) const;

  /// Squares of half-length >= j inside C_j; every half-length must be a
  /// multiple of 2^j (j odd) or 2^j - 1 (j a power of two).
  LoopLemmaReport verify_loop_lemma(int j) const;

 private:
  void append_zone_bits(BitString& out, int n, std::uint64_t offset, std::uint64_t count) const;

  DeBruijnChoice choice_;
  int zone_cap_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<const BitString>> debruijn_cache_;
  mutable std::map<int, std::unique_ptr<const BitString>> zone_cache_;
};

/// occ_block of every length-k word of x at once, indexed by the word's rank.
std::vector<std::uint64_t> block_counts(const BitString& x, int k);

}  // namespace autoplex
