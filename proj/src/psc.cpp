#include "autoplex/psc.hpp"

#include "autoplex/debruijn.hpp"
#include "autoplex/error.hpp"

#include <stdexcept>
#include <string>

namespace autoplex {

ZoneFactorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  ZoneFactorization f{n, 0, n};
  while ((f.t & 1u) == 0) {
    f.t >>= 1;
    ++f.s;
  }
  return f;
}

bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

BigInt cumulative_length(std::uint64_t n) {
  if (n == 0) return 0;
  return BigInt(n - 1) * pow2(n + 1) + 2;
}

BigInt zone_length(std::uint64_t n) { return BigInt(n) * pow2(n); }

std::vector<std::uint64_t> block_counts(const BitString& x, int k) {
  if (k < 1 || k > kMaxDeBruijnOrder) throw std::invalid_argument("block_counts: unsupported word length");
  std::vector<std::uint64_t> counts(std::size_t{1} << k, 0);
  const auto len = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i + len <= x.size(); i += len) ++counts[x.window(i, len)];
  return counts;
}

PscSequence::PscSequence(DeBruijnChoice choice, int zone_cap)
    : choice_(std::move(choice)), zone_cap_(zone_cap) {
  if (!choice_) choice_ = [](int order) { return generate_lex_least(order).bits; };
  if (zone_cap_ < 1) throw std::invalid_argument("zone cap must be positive");
}

const BitString& PscSequence::debruijn(int n) const {
  std::lock_guard lock(mutex_);
  auto it = debruijn_cache_.find(n);
  if (it != debruijn_cache_.end()) return *it->second;
  BitString d = choice_(n);
  if (!is_debruijn(d, n)) throw DomainError("injected string is not de Bruijn of order " + std::to_string(n));
  auto [pos, inserted] = debruijn_cache_.emplace(n, std::make_unique<const BitString>(std::move(d)));
  return *pos->second;
}

void PscSequence::append_zone_bits(BitString& out, int n, std::uint64_t offset, std::uint64_t count) const {
  const BitString& d = debruijn(n);
  const ZoneFactorization f = factorize(static_cast<std::uint64_t>(n));
  const std::uint64_t period = std::uint64_t{1} << n;
  const std::uint64_t block = period * f.t;
  std::uint64_t pos = offset;
  const std::uint64_t end = offset + count;
  while (pos < end) {
    const std::uint64_t j = pos / block;
    const BitString rotated = rotate_left(d, static_cast<std::size_t>(j));
    const std::uint64_t block_end = std::min(end, (j + 1) * block);
    while (pos < block_end) {
      const std::uint64_t in_period = pos % period;
      const std::uint64_t take = std::min(period - in_period, block_end - pos);
      if (in_period == 0 && take == period) {
        out.append(rotated);
      } else {
        out.append(rotated.substr(static_cast<std::size_t>(in_period), static_cast<std::size_t>(take)));
      }
      pos += take;
    }
  }
}

const BitString& PscSequence::zone(int n) const {
  if (n < 1) throw std::invalid_argument("zone order must be positive");
  if (n > zone_cap_) {
    throw CapExceeded("zone " + std::to_string(n) + " exceeds materialization cap " + std::to_string(zone_cap_));
  }
  {
    std::lock_guard lock(mutex_);
    auto it = zone_cache_.find(n);
    if (it != zone_cache_.end()) return *it->second;
  }
  BitString z;
  const auto len = static_cast<std::uint64_t>(n) << n;
  append_zone_bits(z, n, 0, len);
  std::lock_guard lock(mutex_);
  auto [pos, inserted] = zone_cache_.emplace(n, std::make_unique<const BitString>(std::move(z)));
  return *pos->second;
}

bool PscSequence::bit_at(const BigInt& index) const {
  if (index < 0) throw std::out_of_range("negative index");
  int n = 1;
  while (cumulative_length(static_cast<std::uint64_t>(n)) <= index) ++n;
  if (n > kMaxDeBruijnOrder) throw CapExceeded("index lies in zone " + std::to_string(n) + ", beyond the de Bruijn cap");
  const auto r = static_cast<std::uint64_t>(index - cumulative_length(static_cast<std::uint64_t>(n - 1)));
  const BitString& d = debruijn(n);
  const ZoneFactorization f = factorize(static_cast<std::uint64_t>(n));
  const std::uint64_t period = std::uint64_t{1} << n;
  const std::uint64_t j = r / (period * f.t);
  return d[static_cast<std::size_t>((j + r % period) % period)];
}

BitString PscSequence::slice(const BigInt& from, std::size_t length) const {
  if (from < 0) throw std::out_of_range("negative index");
  BitString out;
  if (length == 0) return out;
  int n = 1;
  while (cumulative_length(static_cast<std::uint64_t>(n)) <= from) ++n;
  auto offset = static_cast<std::uint64_t>(from - cumulative_length(static_cast<std::uint64_t>(n - 1)));
  std::uint64_t remaining = length;
  while (remaining > 0) {
    if (n > kMaxDeBruijnOrder) throw CapExceeded("slice reaches beyond the de Bruijn cap");
    const std::uint64_t zone_len = static_cast<std::uint64_t>(n) << n;
    const std::uint64_t take = std::min(remaining, zone_len - offset);
    append_zone_bits(out, n, offset, take);
    remaining -= take;
    offset = 0;
    ++n;
  }
  return out;
}

BitString PscSequence::v_tail(int n) const {
  const BitString& d = debruijn(n);
  const auto un = static_cast<std::size_t>(n);
  if (!matches_at(d, 0, BitString::zeros(un)) || !d[un]) {
    throw DomainError("v_tail needs d_n with prefix 0^n 1");
  }
  return d.substr(un + 1, d.size() - un - 1);
}

bool PscSequence::verify_zone(int n) const {
  for (std::uint64_t c : block_counts(zone(n), n)) {
    if (c != 1) return false;
  }
  return true;
}

LoopLemmaReport PscSequence::verify_loop_lemma(int j) const {
  if (j < 1) throw std::invalid_argument("loop lemma order must be positive");
  const auto uj = static_cast<std::uint64_t>(j);
  LoopLemmaReport report;
  report.j = j;
  if (uj % 2 == 1) {
    report.modulus = std::uint64_t{1} << uj;
  } else if (is_power_of_two(uj)) {
    report.modulus = (std::uint64_t{1} << uj) - 1;
  } else {
    throw DomainError("loop lemma is only stated for odd j or j a power of two");
  }
  const std::vector<Square> squares = find_squares(zone(j), static_cast<std::size_t>(j));
  report.squares_checked = squares.size();
  for (const Square& sq : squares) {
    report.half_lengths.insert(sq.half);
    if (sq.half % report.modulus != 0) report.violations.push_back(sq);
  }
  return report;
}

}  // namespace autoplex
