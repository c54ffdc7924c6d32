#include "autoplex/tseq.hpp"

#include "autoplex/debruijn.hpp"
#include "autoplex/error.hpp"

#include <cmath>
#include <stdexcept>

namespace autoplex {

namespace {

double log10_of(const BigInt& v) {
  const std::string s = v.str();
  const std::size_t lead = std::min<std::size_t>(s.size(), 17);
  return std::log10(std::stod(s.substr(0, lead))) + static_cast<double>(s.size() - lead);
}

}  // namespace

std::string to_string(TseqMode mode) { return mode == TseqMode::scaled ? "scaled" : "exact"; }

TseqMode parse_tseq_mode(const std::string& text) {
  if (text == "scaled") return TseqMode::scaled;
  if (text == "exact") return TseqMode::exact;
  throw std::invalid_argument("mode must be 'scaled' or 'exact'");
}

TSequence::TSequence(TseqMode mode) : mode_(mode) {}

void TSequence::check_zone(int j) const {
  if (j < 1) throw std::invalid_argument("zone index must be positive");
  if (mode_ == TseqMode::exact && j > kExactZoneLimit) {
    throw RepresentationOverflow("exact-mode f(" + std::to_string(j) +
                                 ") is not representable (its digit count is itself astronomical)");
  }
  if (mode_ == TseqMode::scaled && j > kScaledZoneLimit) {
    throw RepresentationOverflow("scaled zone index above " + std::to_string(kScaledZoneLimit));
  }
}

BigInt TSequence::exponent(int j) const {
  check_zone(j);
  {
    std::lock_guard lock(mutex_);
    auto it = exponent_cache_.find(j);
    if (it != exponent_cache_.end()) return it->second;
  }
  BigInt f;
  if (mode_ == TseqMode::scaled) {
    f = boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(j));
  } else if (j == 1) {
    f = 2;
  } else {
    const BigInt prev = cumulative_length(j - 1);
    f = boost::multiprecision::pow(prev, static_cast<unsigned>(prev));
  }
  std::lock_guard lock(mutex_);
  exponent_cache_.emplace(j, f);
  return f;
}

BigInt TSequence::zone_length(int j) const { return pow2(static_cast<std::uint64_t>(j)) * exponent(j); }

BigInt TSequence::cumulative_length(int j) const {
  BigInt total = 0;
  for (int k = 1; k <= j; ++k) total += zone_length(k);
  return total;
}

SizeMagnitude TSequence::zone_length_magnitude(int j) const {
  SizeMagnitude m;
  if (mode_ == TseqMode::exact && j == kExactZoneLimit + 1) {
    // |T_4| = 16 L^L with L = |T_1 T_2 T_3|: digits ~ L log10 L.
    const BigInt L = cumulative_length(kExactZoneLimit);
    const double log10_L = log10_of(L);
    m.log10_digits = log10_L + std::log10(log10_L);
    return m;
  }
  BigInt len = zone_length(j);
  m.digits = BigInt(len.str().size());
  m.log10_digits = std::log10(static_cast<double>(*m.digits));
  m.exact = std::move(len);
  return m;
}

const BitString& TSequence::debruijn(int j) const {
  std::lock_guard lock(mutex_);
  auto it = debruijn_cache_.find(j);
  if (it != debruijn_cache_.end()) return *it->second;
  BitString d = generate_with_start_bit(j, j % 2 == 1).bits;
  auto [pos, inserted] = debruijn_cache_.emplace(j, std::make_unique<const BitString>(std::move(d)));
  return *pos->second;
}

int TSequence::zone_of(const BigInt& index) const {
  if (index < 0) throw std::out_of_range("negative index");
  int j = 1;
  BigInt cum = zone_length(1);
  while (cum <= index) {
    ++j;
    cum += zone_length(j);  // throws once zones stop being representable
  }
  return j;
}

bool TSequence::bit_at(const BigInt& index) const {
  const int j = zone_of(index);
  const BigInt r = index - cumulative_length(j - 1);
  const BitString& d = debruijn(j);
  return d[static_cast<std::size_t>(r % d.size())];
}

BitString TSequence::slice(const BigInt& from, std::size_t length) const {
  if (length > kPrefixBudget) throw CapExceeded("requested slice exceeds the prefix budget");
  BitString out;
  if (length == 0) return out;
  int j = zone_of(from);
  BigInt offset = from - cumulative_length(j - 1);
  std::size_t remaining = length;
  while (remaining > 0) {
    const BitString& d = debruijn(j);
    const BigInt zone_left = zone_length(j) - offset;
    const std::size_t take = zone_left < remaining ? static_cast<std::size_t>(zone_left) : remaining;
    auto pos = static_cast<std::size_t>(offset % d.size());
    std::size_t left = take;
    while (left > 0) {
      const std::size_t chunk = std::min(left, d.size() - pos);
      out.append(chunk == d.size() ? d : d.substr(pos, chunk));
      left -= chunk;
      pos = 0;
    }
    remaining -= take;
    offset = 0;
    ++j;
  }
  return out;
}

}  // namespace autoplex
