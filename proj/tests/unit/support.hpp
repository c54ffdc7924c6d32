#pragma once

#include "autoplex/words.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace autoplex::testing {

inline BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1);
  return x;
}

// Bit 0 is the most significant bit of r.
inline BitString from_rank(std::size_t n, std::uint64_t r) {
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, (r >> (n - 1 - i)) & 1);
  return x;
}

inline std::vector<BitString> all_strings(std::size_t n) {
  std::vector<BitString> out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) out.push_back(from_rank(n, r));
  return out;
}

inline std::string rank_text(std::size_t n, std::uint64_t r) { return from_rank(n, r).to_text(); }

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace autoplex::testing
