#pragma once

#include "autoplex/words.hpp"

#include <cstdint>

namespace autoplex {

inline constexpr int kMaxDeBruijnOrder = 26;

struct DeBruijnString {
  int order = 0;
  BitString bits;
  /// Left rotation applied to the generating string, in [0, 2^order).
  std::uint64_t rotation = 0;
};

/// Lexicographically least de Bruijn string of order n (FKM: Lyndon words
/// of length dividing n, concatenated in lexicographic order).
DeBruijnString generate_lex_least(int n);

bool is_debruijn(const BitString& u, int n);

/// Left rotation by j; composes additively with the existing rotation.
DeBruijnString rotate(const DeBruijnString& d, std::uint64_t j);

/// Lex-least for b = 0, its left rotation by n for b = 1 (the first 1 of
/// the lex-least string sits at index n).
DeBruijnString generate_with_start_bit(int n, bool b);

BitString rotate_left(const BitString& x, std::size_t j);

}  // namespace autoplex
