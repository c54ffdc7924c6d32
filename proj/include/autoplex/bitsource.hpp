#pragma once

#include "autoplex/bigint.hpp"
#include "autoplex/words.hpp"

#include <cstddef>

namespace autoplex {

/// A lazily indexable infinite binary sequence.
class BitSource {
 public:
  virtual ~BitSource() = default;
  virtual bool bit_at(const BigInt& index) const = 0;
  /// Bits [from, from + length).
  virtual BitString slice(const BigInt& from, std::size_t length) const = 0;
};

}  // namespace autoplex
