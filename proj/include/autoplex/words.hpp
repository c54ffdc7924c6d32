#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autoplex {

/// Packed binary word. Bit i of the word is stored at bit (i % 64) of
/// block (i / 64); unused high bits of the last block are kept zero so
/// that block-wise equality is exact.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length, bool value = false);

  /// Parses ASCII '0'/'1'. Throws std::invalid_argument on anything else.
  static BitString from_text(std::string_view text);
  static BitString zeros(std::size_t n) { return BitString(n, false); }
  static BitString ones(std::size_t n) { return BitString(n, true); }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value);

  void push_back(bool bit);
  void append(const BitString& other);
  void append_repeated(const BitString& other, std::size_t times);

  BitString substr(std::size_t pos, std::size_t len) const;
  BitString repeat(std::size_t times) const;
  BitString reversed() const;

  /// The `len` bits starting at `pos` read as an integer with bit `pos`
  /// most significant, i.e. the word's rank in lexicographic order.
  std::uint64_t window(std::size_t pos, std::size_t len) const;

  std::string to_text() const;

  friend bool operator==(const BitString& a, const BitString& b) noexcept {
    return a.size_ == b.size_ && a.blocks_ == b.blocks_;
  }

 private:
  void trim_tail() noexcept;

  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

BitString operator+(const BitString& a, const BitString& b);

std::ostream& operator<<(std::ostream& os, const BitString& x);

/// Sliding occurrences of w in x. Throws std::invalid_argument if w is empty.
std::size_t occ(const BitString& w, const BitString& x);

/// Occurrences of w in x at positions that are multiples of |w|.
std::size_t occ_block(const BitString& w, const BitString& x);

bool matches_at(const BitString& x, std::size_t pos, const BitString& w) noexcept;

struct Square {
  std::size_t position;
  std::size_t half;
  friend auto operator<=>(const Square&, const Square&) = default;
};

/// Every (i, l) with l >= min_half and x[i..i+l) == x[i+l..i+2l), sorted by (i, l).
std::vector<Square> find_squares(const BitString& x, std::size_t min_half);

/// True iff x has no factor u^k with u nonempty. Requires k >= 2.
bool is_k_power_free(const BitString& x, std::size_t k);

/// Shorter strings first, then lexicographic with 0 < 1.
std::strong_ordering lexlen_compare(const BitString& x, const BitString& y) noexcept;

// Packed binary file: 8-byte little-endian bit length, then the bits
// LSB-first within each byte.
void write_packed(std::ostream& os, const BitString& x);
BitString read_packed(std::istream& is);

}  // namespace autoplex
