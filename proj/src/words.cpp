#include "autoplex/words.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace autoplex {

namespace {

std::size_t block_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitString::BitString(std::size_t length, bool value)
    : blocks_(block_count(length), value ? ~std::uint64_t{0} : 0), size_(length) {
  trim_tail();
}

BitString BitString::from_text(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    if (c == '1') out.blocks_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return out;
}

bool BitString::at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("bit index out of range");
  return (*this)[i];
}

void BitString::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("bit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    blocks_[i >> 6] |= mask;
  } else {
    blocks_[i >> 6] &= ~mask;
  }
}

void BitString::push_back(bool bit) {
  if ((size_ & 63) == 0) blocks_.push_back(0);
  if (bit) blocks_[size_ >> 6] |= std::uint64_t{1} << (size_ & 63);
  ++size_;
}

void BitString::append(const BitString& other) {
  if (other.size_ == 0) return;
  const std::size_t shift = size_ & 63;
  if (shift == 0) {
    blocks_.insert(blocks_.end(), other.blocks_.begin(), other.blocks_.end());
    size_ += other.size_;
    return;
  }
  const std::size_t new_size = size_ + other.size_;
  blocks_.resize(block_count(new_size), 0);
  std::size_t dst = size_ >> 6;
  for (std::uint64_t word : other.blocks_) {
    blocks_[dst] |= word << shift;
    if (dst + 1 < blocks_.size()) blocks_[dst + 1] |= word >> (64 - shift);
    ++dst;
  }
  size_ = new_size;
  trim_tail();
}

void BitString::append_repeated(const BitString& other, std::size_t times) {
  for (std::size_t r = 0; r < times; ++r) append(other);
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) throw std::out_of_range("substring out of range");
  BitString out(len);
  const std::size_t shift = pos & 63;
  const std::size_t first = pos >> 6;
  for (std::size_t b = 0; b < out.blocks_.size(); ++b) {
    std::uint64_t word = blocks_[first + b] >> shift;
    if (shift != 0 && first + b + 1 < blocks_.size()) word |= blocks_[first + b + 1] << (64 - shift);
    out.blocks_[b] = word;
  }
  out.trim_tail();
  return out;
}

BitString BitString::repeat(std::size_t times) const {
  BitString out;
  out.append_repeated(*this, times);
  return out;
}

BitString BitString::reversed() const {
  BitString out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) out.set(size_ - 1 - i, true);
  }
  return out;
}

std::uint64_t BitString::window(std::size_t pos, std::size_t len) const {
  if (len > 64) throw std::invalid_argument("window longer than 64 bits");
  if (pos > size_ || len > size_ - pos) throw std::out_of_range("window out of range");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i) v = (v << 1) | static_cast<std::uint64_t>((*this)[pos + i]);
  return v;
}

std::string BitString::to_text() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

void BitString::trim_tail() noexcept {
  const std::size_t used = size_ & 63;
  if (used != 0 && !blocks_.empty()) blocks_.back() &= (std::uint64_t{1} << used) - 1;
}

BitString operator+(const BitString& a, const BitString& b) {
  BitString out = a;
  out.append(b);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BitString& x) { return os << x.to_text(); }

bool matches_at(const BitString& x, std::size_t pos, const BitString& w) noexcept {
  if (pos > x.size() || w.size() > x.size() - pos) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (x[pos + i] != w[i]) return false;
  }
  return true;
}

std::size_t occ(const BitString& w, const BitString& x) {
  if (w.empty()) throw std::invalid_argument("occ: empty pattern");
  if (w.size() > x.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + w.size() <= x.size(); ++i) {
    if (matches_at(x, i, w)) ++count;
  }
  return count;
}

std::size_t occ_block(const BitString& w, const BitString& x) {
  if (w.empty()) throw std::invalid_argument("occ_block: empty pattern");
  std::size_t count = 0;
  for (std::size_t i = 0; i + w.size() <= x.size(); i += w.size()) {
    if (matches_at(x, i, w)) ++count;
  }
  return count;
}

std::vector<Square> find_squares(const BitString& x, std::size_t min_half) {
  if (min_half == 0) throw std::invalid_argument("find_squares: min_half must be positive");
  std::vector<Square> out;
  const std::size_t n = x.size();
  // run = length of the agreement x[i..] vs x[i+l..], scanned right to left.
  for (std::size_t l = min_half; 2 * l <= n; ++l) {
    std::size_t run = 0;
    for (std::size_t i = n - l; i-- > 0;) {
      run = (x[i] == x[i + l]) ? run + 1 : 0;
      if (run >= l) out.push_back({i, l});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_k_power_free(const BitString& x, std::size_t k) {
  if (k < 2) throw std::invalid_argument("is_k_power_free: k must be at least 2");
  const std::size_t n = x.size();
  // u^k at i with |u| = l  <=>  x[j] == x[j+l] for all j in [i, i+(k-1)l).
  for (std::size_t l = 1; k * l <= n; ++l) {
    const std::size_t need = (k - 1) * l;
    std::size_t run = 0;
    for (std::size_t i = n - l; i-- > 0;) {
      run = (x[i] == x[i + l]) ? run + 1 : 0;
      if (run >= need) return false;
    }
  }
  return true;
}

std::strong_ordering lexlen_compare(const BitString& x, const BitString& y) noexcept {
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

void write_packed(std::ostream& os, const BitString& x) {
  std::uint64_t n = x.size();
  unsigned char header[8];
  for (int b = 0; b < 8; ++b) header[b] = static_cast<unsigned char>((n >> (8 * b)) & 0xff);
  os.write(reinterpret_cast<const char*>(header), 8);
  std::vector<char> bytes((x.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) bytes[i / 8] = static_cast<char>(bytes[i / 8] | (1 << (i % 8)));
  }
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

BitString read_packed(std::istream& is) {
  unsigned char header[8];
  if (!is.read(reinterpret_cast<char*>(header), 8)) throw std::runtime_error("packed bits: truncated header");
  std::uint64_t n = 0;
  for (int b = 7; b >= 0; --b) n = (n << 8) | header[b];
  std::vector<char> bytes((n + 7) / 8);
  if (!is.read(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw std::runtime_error("packed bits: truncated payload");
  }
  BitString out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((static_cast<unsigned char>(bytes[i / 8]) >> (i % 8)) & 1) out.set(i, true);
  }
  return out;
}

}  // namespace autoplex
