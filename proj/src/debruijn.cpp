#include "autoplex/debruijn.hpp"

#include "autoplex/error.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace autoplex {

namespace {

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("de Bruijn order must be positive");
  if (n > kMaxDeBruijnOrder) {
    throw CapExceeded("de Bruijn order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxDeBruijnOrder));
  }
}

}  // namespace

DeBruijnString generate_lex_least(int n) {
  check_order(n);
  const std::size_t len = std::size_t{1} << n;
  DeBruijnString out{n, BitString(), 0};
  // Duval-style successor over prenecklaces; a word is emitted when its
  // length divides n, which yields exactly the Lyndon words in order.
  std::vector<std::uint8_t> w{0};
  w.reserve(static_cast<std::size_t>(n));
  while (!w.empty()) {
    if (n % static_cast<int>(w.size()) == 0) {
      for (std::uint8_t b : w) out.bits.push_back(b != 0);
    }
    const std::size_t m = w.size();
    for (std::size_t i = m; i < static_cast<std::size_t>(n); ++i) w.push_back(w[i - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
    if (!w.empty()) w.back() = 1;
  }
  if (out.bits.size() != len) throw std::logic_error("FKM produced a string of the wrong length");
  return out;
}

bool is_debruijn(const BitString& u, int n) {
  if (n < 1 || n > 62) return false;
  const std::uint64_t len = std::uint64_t{1} << n;
  if (u.size() != len) return false;
  const std::uint64_t mask = len - 1;
  std::vector<bool> seen(len, false);
  std::uint64_t v = 0;
  for (int i = 0; i < n - 1; ++i) v = (v << 1) | u[static_cast<std::size_t>(i)];
  for (std::uint64_t i = 0; i < len; ++i) {
    v = ((v << 1) | u[static_cast<std::size_t>((i + n - 1) % len)]) & mask;
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

BitString rotate_left(const BitString& x, std::size_t j) {
  if (x.empty()) return x;
  j %= x.size();
  return x.substr(j, x.size() - j) + x.substr(0, j);
}

DeBruijnString rotate(const DeBruijnString& d, std::uint64_t j) {
  const std::uint64_t len = std::uint64_t{1} << d.order;
  if (j >= len) throw std::out_of_range("rotation must lie in [0, 2^n)");
  return {d.order, rotate_left(d.bits, j), (d.rotation + j) % len};
}

DeBruijnString generate_with_start_bit(int n, bool b) {
  DeBruijnString d = generate_lex_least(n);
  return b ? rotate(d, static_cast<std::uint64_t>(n)) : d;
}

}  // namespace autoplex
