#pragma once

#include "autoplex/bigint.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace autoplex {

/// All integer solutions of a x + b y = c: (x0 + d step_x, y0 + d step_y), d in Z.
struct TwoVarFamily {
  BigInt gcd;
  BigInt x0, y0;
  BigInt step_x, step_y;  // (b/g, -a/g)
};

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets u, v with a u + b v = g.
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v);

/// nullopt iff gcd(a, b) does not divide c. Requires (a, b) != (0, 0).
std::optional<TwoVarFamily> solve_two(const BigInt& a, const BigInt& b, const BigInt& c);

/// constant + sum coefficients[i] * v[i] = target, v[i] >= lower_bounds[i].
struct DioCertificate {
  std::vector<BigInt> coefficients;
  BigInt constant;
  BigInt target;
  std::vector<BigInt> lower_bounds;
  std::vector<std::vector<BigInt>> solutions;  // sorted, exhaustive

  bool satisfied_by(const std::vector<BigInt>& v) const;
  bool unique() const noexcept { return solutions.size() == 1; }
};

/// Exhaustive enumeration over the bounded region; coefficients must be
/// positive. Solutions come out in lexicographic order.
DioCertificate enumerate_nonneg(std::vector<BigInt> coefficients, BigInt constant, BigInt target,
                                std::vector<BigInt> lower_bounds = {});

nlohmann::json to_json(const DioCertificate& cert);

}  // namespace autoplex
