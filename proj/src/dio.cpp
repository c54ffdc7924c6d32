#include "autoplex/dio.hpp"

#include <stdexcept>

namespace autoplex {

BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

std::optional<TwoVarFamily> solve_two(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a == 0 && b == 0) throw std::invalid_argument("solve_two: a and b are both zero");
  BigInt u, v;
  const BigInt g = extended_gcd(a, b, u, v);
  if (c % g != 0) return std::nullopt;
  const BigInt k = c / g;
  return TwoVarFamily{g, u * k, v * k, b / g, -(a / g)};
}

bool DioCertificate::satisfied_by(const std::vector<BigInt>& v) const {
  if (v.size() != coefficients.size()) return false;
  BigInt sum = constant;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lower_bounds[i]) return false;
    sum += coefficients[i] * v[i];
  }
  return sum == target;
}

namespace {

void enumerate_from(const DioCertificate& cert, std::size_t i, const BigInt& remaining, std::vector<BigInt>& current,
                    std::vector<std::vector<BigInt>>& out) {
  const BigInt& coeff = cert.coefficients[i];
  const BigInt& low = cert.lower_bounds[i];
  if (i + 1 == cert.coefficients.size()) {
    if (remaining % coeff == 0 && remaining / coeff >= low) {
      current[i] = remaining / coeff;
      out.push_back(current);
    }
    return;
  }
  // Later variables need at least their lower bounds' worth of the total.
  BigInt reserve = 0;
  for (std::size_t k = i + 1; k < cert.coefficients.size(); ++k) reserve += cert.coefficients[k] * cert.lower_bounds[k];
  for (BigInt value = low; coeff * value + reserve <= remaining; ++value) {
    current[i] = value;
    enumerate_from(cert, i + 1, remaining - coeff * value, current, out);
  }
}

}  // namespace

DioCertificate enumerate_nonneg(std::vector<BigInt> coefficients, BigInt constant, BigInt target,
                                std::vector<BigInt> lower_bounds) {
  if (coefficients.empty()) throw std::invalid_argument("enumerate_nonneg: no variables");
  for (const BigInt& c : coefficients) {
    if (c <= 0) throw std::invalid_argument("enumerate_nonneg: coefficients must be positive");
  }
  if (lower_bounds.empty()) lower_bounds.assign(coefficients.size(), 0);
  if (lower_bounds.size() != coefficients.size()) throw std::invalid_argument("enumerate_nonneg: bounds size mismatch");
  for (const BigInt& b : lower_bounds) {
    if (b < 0) throw std::invalid_argument("enumerate_nonneg: lower bounds must be nonnegative");
  }
  DioCertificate cert{std::move(coefficients), std::move(constant), std::move(target), std::move(lower_bounds), {}};
  const BigInt remaining = cert.target - cert.constant;
  if (remaining >= 0) {
    std::vector<BigInt> current(cert.coefficients.size());
    enumerate_from(cert, 0, remaining, current, cert.solutions);
  }
  return cert;
}

nlohmann::json to_json(const DioCertificate& cert) {
  auto strings = [](const std::vector<BigInt>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& x : v) arr.push_back(x.str());
    return arr;
  };
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : cert.solutions) sols.push_back(strings(s));
  return {{"coefficients", strings(cert.coefficients)},
          {"constant", cert.constant.str()},
          {"target", cert.target.str()},
          {"lower_bounds", strings(cert.lower_bounds)},
          {"solutions", sols},
          {"unique", cert.unique()}};
}

}  // namespace autoplex
