#include "dicksonlab/filters.hpp"

#include <numeric>
#include <stdexcept>

#include "dicksonlab/dickson.hpp"

namespace dicksonlab::nec {

int period6_value(std::uint64_t n) {
  static constexpr int table[6] = {1, 1, 0, -1, -1, 0};
  return table[n % 6];
}

bool period6_filter(std::uint64_t n, std::uint64_t p) {
  if (p == 2) return (n + 1) % 3 == 0;
  const std::uint64_t r = n % 6;
  return r != 0 && r != 1;
}

FilterOutcome odd_index_filter(std::uint64_t n, std::uint64_t q,
                               std::uint64_t p) {
  if (n % 2 == 0) return {};
  const std::uint64_t m = (n - 1) / 2;
  if ((m + 1) % p == 0) return {};
  return {true, m % 2 == 1 && std::gcd(m, q - 1) == 1};
}

FilterOutcome mod4_gcd_filter(std::uint64_t n, std::uint64_t q,
                              std::uint64_t p) {
  if (p <= 3 || n % 4 != 1) return {};
  const std::uint64_t g = std::gcd(n + 1, q * q - 1);
  const std::uint64_t expected = ((n + 1) % 3 == 0) ? 6 : 2;
  return {true, g == expected};
}

FilterReport screen_one(std::uint64_t n, std::uint64_t q, std::uint64_t p) {
  FilterReport r;
  r.n = n;
  r.period6 = {true, period6_filter(n, p)};
  r.odd_index = odd_index_filter(n, q, p);
  r.mod4_gcd = mod4_gcd_filter(n, q, p);
  r.overall = (!r.period6.applicable || r.period6.passed) &&
              (!r.odd_index.applicable || r.odd_index.passed) &&
              (!r.mod4_gcd.applicable || r.mod4_gcd.passed);
  return r;
}

std::vector<FilterReport> screen(std::uint64_t n_max, std::uint64_t q,
                                 std::uint64_t p) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<FilterReport> out;
  out.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(screen_one(n, q, p));
  return out;
}

bool gcd_product_identity(std::uint64_t n, std::uint64_t q) {
  if (q % 2 == 0) throw std::invalid_argument("q must be odd");
  if (n % 4 != 1) throw std::invalid_argument("n must be 1 mod 4");
  const std::uint64_t lhs = std::gcd(n + 1, q - 1) * std::gcd(n + 1, q + 1);
  return lhs == 2 * std::gcd(n + 1, q * q - 1);
}

bool square_ratio_biconditional(const QuadElement& theta) {
  const FieldSpec& spec = theta.spec();
  const QuadElement one = spec.quad_one();
  if (theta.is_zero() || theta == one)
    throw std::invalid_argument("theta must avoid 0 and 1");
  const QuadElement y = (theta + one) / (theta - one);
  const bool square_in_base = (y * y).in_base();
  const bool norm_condition =
      theta.pow(spec.q() + 1) == one || theta.pow(spec.q() - 1) == one;
  return square_in_base == norm_condition;
}

bool odd_binomial_self_reciprocal(std::uint64_t m, const FieldElement& x) {
  if (x.is_zero()) throw std::invalid_argument("x must be nonzero");
  const FieldElement lhs = dickson::odd_binomial(2 * m + 2, x);
  const FieldElement rhs =
      x.pow(m) * dickson::odd_binomial(2 * m + 2, x.inverse());
  return lhs == rhs;
}

cpp_int odd_binomial_exact(std::uint64_t m, const cpp_int& x) {
  if (m == 0) return 0;
  cpp_int sum = 0;
  cpp_int x_pow = 1;
  // C(m, 2j+1) built incrementally: multiply by the two next factors
  cpp_int binom = m;  // C(m, 1)
  for (std::uint64_t j = 0;; ++j) {
    sum += binom * x_pow;
    if (2 * j + 3 > m) break;
    binom *= static_cast<std::int64_t>(m - (2 * j + 1));
    binom /= static_cast<std::int64_t>(2 * j + 2);
    binom *= static_cast<std::int64_t>(m - (2 * j + 2));
    binom /= static_cast<std::int64_t>(2 * j + 3);
    x_pow *= x;
  }
  return sum;
}

cpp_int alternating_odd_binomial_sum(std::uint64_t m) {
  return odd_binomial_exact(2 * m + 2, cpp_int(-1));
}

}  // namespace dicksonlab::nec
