/// Necessary-condition screens on the index n for x -> E_n(1,x) to
/// permute F_q, plus the arithmetic facts they rest on. Every filter is
/// reported as an (applicable, passed) pair: a filter whose hypothesis
/// fails at (n, q) says nothing and must not be conflated with a pass.
/// Survivors form a superset of the true permutation set; soundness is
/// checked against exhaustive testing elsewhere.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "dicksonlab/field.hpp"

namespace dicksonlab::nec {

using boost::multiprecision::cpp_int;

/// E_n(1,1) as an integer: the sequence has period 6 with values
/// 1,1,0,-1,-1,0 from n = 0.
int period6_value(std::uint64_t n);

/// Filter from comparing E_n(1,0) = 1 with E_n(1,1): for p = 2 requires
/// 3 | n+1; for odd p requires n != 0,1 (mod 6).
bool period6_filter(std::uint64_t n, std::uint64_t p);

struct FilterOutcome {
  bool applicable = false;
  bool passed = false;  // meaningful only when applicable
};

/// For odd n = 2m+1 with p not dividing m+1: m must be odd and
/// gcd(m, q-1) = 1.
FilterOutcome odd_index_filter(std::uint64_t n, std::uint64_t q,
                               std::uint64_t p);

/// For p > 3 and n = 1 (mod 4): gcd(n+1, q^2-1) must be 6 when 3 | n+1
/// and 2 otherwise. Nothing is claimed for n = 3 (mod 4).
FilterOutcome mod4_gcd_filter(std::uint64_t n, std::uint64_t q,
                              std::uint64_t p);

struct FilterReport {
  std::uint64_t n = 0;
  FilterOutcome period6;  // always applicable
  FilterOutcome odd_index;
  FilterOutcome mod4_gcd;
  bool overall = false;  // every applicable filter passed
};

FilterReport screen_one(std::uint64_t n, std::uint64_t q, std::uint64_t p);
std::vector<FilterReport> screen(std::uint64_t n_max, std::uint64_t q,
                                 std::uint64_t p);

/// gcd(n+1, q-1) * gcd(n+1, q+1) == 2 * gcd(n+1, q^2-1) for odd q and
/// n = 1 (mod 4). Self-test: throws on a hypothesis violation, returns
/// whether the identity holds.
bool gcd_product_identity(std::uint64_t n, std::uint64_t q);

/// With y = (theta+1)/(theta-1): y^2 lies in F_q iff theta^{q+1} = 1 or
/// theta^{q-1} = 1. Self-test of the biconditional at one theta
/// (theta outside {0, 1}).
bool square_ratio_biconditional(const QuadElement& theta);

/// f_{2m+2}(x) == x^m f_{2m+2}(1/x) at a nonzero point.
bool odd_binomial_self_reciprocal(std::uint64_t m, const FieldElement& x);

/// f_m(x) over the integers by direct summation (exact, characteristic-free).
cpp_int odd_binomial_exact(std::uint64_t m, const cpp_int& x);

/// f_{2m+2}(-1) = sum_j (-1)^j C(2m+2, 2j+1), exactly; zero iff m is odd.
cpp_int alternating_odd_binomial_sum(std::uint64_t m);

}  // namespace dicksonlab::nec
