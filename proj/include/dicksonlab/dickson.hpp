/// Evaluation of the Dickson polynomial families, with the reversed
/// second-kind map x -> E_n(1,x) available through several independent
/// routes that must agree exactly:
///
///   * the definitional binomial sum (eval_direct),
///   * the three-term recursion E_n = E_{n-1} - x E_{n-2},
///   * the y-parameterization (y^{n+1} - (1-y)^{n+1}) / (2y-1), which
///     reaches indices up to 2^63 in O(log n) extension-field operations,
///   * the odd-binomial form 2^{-n} f_{n+1}(1-4x),
///   * coefficients of the power series 1 / (1 - t + x t^2).
///
/// In characteristic 2 only the definitional sum, the recursion, and the
/// zero-parameter map are available; everything built on (1-4x) or 1/2^n
/// raises std::domain_error there.

#pragma once

#include "dicksonlab/coeffs.hpp"
#include "dicksonlab/field.hpp"

namespace dicksonlab::dickson {

/// Index caps for the linear-cost evaluators; beyond them use
/// e1_functional / reduce_index.
inline constexpr std::uint64_t kDirectLimit = 1'000'000;
inline constexpr std::uint64_t kRecursiveLimit = 10'000'000;

/// The four definitional sums. kth_kind and reversed_kth_kind carry the
/// kind parameter k (k = 0 gives the classical first kind, k = 1 the
/// second kind); the two second_kind tags fix k = 1.
enum class Family {
  kth_kind,           // variable in the base slot, parameter in (-a)^i
  reversed_kth_kind,  // variable in (-x)^i, parameter in the base slot
  second_kind,
  reversed_second_kind,
};

struct EvalRequest {
  std::uint64_t n;
  FieldElement a;  // parameter
  FieldElement x;  // argument
  Family family = Family::reversed_second_kind;
  std::uint32_t k = 1;  // kind parameter for the kth_kind families
};

/// The definitional sum for any family. O(n) terms; n <= kDirectLimit.
FieldElement eval_direct(const EvalRequest& req);

/// E_n(1,x) by the recursion with seeds E_0 = E_1 = 1. n <= kRecursiveLimit.
FieldElement e1_recursive(std::uint64_t n, const FieldElement& x);

/// E_n(1,x) through the parameterization x = y(1-y); O(log n), p odd.
FieldElement e1_functional(std::uint64_t n, const FieldElement& x);

/// E_n(1, 1/4) = (n+1)/2^n, reducing n+1 mod p and the exponent of 2 mod
/// p-1 independently. p odd.
FieldElement quarter_value(std::uint64_t n, const FieldSpec& spec);

/// f_m(x) = sum_j C(m, 2j+1) x^j: the odd-index binomials of (1+u)^m
/// written in u^2 = x. m <= kDirectLimit.
FieldElement odd_binomial(std::uint64_t m, const FieldElement& x);

/// E_n(1,x) = 2^{-n} f_{n+1}(1-4x). p odd.
FieldElement e1_via_odd_binomial(std::uint64_t n, const FieldElement& x);

/// E_n(0,x): 0 for odd n, (-x)^k for n = 2k.
FieldElement zero_param(std::uint64_t n, const FieldElement& x);

/// Representative of n mod q^2-1 in [1, q^2-1]; 0 maps to 0 (E_0 is the
/// constant 1 and must be treated separately by callers). The reduction is
/// valid at every x except 1/4, where quarter_value applies instead.
std::uint64_t reduce_index(std::uint64_t n, std::uint64_t q);

/// Coefficients 0..order of 1/(1 - t + x t^2); coefficient n is E_n(1,x).
CoeffSeq e1_series(const FieldElement& x, std::size_t order);

/// table[n][c] = E_n(1, element c) for n = 0..n_max, streaming the
/// recursion once per field element. Feeds survey-style sweeps.
std::vector<CoeffSeq> e1_table(const FieldSpec& spec, std::uint64_t n_max);

/// E_n(a,x) == (a^n/b^n) E_n(b, (b^2/a^2) x), both sides by eval_direct.
bool scaling_identity(std::uint64_t n, const FieldElement& a,
                      const FieldElement& b, const FieldElement& x);

/// E_{np^r-1}(1,x) == E_{n-1}(1,x)^{p^r} (1-4x)^{(p^r-1)/2} for p odd and
/// gcd(p,n) = 1; throws if the hypothesis fails.
bool frobenius_identity(std::uint64_t n, std::uint32_t r,
                        const FieldElement& x);

/// E_{p^k-1}(1,x) == (1-4x)^{(p^k-1)/2}. p odd, k >= 1.
bool power_identity(std::uint32_t k, const FieldElement& x);

}  // namespace dicksonlab::dickson
