/// Permutation tests for maps of F_q, specialized to x -> E_n(1,x):
/// exhaustive image counting, the power-sum criterion, and the 2-to-1
/// criterion on (F_q u V) \ {1/2}, where V = { x in F_{q^2} : x^q = 1-x }.
/// The three verdicts must coincide; disagreement is a bug by construction.

#pragma once

#include <functional>
#include <variant>

#include "dicksonlab/field.hpp"

namespace dicksonlab::pp {

enum class Method { exhaustive, power_sum, two_to_one };

/// Two domain points with equal images. Codes are base-field codes for the
/// exhaustive test and F_{q^2} codes for the 2-to-1 test (where the pair
/// (y, code of 1/2) marks a collision with the excluded quarter point).
struct Collision {
  std::uint64_t x1, x2;
};

/// An image value never attained (kept for completeness; the built-in
/// methods always report collisions or exponents).
struct MissingValue {
  std::uint64_t value;
};

/// The least exponent whose power sum violates the criterion.
struct BadExponent {
  std::uint64_t i;
};

using Witness = std::variant<Collision, MissingValue, BadExponent>;

struct Verdict {
  bool is_pp;
  Method method;
  std::optional<Witness> witness;  // present iff !is_pp
};

using EvalFn = std::function<FieldElement(const FieldElement&)>;

/// Counts the image multiset; reports the first collision in code order.
Verdict is_pp_exhaustive(const EvalFn& f, const FieldSpec& spec);

/// sum_a f(a)^i must be 0 for 0 <= i <= q-2 and -1 for i = q-1 (0^0 = 1).
Verdict is_pp_power_sum(const EvalFn& f, const FieldSpec& spec);

/// V = { x in F_{q^2} : x^q = 1-x }, found by scanning F_{q^2} in code
/// order (algebraically V is 1/2 plus the kernel of z -> z^q + z, but the
/// scan keeps this an independent check). |V| = q, and exactly one member
/// (1/2) lies in F_q. p odd.
std::vector<QuadElement> reflection_set(const FieldSpec& spec);

/// The 2-to-1 criterion: E_n(1,x) permutes F_q iff y -> (y^{n+1} -
/// (1-y)^{n+1})/(2y-1) is 2-to-1 on (F_q u V) \ {1/2} and never equals
/// (n+1)/2^n there. p odd.
Verdict is_pp_two_to_one(std::uint64_t n, const FieldSpec& spec);

/// E_n(0,x) is a permutation iff n = 2k with gcd(k, q-1) = 1.
bool zero_param_is_pp(std::uint64_t n, std::uint64_t q);

/// E_{p^k-1}(1,x) is a permutation iff gcd((p^k-1)/2, q-1) = 1.
/// p odd, 1 <= k <= e.
bool power_form_is_pp(std::uint32_t k, const FieldSpec& spec);

}  // namespace dicksonlab::pp
