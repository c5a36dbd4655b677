/// The table S_n = sum_{a in F_q} E_n(1,a) for n = 1..q^2-1, produced two
/// ways: a coefficient scheme that clears denominators in the generating
/// function and back-substitutes a linear recurrence, and a brute-force
/// oracle that just sums the recursion over the field. The two tables
/// must agree entry for entry.
///
/// Pipeline of the scheme, all over F_q[t]:
///   b = coefficients of (t^{q^2} - t)/(t - t^q)   (closed form, checked
///       against the expansion -1 - (t - t^q)^{q-1})
///   c = (1 - t^q + t^{q-1}) sum_{i=1}^{q^2-1} t^i
///       - (t^{2(q-1)} + sum_{k=1}^{q-1} (t-1)^{q-1-k} t^{2k} 4^{-k}) b(t)
///   d solves (t^q - t^{q-1} - 1) sum d_n t^n = sum c_i t^i   (adjusted
///       sums d_n = S_n - (n+1)/2^n); the system is over-determined and
///       every residual equation is re-verified after back-substitution.
///   S_n = d_n + (n+1)/2^n.
///
/// Odd characteristic only.

#pragma once

#include "dicksonlab/coeffs.hpp"
#include "dicksonlab/field.hpp"

namespace dicksonlab::sums {

enum class Method { coefficient_scheme, brute_force };

struct SumTable {
  std::uint64_t q = 0;
  CoeffSeq values;  // values[n-1] = S_n, n = 1..q^2-1
  Method method = Method::brute_force;
};

/// Closed-form coefficients of (t^{q^2}-t)/(t-t^q), length q^2-q+1:
/// -1 at i = 0, and (-1)^{beta+1} C(q-1, beta) at i = alpha + beta q with
/// alpha + beta = q - 1; zero elsewhere.
CoeffSeq kernel_numerator(const FieldSpec& spec);

/// The same sequence by expanding -1 - (t - t^q)^{q-1} term by term;
/// exists as an independent cross-check of the closed form.
CoeffSeq kernel_numerator_expanded(const FieldSpec& spec);

/// Right-hand-side coefficients c_1..c_{q^2+q-1} (dense from index 0; the
/// constant term is asserted to vanish).
CoeffSeq rhs_coeffs(const FieldSpec& spec);

/// Back-substitution for d_1..d_{q^2-1} (slot 0 unused). Writes every
/// index exactly once, then re-checks all q^2+q-1 coefficient equations
/// of the defining polynomial identity; throws std::logic_error on any
/// residual violation.
CoeffSeq solve_adjusted_sums(const CoeffSeq& c, const FieldSpec& spec);

SumTable table_scheme(const FieldSpec& spec);
SumTable table_brute_force(const FieldSpec& spec);

struct RecurrenceViolation {
  int family;          // 1..5, in display order
  std::uint64_t index; // offending n
};

/// Verifies the five recurrence families satisfied by the S-values
/// directly (independent of how the table was produced). Empty result
/// means every identity holds.
std::optional<RecurrenceViolation> check_sum_recurrences(const SumTable& table,
                                                         const CoeffSeq& c);

}  // namespace dicksonlab::sums
