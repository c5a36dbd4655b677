/// Dense polynomial / truncated power-series coefficient sequences over a
/// field, indexed by exponent from 0. Schoolbook arithmetic throughout:
/// exactness matters here, speed does not.

#pragma once

#include <cstddef>

#include "dicksonlab/field.hpp"

namespace dicksonlab {

using CoeffSeq = std::vector<FieldElement>;

CoeffSeq coeff_zeros(const FieldSpec& spec, std::size_t len);

/// Degree ignoring trailing zeros; 0 for the zero sequence.
std::size_t poly_degree(const CoeffSeq& f);

CoeffSeq poly_add(const CoeffSeq& a, const CoeffSeq& b);
CoeffSeq poly_sub(const CoeffSeq& a, const CoeffSeq& b);
CoeffSeq poly_mul(const CoeffSeq& a, const CoeffSeq& b);
CoeffSeq poly_scale(const CoeffSeq& a, const FieldElement& s);
CoeffSeq poly_shift(const CoeffSeq& a, std::size_t k);  // multiply by t^k
CoeffSeq poly_pow(const CoeffSeq& a, std::uint64_t n);

FieldElement poly_eval(const CoeffSeq& f, const FieldElement& x);

/// Coefficients 0..order of 1/f in F_q[[t]]; f[0] must be invertible.
CoeffSeq series_inverse(const CoeffSeq& f, std::size_t order);

}  // namespace dicksonlab
