#include "dicksonlab/coeffs.hpp"

#include <stdexcept>

namespace dicksonlab {

CoeffSeq coeff_zeros(const FieldSpec& spec, std::size_t len) {
  return CoeffSeq(len, spec.zero());
}

std::size_t poly_degree(const CoeffSeq& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return i;
  return 0;
}

CoeffSeq poly_add(const CoeffSeq& a, const CoeffSeq& b) {
  const CoeffSeq& longer = a.size() >= b.size() ? a : b;
  const CoeffSeq& shorter = a.size() >= b.size() ? b : a;
  CoeffSeq r = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = r[i] + shorter[i];
  return r;
}

CoeffSeq poly_sub(const CoeffSeq& a, const CoeffSeq& b) {
  CoeffSeq r = a;
  if (b.size() > r.size()) {
    if (r.empty() && b.empty()) return r;
    const FieldSpec& spec = b.front().spec();
    r.resize(b.size(), spec.zero());
  }
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

CoeffSeq poly_mul(const CoeffSeq& a, const CoeffSeq& b) {
  if (a.empty() || b.empty()) return {};
  const FieldSpec& spec = a.front().spec();
  CoeffSeq r(a.size() + b.size() - 1, spec.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

CoeffSeq poly_scale(const CoeffSeq& a, const FieldElement& s) {
  CoeffSeq r = a;
  for (auto& c : r) c = c * s;
  return r;
}

CoeffSeq poly_shift(const CoeffSeq& a, std::size_t k) {
  if (a.empty()) return {};
  CoeffSeq r(a.size() + k, a.front().spec().zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

CoeffSeq poly_pow(const CoeffSeq& a, std::uint64_t n) {
  if (a.empty()) throw std::invalid_argument("poly_pow of empty sequence");
  const FieldSpec& spec = a.front().spec();
  CoeffSeq r{spec.one()};
  CoeffSeq base = a;
  while (n) {
    if (n & 1) r = poly_mul(r, base);
    base = poly_mul(base, base);
    n >>= 1;
  }
  return r;
}

FieldElement poly_eval(const CoeffSeq& f, const FieldElement& x) {
  FieldElement acc = x.spec().zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

CoeffSeq series_inverse(const CoeffSeq& f, std::size_t order) {
  if (f.empty() || f[0].is_zero())
    throw std::invalid_argument("series has no invertible constant term");
  const FieldSpec& spec = f.front().spec();
  FieldElement lead_inv = f[0].inverse();
  CoeffSeq g(order + 1, spec.zero());
  g[0] = lead_inv;
  for (std::size_t n = 1; n <= order; ++n) {
    FieldElement acc = spec.zero();
    std::size_t kmax = std::min(n, f.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) acc = acc + f[k] * g[n - k];
    g[n] = -(lead_inv * acc);
  }
  return g;
}

}  // namespace dicksonlab
