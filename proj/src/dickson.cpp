#include "dicksonlab/dickson.hpp"

#include <stdexcept>

namespace dicksonlab::dickson {

namespace {

void require_odd_char(const FieldSpec& spec, const char* what) {
  if (spec.p() == 2) throw std::domain_error(std::string(what) +
                                             " requires odd characteristic");
}

bool is_kth(Family f) {
  return f == Family::kth_kind || f == Family::reversed_kth_kind;
}

bool is_reversed(Family f) {
  return f == Family::reversed_kth_kind || f == Family::reversed_second_kind;
}

}  // namespace

FieldElement eval_direct(const EvalRequest& req) {
  if (req.n > kDirectLimit)
    throw std::invalid_argument(
        "index too large for the definitional sum; use e1_functional");
  const FieldSpec& spec = req.a.spec();
  if (&spec != &req.x.spec())
    throw std::invalid_argument("parameter and argument fields differ");
  const std::uint64_t n = req.n;
  const std::uint32_t k = is_kth(req.family) ? req.k : 1;

  // base^{n-2i} slot vs (-w)^i slot depend on which argument is reversed
  const FieldElement& base = is_reversed(req.family) ? req.a : req.x;
  const FieldElement& w = is_reversed(req.family) ? req.x : req.a;

  if (n == 0) {
    // the i = 0 term's rational factor is 0/0 at n = 0; the family
    // convention is D_{0,k} = 2 - k (so k = 1 gives E_0 = 1)
    return spec.from_int(2 - static_cast<std::int64_t>(k));
  }

  // (n-ki)/(n-i) C(n-i,i) = C(n-i,i) - (k-1) C(n-i-1,i-1) over the
  // integers, which keeps every term Lucas-computable mod p even when
  // p divides n-i.
  const std::uint64_t imax = n / 2;
  std::vector<std::uint64_t> w_pows(imax + 1);
  const FieldElement neg_w = -w;
  FieldElement acc_w = spec.one();
  for (std::uint64_t i = 0; i <= imax; ++i) {
    w_pows[i] = acc_w.code();
    if (i < imax) acc_w = acc_w * neg_w;
  }

  FieldElement sum = spec.zero();
  FieldElement base_pow = (n % 2 == 1) ? base : spec.one();
  const FieldElement base_sq = base * base;
  for (std::uint64_t i = imax + 1; i-- > 0;) {
    std::uint64_t coeff = spec.binom(n - i, i);
    if (k != 1 && i >= 1) {
      std::uint64_t corr = spec.binom(n - i - 1, i - 1);
      std::int64_t kk = static_cast<std::int64_t>(k) - 1;
      FieldElement term = spec.from_int(static_cast<std::int64_t>(coeff)) -
                          spec.from_int(kk) *
                              spec.from_int(static_cast<std::int64_t>(corr));
      sum = sum + term * spec.from_code(w_pows[i]) * base_pow;
    } else {
      sum = sum + spec.from_int(static_cast<std::int64_t>(coeff)) *
                      spec.from_code(w_pows[i]) * base_pow;
    }
    if (i > 0) base_pow = base_pow * base_sq;
  }
  return sum;
}

FieldElement e1_recursive(std::uint64_t n, const FieldElement& x) {
  if (n > kRecursiveLimit)
    throw std::invalid_argument(
        "index too large for the recursion; use e1_functional");
  const FieldSpec& spec = x.spec();
  FieldElement prev = spec.one();  // E_0
  FieldElement cur = spec.one();   // E_1
  if (n <= 1) return cur;
  for (std::uint64_t i = 2; i <= n; ++i) {
    FieldElement next = cur - x * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

FieldElement e1_functional(std::uint64_t n, const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  require_odd_char(spec, "e1_functional");
  if (spec.from_int(4) * x == spec.one()) return quarter_value(n, spec);
  auto [y, ym] = spec.parameterize(x);
  QuadElement s = y - ym;  // 2y - 1 = sqrt(1-4x), nonzero away from 1/4
  QuadElement num = y.pow(n + 1) - ym.pow(n + 1);
  QuadElement value = num / s;
  if (!value.in_base())
    throw std::logic_error("parameterized value escaped the base field");
  return value.c0;
}

FieldElement quarter_value(std::uint64_t n, const FieldSpec& spec) {
  require_odd_char(spec, "quarter_value");
  FieldElement numer = spec.from_int(static_cast<std::int64_t>((n + 1) % spec.p()));
  std::uint64_t exp = n % (spec.p() - 1);
  FieldElement denom = spec.from_int(2).pow(exp);
  return numer * denom.inverse();
}

FieldElement odd_binomial(std::uint64_t m, const FieldElement& x) {
  if (m > kDirectLimit)
    throw std::invalid_argument("index too large for odd_binomial");
  const FieldSpec& spec = x.spec();
  FieldElement sum = spec.zero();
  if (m == 0) return sum;
  FieldElement x_pow = spec.one();
  const std::uint64_t jmax = (m - 1) / 2;
  for (std::uint64_t j = 0; j <= jmax; ++j) {
    std::uint64_t c = spec.binom(m, 2 * j + 1);
    sum = sum + spec.from_int(static_cast<std::int64_t>(c)) * x_pow;
    if (j < jmax) x_pow = x_pow * x;
  }
  return sum;
}

FieldElement e1_via_odd_binomial(std::uint64_t n, const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  require_odd_char(spec, "e1_via_odd_binomial");
  FieldElement arg = spec.one() - spec.from_int(4) * x;
  FieldElement scale = spec.from_int(2).pow(n % (spec.p() - 1)).inverse();
  return scale * odd_binomial(n + 1, arg);
}

FieldElement zero_param(std::uint64_t n, const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  if (n % 2 == 1) return spec.zero();
  return (-x).pow(n / 2);
}

std::uint64_t reduce_index(std::uint64_t n, std::uint64_t q) {
  if (n == 0) return 0;
  std::uint64_t m = q * q - 1;
  std::uint64_t r = n % m;
  return r == 0 ? m : r;
}

CoeffSeq e1_series(const FieldElement& x, std::size_t order) {
  const FieldSpec& spec = x.spec();
  CoeffSeq denom{spec.one(), -spec.one(), x};
  return series_inverse(denom, order);
}

std::vector<CoeffSeq> e1_table(const FieldSpec& spec, std::uint64_t n_max) {
  std::vector<CoeffSeq> table(n_max + 1, CoeffSeq());
  for (auto& row : table) row.reserve(spec.q());
  for (std::uint64_t c = 0; c < spec.q(); ++c) {
    const FieldElement a = spec.from_code(c);
    FieldElement prev = spec.one();
    FieldElement cur = spec.one();
    table[0].push_back(prev);
    if (n_max >= 1) table[1].push_back(cur);
    for (std::uint64_t n = 2; n <= n_max; ++n) {
      FieldElement next = cur - a * prev;
      prev = cur;
      cur = next;
      table[n].push_back(cur);
    }
  }
  return table;
}

bool scaling_identity(std::uint64_t n, const FieldElement& a,
                      const FieldElement& b, const FieldElement& x) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("scaling identity needs nonzero parameters");
  FieldElement lhs =
      eval_direct({n, a, x, Family::reversed_second_kind, 1});
  FieldElement ratio = (a / b).pow(n);
  FieldElement scaled_x = (b * b) / (a * a) * x;
  FieldElement rhs =
      ratio * eval_direct({n, b, scaled_x, Family::reversed_second_kind, 1});
  return lhs == rhs;
}

bool frobenius_identity(std::uint64_t n, std::uint32_t r,
                        const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  require_odd_char(spec, "frobenius_identity");
  if (n == 0 || n % spec.p() == 0)
    throw std::invalid_argument("hypothesis gcd(p, n) = 1 violated");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::uint64_t pr = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (pr > kRecursiveLimit / spec.p())
      throw std::invalid_argument("p^r out of range");
    pr *= spec.p();
  }
  if (n > kRecursiveLimit / pr) throw std::invalid_argument("n p^r out of range");
  FieldElement lhs = e1_recursive(n * pr - 1, x);
  FieldElement base = eval_direct(
      {n - 1, spec.one(), x, Family::reversed_second_kind, 1});
  FieldElement quad_part =
      (spec.one() - spec.from_int(4) * x).pow((pr - 1) / 2);
  return lhs == base.pow(pr) * quad_part;
}

bool power_identity(std::uint32_t k, const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  require_odd_char(spec, "power_identity");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (pk > kRecursiveLimit / spec.p())
      throw std::invalid_argument("p^k out of range");
    pk *= spec.p();
  }
  FieldElement lhs = e1_recursive(pk - 1, x);
  FieldElement rhs = (spec.one() - spec.from_int(4) * x).pow((pk - 1) / 2);
  return lhs == rhs;
}

}  // namespace dicksonlab::dickson
