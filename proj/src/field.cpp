#include "dicksonlab/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace dicksonlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 a, u64 n, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    n >>= 1;
  }
  return r;
}

// ---- dense polynomials over F_p (coefficient vectors, little-endian) ----
// Only used during field construction: irreducibility tests and the search
// for the default modulus.

using PolyP = std::vector<std::uint32_t>;

void ptrim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + u64(a[i]) * b[j]) % p);
  }
  return r;
}

// a mod f, f monic
PolyP pmod(PolyP a, const PolyP& f, u64 p) {
  ptrim(a);
  const std::size_t d = f.size() - 1;
  while (a.size() > d) {
    const u64 lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    if (lead) {
      for (std::size_t i = 0; i < d; ++i) {
        u64 sub = mul_mod(lead, f[i], p);
        a[shift + i] =
            static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

PolyP pgcd(PolyP a, PolyP b, u64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // make b monic before reducing
    u64 inv_lead = pow_mod(b.back(), p - 2, p);
    for (auto& c : b) c = static_cast<std::uint32_t>(mul_mod(c, inv_lead, p));
    PolyP r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyP ppow_mod(PolyP base, u64 n, const PolyP& f, u64 p) {
  PolyP r = {1};
  base = pmod(std::move(base), f, p);
  while (n) {
    if (n & 1) r = pmod(pmul(r, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    n >>= 1;
  }
  return r;
}

// x^{p^k} mod f by k successive p-th powers.
PolyP frobenius_power(const PolyP& f, u64 p, std::uint32_t k) {
  PolyP x = {0, 1};
  for (std::uint32_t i = 0; i < k; ++i) x = ppow_mod(std::move(x), p, f, p);
  return x;
}

bool is_irreducible(const PolyP& f, u64 p) {
  const std::size_t e = f.size() - 1;
  if (e == 0) return false;
  if (e == 1) return true;
  if (e <= 3) {
    // degree 2 or 3: irreducible iff no root in F_p
    for (u64 r = 0; r < p; ++r) {
      u64 v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (mul_mod(v, r, p) + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Rabin's test: x^{p^e} == x mod f, and gcd(x^{p^{e/r}} - x, f) = 1 for
  // every prime r dividing e.
  PolyP xq = frobenius_power(f, p, static_cast<std::uint32_t>(e));
  PolyP x = pmod(PolyP{0, 1}, f, p);
  if (xq != x) return false;
  std::vector<std::size_t> prime_divisors;
  std::size_t m = e;
  for (std::size_t r = 2; r * r <= m; ++r) {
    if (m % r) continue;
    prime_divisors.push_back(r);
    while (m % r == 0) m /= r;
  }
  if (m > 1) prime_divisors.push_back(m);
  for (std::size_t r : prime_divisors) {
    PolyP diff = frobenius_power(f, p, static_cast<std::uint32_t>(e / r));
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    ptrim(diff);
    if (pgcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  // deterministic witness set for n < 3.3e24
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t binom_mod_p(u64 n, u64 k, u64 p) {
  if (k > n) return 0;
  u64 result = 1;
  while (n || k) {
    u64 nd = n % p, kd = k % p;
    n /= p;
    k /= p;
    if (kd > nd) return 0;
    kd = std::min(kd, nd - kd);
    u64 num = 1, den = 1;
    for (u64 i = 1; i <= kd; ++i) {
      num = mul_mod(num, (nd - i + 1) % p, p);
      den = mul_mod(den, i % p, p);
    }
    result = mul_mod(result, mul_mod(num, pow_mod(den, p - 2, p), p), p);
    if (result == 0) return 0;
  }
  return result;
}

// ---------------------------------------------------------------------------
// FieldElement

std::vector<std::uint32_t> FieldElement::coeffs() const {
  return spec_->unpack(code_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(spec_->neg_code(code_), spec_);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(spec_->inv_code(code_), spec_);
}

FieldElement FieldElement::pow(u64 n) const {
  return FieldElement(spec_->pow_code(code_, n), spec_);
}

namespace {
void require_same_spec(const FieldElement& a, const FieldElement& b) {
  if (&a.spec() != &b.spec())
    throw std::invalid_argument("elements belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  return FieldElement(a.spec_->add_codes(a.code_, b.code_), a.spec_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  return FieldElement(a.spec_->sub_codes(a.code_, b.code_), a.spec_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  return FieldElement(a.spec_->mul_codes(a.code_, b.code_), a.spec_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  return FieldElement(a.spec_->mul_codes(a.code_, b.spec_->inv_code(b.code_)),
                      a.spec_);
}

// ---------------------------------------------------------------------------
// QuadElement

std::uint64_t QuadElement::code() const {
  return c0.code() + spec().q() * c1.code();
}

QuadElement QuadElement::conj() const { return {c0, -c1}; }

QuadElement QuadElement::operator-() const { return {-c0, -c1}; }

QuadElement QuadElement::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  const FieldSpec& s = spec();
  FieldElement norm = c0 * c0 - s.nonresidue() * c1 * c1;
  FieldElement ninv = norm.inverse();
  return {c0 * ninv, -c1 * ninv};
}

QuadElement QuadElement::pow(u64 n) const {
  QuadElement r = spec().quad_one();
  QuadElement base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
  return {a.c0 + b.c0, a.c1 + b.c1};
}

QuadElement operator-(const QuadElement& a, const QuadElement& b) {
  return {a.c0 - b.c0, a.c1 - b.c1};
}

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
  const FieldSpec& s = a.spec();
  FieldElement nu = s.nonresidue();
  return {a.c0 * b.c0 + nu * (a.c1 * b.c1), a.c0 * b.c1 + a.c1 * b.c0};
}

QuadElement operator/(const QuadElement& a, const QuadElement& b) {
  return a * b.inverse();
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldElement FieldSpec::nonresidue() const {
  if (!has_nu_)
    throw std::domain_error("no quadratic non-residue in characteristic 2");
  return FieldElement(nu_code_, this);
}

FieldElement FieldSpec::from_code(u64 code) const {
  if (code >= q_) throw std::invalid_argument("element code out of range");
  return FieldElement(code, this);
}

FieldElement FieldSpec::from_int(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return FieldElement(static_cast<u64>(r), this);
}

FieldElement FieldSpec::from_coeffs(
    const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > e_)
    throw std::invalid_argument("too many coefficients for this field");
  u64 code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_)
      throw std::invalid_argument("coefficient out of range [0, p)");
    code = code * p_ + coeffs[i];
  }
  return FieldElement(code, this);
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (u64 c = 0; c < q_; ++c) out.push_back(FieldElement(c, this));
  return out;
}

std::uint64_t FieldSpec::binom(u64 n, u64 k) const {
  if (k > n) return 0;
  if (fact_.empty()) return binom_mod_p(n, k, p_);
  u64 result = 1;
  while (n || k) {
    u64 nd = n % p_, kd = k % p_;
    n /= p_;
    k /= p_;
    if (kd > nd) return 0;
    u64 c = mul_mod(fact_[nd], mul_mod(inv_fact_[kd], inv_fact_[nd - kd], p_),
                    p_);
    result = mul_mod(result, c, p_);
    if (result == 0) return 0;
  }
  return result;
}

std::vector<std::uint32_t> FieldSpec::unpack(u64 code) const {
  std::vector<std::uint32_t> digits(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    digits[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return digits;
}

std::uint64_t FieldSpec::pack(const std::uint32_t* digits) const {
  u64 code = 0;
  for (std::uint32_t i = e_; i-- > 0;) code = code * p_ + digits[i];
  return code;
}

std::uint64_t FieldSpec::add_codes(u64 a, u64 b) const {
  if (e_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 code = 0, pw = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    u64 da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    u64 s = da + db;
    if (s >= p_) s -= p_;
    code += s * pw;
    pw *= p_;
  }
  return code;
}

std::uint64_t FieldSpec::sub_codes(u64 a, u64 b) const {
  return add_codes(a, neg_code(b));
}

std::uint64_t FieldSpec::neg_code(u64 a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  u64 code = 0, pw = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    u64 d = a % p_;
    a /= p_;
    code += (d == 0 ? 0 : p_ - d) * pw;
    pw *= p_;
  }
  return code;
}

std::uint64_t FieldSpec::mul_codes(u64 a, u64 b) const {
  if (e_ == 1) return mul_mod(a, b, p_);
  std::uint32_t da[kMaxExtensionDegree], db[kMaxExtensionDegree];
  u64 acc[2 * kMaxExtensionDegree] = {0};
  for (std::uint32_t i = 0; i < e_; ++i) {
    da[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
    db[i] = static_cast<std::uint32_t>(b % p_);
    b /= p_;
  }
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      acc[i + j] += u64(da[i]) * db[j];
  }
  // fold t^{e+j} back down via the precomputed reduction rows
  for (std::uint32_t j = 2 * e_ - 2; j >= e_; --j) {
    u64 c = acc[j] % p_;
    if (c) {
      const auto& row = reduction_[j - e_];
      for (std::uint32_t i = 0; i < e_; ++i) acc[i] += c * row[i];
    }
    if (j == e_) break;
  }
  std::uint32_t out[kMaxExtensionDegree];
  for (std::uint32_t i = 0; i < e_; ++i)
    out[i] = static_cast<std::uint32_t>(acc[i] % p_);
  return pack(out);
}

std::uint64_t FieldSpec::inv_code(u64 a) const {
  if (a == 0) throw std::invalid_argument("division by zero");
  return pow_code(a, q_ - 2);
}

std::uint64_t FieldSpec::pow_code(u64 a, u64 n) const {
  u64 r = q_ > 1 ? 1 : 0;
  while (n) {
    if (n & 1) r = mul_codes(r, a);
    a = mul_codes(a, a);
    n >>= 1;
  }
  return r;
}

QuadElement FieldSpec::quad(FieldElement c0, FieldElement c1) const {
  if (&c0.spec() != this || &c1.spec() != this)
    throw std::invalid_argument("components belong to a different field");
  if (!has_nu_)
    throw std::domain_error(
        "quadratic extension unavailable in characteristic 2");
  return {c0, c1};
}

QuadElement FieldSpec::embed(FieldElement a) const { return quad(a, zero()); }

QuadElement FieldSpec::quad_from_code(u64 code) const {
  return quad(from_code(code % q_), from_code(code / q_));
}

std::optional<QuadElement> FieldSpec::sqrt(const QuadElement& a) const {
  if (!has_nu_)
    throw std::domain_error("square roots unsupported in characteristic 2");
  if (!sqrt_table_.empty()) {
    u64 root = sqrt_table_[a.code()];
    if (root == q_ * q_) return std::nullopt;
    return quad_from_code(root);
  }
  return sqrt_tonelli(a);
}

std::optional<QuadElement> FieldSpec::sqrt_tonelli(const QuadElement& a) const {
  if (a.is_zero()) return quad_zero();
  const u64 qq_half = (q_ * q_ - 1) / 2;
  if (a.pow(qq_half) != quad_one()) return std::nullopt;
  // Tonelli-Shanks in F_{q^2} with the precomputed minimal non-square.
  QuadElement z = quad_from_code(ts_nonsquare_code_);
  QuadElement c = z.pow(ts_odd_part_);
  QuadElement t = a.pow(ts_odd_part_);
  QuadElement r = a.pow((ts_odd_part_ + 1) / 2);
  std::uint32_t m = ts_two_adic_;
  while (t != quad_one()) {
    QuadElement t2 = t;
    std::uint32_t i = 0;
    while (t2 != quad_one()) {
      t2 = t2 * t2;
      ++i;
    }
    QuadElement b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  QuadElement neg = -r;
  return neg.code() < r.code() ? neg : r;
}

std::pair<QuadElement, QuadElement> FieldSpec::parameterize(
    FieldElement x) const {
  if (!has_nu_)
    throw std::domain_error("parameterization requires odd characteristic");
  FieldElement radicand = one() - from_int(4) * x;
  auto s = sqrt(embed(radicand));
  // elements of the embedded F_q are always squares in F_{q^2}
  if (!s) throw std::logic_error("embedded base element has no square root");
  QuadElement half = embed(from_int(2).inverse());
  QuadElement y = (quad_one() + *s) * half;
  return {y, quad_one() - y};
}

void FieldSpec::build_tables() {
  p_pow_.resize(e_ + 1);
  p_pow_[0] = 1;
  for (std::uint32_t i = 1; i <= e_; ++i) p_pow_[i] = p_pow_[i - 1] * p_;

  // reduction rows: t^{e+j} mod modulus
  if (e_ > 1) {
    std::vector<std::uint32_t> cur(e_);
    for (std::uint32_t i = 0; i < e_; ++i)
      cur[i] = static_cast<std::uint32_t>((p_ - modulus_[i]) % p_);  // t^e
    reduction_.push_back(cur);
    for (std::uint32_t j = 1; j + 1 < e_; ++j) {
      std::vector<std::uint32_t> next(e_, 0);
      std::uint32_t carry = cur[e_ - 1];
      for (std::uint32_t i = e_ - 1; i >= 1; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (carry) {
        for (std::uint32_t i = 0; i < e_; ++i) {
          u64 add = mul_mod(carry, (p_ - modulus_[i]) % p_, p_);
          next[i] = static_cast<std::uint32_t>((next[i] + add) % p_);
        }
      }
      reduction_.push_back(next);
      cur = next;
    }
  }

  if (p_ <= (u64(1) << 20)) {
    fact_.resize(p_);
    inv_fact_.resize(p_);
    fact_[0] = 1;
    for (u64 i = 1; i < p_; ++i)
      fact_[i] = static_cast<std::uint32_t>(mul_mod(fact_[i - 1], i, p_));
    inv_fact_[p_ - 1] =
        static_cast<std::uint32_t>(pow_mod(fact_[p_ - 1], p_ - 2, p_));
    for (u64 i = p_ - 1; i >= 1; --i)
      inv_fact_[i - 1] =
          static_cast<std::uint32_t>(mul_mod(inv_fact_[i], i, p_));
  }

  if (p_ == 2) return;

  // smallest non-square of F_q in code order
  const u64 euler = (q_ - 1) / 2;
  for (u64 c = 1; c < q_; ++c) {
    if (pow_code(c, euler) != 1) {
      nu_code_ = c;
      has_nu_ = true;
      break;
    }
  }

  const u64 qq = q_ * q_;
  if (qq <= kDefaultFieldGuard) {
    // full square table of F_{q^2}; first writer in code order wins, which
    // makes the stored root the smaller of each +/- pair
    sqrt_table_.assign(qq, qq);
    for (u64 c = 0; c < qq; ++c) {
      QuadElement s = quad_from_code(c);
      u64 sq = (s * s).code();
      if (sqrt_table_[sq] == qq) sqrt_table_[sq] = c;
    }
  } else {
    ts_odd_part_ = qq - 1;
    ts_two_adic_ = 0;
    while ((ts_odd_part_ & 1) == 0) {
      ts_odd_part_ >>= 1;
      ++ts_two_adic_;
    }
    const u64 qq_half = (qq - 1) / 2;
    for (u64 c = 1; c < qq; ++c) {
      if (quad_from_code(c).pow(qq_half) != quad_one()) {
        ts_nonsquare_code_ = c;
        break;
      }
    }
  }
}

Field make_field(u64 p, std::uint32_t e,
                 const std::optional<std::vector<std::uint32_t>>& modulus_override,
                 bool force) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (e > kMaxExtensionDegree)
    throw std::invalid_argument("extension degree too large");

  u64 q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (q > kHardFieldLimit / p) throw std::invalid_argument("field too large");
    q *= p;
  }
  if (q > kDefaultFieldGuard && !force)
    throw std::invalid_argument(
        "field size exceeds the guard (pass force to override)");

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->e_ = e;
  spec->q_ = q;

  if (modulus_override) {
    PolyP f = *modulus_override;
    if (f.size() != e + 1 || f.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree e");
    for (auto c : f)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(f, p))
      throw std::invalid_argument("modulus is reducible");
    spec->modulus_ = std::move(f);
  } else {
    // smallest packed tuple of non-leading coefficients that is irreducible
    PolyP f(e + 1, 0);
    f[e] = 1;
    for (u64 code = 0;; ++code) {
      u64 c = code;
      for (std::uint32_t i = 0; i < e; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (c != 0)
        throw std::logic_error("no irreducible polynomial found");  // unreachable
      if (is_irreducible(f, p)) break;
    }
    spec->modulus_ = f;
  }

  spec->build_tables();
  return spec;
}

}  // namespace dicksonlab
