/// Exact arithmetic in F_p, F_q = F_{p^e}, and the quadratic extension
/// F_{q^2} = F_q[u]/(u^2 - nu), together with the combinatorial helpers
/// (binomials mod p via Lucas) and root-finding utilities the rest of the
/// library sits on.
///
/// Elements are stored as a packed base-p code (digit i of the code is the
/// coefficient of t^i in the residue ring F_p[t]/(modulus)), so enumeration
/// order, element rendering, and tie-breaking are all the natural order on
/// codes 0..q-1.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dicksonlab {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Construction refuses fields larger than this unless force=true.
inline constexpr std::uint64_t kDefaultFieldGuard = std::uint64_t{1} << 16;
/// Hard ceiling even with force: q and q^2 stay comfortably inside uint64.
inline constexpr std::uint64_t kHardFieldLimit = std::uint64_t{1} << 30;
/// Extension degrees beyond this are rejected outright.
inline constexpr std::uint32_t kMaxExtensionDegree = 32;

bool is_prime(std::uint64_t n);

/// C(n,k) mod p by Lucas' theorem; 0 when k > n. Digit binomials are
/// computed multiplicatively, so no table of size p is needed.
std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

class FieldElement {
 public:
  std::uint64_t code() const { return code_; }
  const FieldSpec& spec() const { return *spec_; }
  bool is_zero() const { return code_ == 0; }

  /// Little-endian coefficients over F_p (length e).
  std::vector<std::uint32_t> coeffs() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t n) const;  // 0^0 = 1

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.code_ == b.code_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  friend class FieldSpec;
  FieldElement(std::uint64_t code, const FieldSpec* spec)
      : code_(code), spec_(spec) {}

  std::uint64_t code_;
  const FieldSpec* spec_;
};

/// c0 + c1*u with u^2 = nu; c1 == 0 exactly on the embedded copy of F_q.
struct QuadElement {
  FieldElement c0, c1;

  const FieldSpec& spec() const { return c0.spec(); }
  std::uint64_t code() const;
  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool in_base() const { return c1.is_zero(); }

  /// Frobenius x -> x^q (conjugation c0 - c1*u).
  QuadElement conj() const;
  QuadElement operator-() const;
  QuadElement inverse() const;
  QuadElement pow(std::uint64_t n) const;

  friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator-(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator/(const QuadElement& a, const QuadElement& b);

  friend bool operator==(const QuadElement& a, const QuadElement& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator!=(const QuadElement& a, const QuadElement& b) {
    return !(a == b);
  }
};

/// Immutable description of F_{p^e} plus its quadratic extension. All
/// operations are pure; every table is built at construction, so a spec can
/// be shared freely across threads. Elements hold a raw pointer to their
/// spec: keep the Field handle alive for as long as its elements are used.
class FieldSpec {
 public:
  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  std::uint64_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }
  /// Monic modulus, little-endian, length e+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// The chosen non-square nu (p odd; throws for p = 2).
  FieldElement nonresidue() const;
  bool has_quad() const { return has_nu_; }

  FieldElement zero() const { return FieldElement(0, this); }
  FieldElement one() const { return FieldElement(q_ > 1 ? 1 : 0, this); }
  FieldElement from_code(std::uint64_t code) const;
  /// Embeds an integer through the prime subfield (negatives allowed).
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

  /// All q elements in code order: 0, 1, ..., q-1.
  std::vector<FieldElement> elements() const;

  /// C(n,k) mod p; table-backed when p is small.
  std::uint64_t binom(std::uint64_t n, std::uint64_t k) const;

  // --- quadratic extension (p odd) ---
  QuadElement quad(FieldElement c0, FieldElement c1) const;
  QuadElement quad_zero() const { return quad(zero(), zero()); }
  QuadElement quad_one() const { return quad(one(), zero()); }
  QuadElement embed(FieldElement a) const;
  QuadElement quad_from_code(std::uint64_t code) const;

  /// Deterministic square root in F_{q^2}: the smaller of the two roots in
  /// code order, or nullopt for non-squares. p odd.
  std::optional<QuadElement> sqrt(const QuadElement& a) const;

  /// Solves x = y(1-y) over F_{q^2}: returns (y, 1-y) with y = (1+s)/2 for
  /// s = sqrt(1-4x). Always solvable (every element of F_q is a square in
  /// F_{q^2}); at x = 1/4 both components equal 1/2.
  std::pair<QuadElement, QuadElement> parameterize(FieldElement x) const;

  // code-level arithmetic (the element operators are thin wrappers)
  std::uint64_t add_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_code(std::uint64_t a) const;
  std::uint64_t mul_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_code(std::uint64_t a) const;
  std::uint64_t pow_code(std::uint64_t a, std::uint64_t n) const;

 private:
  friend class FieldElement;
  friend struct QuadElement;
  friend Field make_field(std::uint64_t, std::uint32_t,
                          const std::optional<std::vector<std::uint32_t>>&,
                          bool);
  FieldSpec() = default;

  std::vector<std::uint32_t> unpack(std::uint64_t code) const;
  std::uint64_t pack(const std::uint32_t* digits) const;

  void build_tables();
  std::optional<QuadElement> sqrt_tonelli(const QuadElement& a) const;

  std::uint64_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> p_pow_;
  // t^{e+j} mod modulus for j = 0..e-2, each row of length e.
  std::vector<std::vector<std::uint32_t>> reduction_;
  bool has_nu_ = false;
  std::uint64_t nu_code_ = 0;
  std::vector<std::uint32_t> fact_, inv_fact_;  // mod p, when p is small
  std::vector<std::uint64_t> sqrt_table_;       // q^2 entries, when small
  std::uint64_t ts_odd_part_ = 0;               // q^2-1 = 2^ts_two_adic * odd
  std::uint32_t ts_two_adic_ = 0;
  std::uint64_t ts_nonsquare_code_ = 0;  // minimal non-square of F_{q^2}
};

/// Builds F_{p^e} with a deterministically chosen modulus (the monic
/// irreducible of degree e whose packed non-leading coefficients are
/// smallest) unless one is supplied. For odd p the smallest non-square nu
/// is selected, presenting F_{q^2} as F_q[u]/(u^2 - nu).
///
/// Throws std::invalid_argument for non-prime p, a reducible or non-monic
/// override, or q beyond the guard (force lifts the guard up to the hard
/// limit).
Field make_field(
    std::uint64_t p, std::uint32_t e,
    const std::optional<std::vector<std::uint32_t>>& modulus_override = {},
    bool force = false);

}  // namespace dicksonlab
