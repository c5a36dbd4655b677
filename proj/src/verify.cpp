#include "dicksonlab/verify.hpp"

#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "dicksonlab/coeffs.hpp"
#include "dicksonlab/dickson.hpp"
#include "dicksonlab/filters.hpp"
#include "dicksonlab/io.hpp"
#include "dicksonlab/pp.hpp"
#include "dicksonlab/sums.hpp"

namespace dicksonlab::verify {

namespace {

using boost::multiprecision::cpp_int;
using u64 = std::uint64_t;

// fixed seed: sweeps that sample are still byte-for-byte reproducible
constexpr u64 kSweepSeed = 0x5eedD1C50ULL;

class Checker {
 public:
  explicit Checker(std::string name) { r_.name = std::move(name); }

  void not_applicable() { r_.applicable = false; }

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.counterexample = describe();
    }
    return ok;
  }

  bool expect(bool ok, const char* what) {
    return expect(ok, [what] { return std::string(what); });
  }

  SuiteResult take() { return std::move(r_); }

 private:
  SuiteResult r_;
};

u64 stride_for(u64 count, u64 cap) { return count <= cap ? 1 : count / cap + 1; }

cpp_int binom_exact(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r *= static_cast<std::int64_t>(n - k + i);
    r /= static_cast<std::int64_t>(i);
  }
  return r;
}

u64 mod_p(const cpp_int& v, u64 p) {
  cpp_int r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return r.convert_to<u64>();
}

// ---------------------------------------------------------------------------

SuiteResult suite_field_axioms(const FieldSpec& spec) {
  Checker c("field_axioms");
  const u64 q = spec.q();
  const u64 step = stride_for(q, 32);
  for (u64 ia = 0; ia < q; ia += step) {
    FieldElement a = spec.from_code(ia);
    c.expect(a + spec.zero() == a, [&] { return "additive identity at " + io::render(a); });
    c.expect(a * spec.one() == a, [&] { return "multiplicative identity at " + io::render(a); });
    c.expect(a + (-a) == spec.zero(), [&] { return "additive inverse at " + io::render(a); });
    if (!a.is_zero())
      c.expect(a * a.inverse() == spec.one(),
               [&] { return "multiplicative inverse at " + io::render(a); });
    for (u64 ib = 0; ib < q; ib += step) {
      FieldElement b = spec.from_code(ib);
      c.expect(a + b == b + a, "commutativity of +");
      c.expect(a * b == b * a, "commutativity of *");
      for (u64 ic = 0; ic < q; ic += step) {
        FieldElement d = spec.from_code(ic);
        c.expect((a + b) + d == a + (b + d), "associativity of +");
        c.expect((a * b) * d == a * (b * d), "associativity of *");
        c.expect(a * (b + d) == a * b + a * d, "distributivity");
      }
    }
  }
  return c.take();
}

SuiteResult suite_frobenius(const FieldSpec& spec) {
  Checker c("frobenius");
  const u64 q = spec.q();
  const u64 step = stride_for(q, 128);
  for (u64 ia = 0; ia < q; ia += step) {
    FieldElement a = spec.from_code(ia);
    c.expect(a.pow(q) == a, [&] { return "a^q != a at " + io::render(a); });
    for (u64 ib = 0; ib < q; ib += step) {
      FieldElement b = spec.from_code(ib);
      c.expect((a + b).pow(spec.p()) == a.pow(spec.p()) + b.pow(spec.p()),
               "Frobenius not additive");
      c.expect((a * b).pow(spec.p()) == a.pow(spec.p()) * b.pow(spec.p()),
               "Frobenius not multiplicative");
    }
  }
  if (spec.p() != 2) {
    const u64 qq = q * q;
    const u64 qstep = stride_for(qq, 512);
    for (u64 ix = 0; ix < qq; ix += qstep) {
      QuadElement x = spec.quad_from_code(ix);
      c.expect(x.pow(qq) == x, [&] { return "x^{q^2} != x at code " + std::to_string(ix); });
      c.expect(x.pow(q) == x.conj(),
               [&] { return "conjugation != q-power at code " + std::to_string(ix); });
      for (u64 iy = 0; iy < qq; iy += qstep * 7 + 1) {
        QuadElement y = spec.quad_from_code(iy);
        c.expect((x + y).pow(spec.p()) == x.pow(spec.p()) + y.pow(spec.p()),
                 "quad Frobenius not additive");
        c.expect((x * y).pow(spec.p()) == x.pow(spec.p()) * y.pow(spec.p()),
                 "quad Frobenius not multiplicative");
      }
    }
  }
  return c.take();
}

SuiteResult suite_parameterization(const FieldSpec& spec) {
  Checker c("parameterization");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  const QuadElement one = spec.quad_one();
  for (u64 ix = 0; ix < spec.q(); ++ix) {
    FieldElement x = spec.from_code(ix);
    auto [y1, y2] = spec.parameterize(x);
    c.expect(y1 + y2 == one, [&] { return "y1+y2 != 1 at x=" + io::render(x); });
    c.expect(y1 * y2 == spec.embed(x),
             [&] { return "y1*y2 != x at x=" + io::render(x); });
  }
  // degenerate point: both roots collapse to 1/2
  FieldElement quarter = spec.from_int(4).inverse();
  auto [h1, h2] = spec.parameterize(quarter);
  QuadElement half = spec.embed(spec.from_int(2).inverse());
  c.expect(h1 == half && h2 == half, "quarter point roots are not 1/2");
  return c.take();
}

SuiteResult suite_field_power_sums(const FieldSpec& spec) {
  Checker c("field_power_sums");
  const u64 q = spec.q();
  for (u64 k = 0; k <= q - 1; ++k) {
    FieldElement sum = spec.zero();
    for (u64 ia = 0; ia < q; ++ia)
      sum = sum + spec.from_code(ia).pow(k);  // 0^0 = 1
    FieldElement expected = (k == q - 1) ? -spec.one() : spec.zero();
    c.expect(sum == expected,
             [&] { return "power sum wrong at k=" + std::to_string(k); });
  }
  return c.take();
}

SuiteResult suite_binomials(const FieldSpec& spec) {
  Checker c("binomials");
  const u64 p = spec.p();
  std::vector<cpp_int> row{1};
  for (u64 n = 0; n <= 2000; ++n) {
    const u64 kstep = n <= 64 ? 1 : 17;
    for (u64 k = 0; k <= n; k += kstep) {
      u64 expected = mod_p(row[k], p);
      bool ok = spec.binom(n, k) == expected &&
                binom_mod_p(n, k, p) == expected;
      if (!c.expect(ok, [&] {
            return "binomial mismatch at n=" + std::to_string(n) +
                   " k=" + std::to_string(k);
          }))
        return c.take();
    }
    // next Pascal row
    row.push_back(1);
    for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
  }
  return c.take();
}

SuiteResult suite_evaluator_agreement(const FieldSpec& spec) {
  Checker c("evaluator_agreement");
  const u64 q = spec.q();
  const bool odd = spec.p() != 2;
  constexpr u64 kNMax = 300;
  const u64 xstep = stride_for(q, 64);
  for (u64 ix = 0; ix < q; ix += xstep) {
    FieldElement x = spec.from_code(ix);
    CoeffSeq series = dickson::e1_series(x, kNMax);
    FieldElement prev = spec.one(), cur = spec.one();
    for (u64 n = 0; n <= kNMax; ++n) {
      FieldElement rec = n == 0 ? prev : cur;
      FieldElement direct = dickson::eval_direct(
          {n, spec.one(), x, dickson::Family::reversed_second_kind, 1});
      bool ok = direct == rec && series[n] == rec;
      if (odd) ok = ok && dickson::e1_via_odd_binomial(n, x) == rec;
      c.expect(ok, [&] {
        return "evaluators disagree at n=" + std::to_string(n) +
               " x=" + io::render(x);
      });
      if (n >= 1) {
        FieldElement next = cur - x * prev;
        prev = cur;
        cur = next;
      }
    }
  }
  if (odd) {
    // big deterministic indices: the O(log n) route against the reduced
    // recursion (and the quarter value at x = 1/4)
    std::mt19937_64 rng(kSweepSeed);
    const FieldElement quarter = spec.from_int(4).inverse();
    for (int trial = 0; trial < 60; ++trial) {
      u64 n = (rng() & ((u64(1) << 60) - 1)) + 1;
      FieldElement x = spec.from_code(rng() % q);
      if (x == quarter) {
        u64 m = n % (spec.p() * (spec.p() - 1));
        c.expect(dickson::quarter_value(n, spec) == dickson::e1_recursive(m, x),
                 [&] { return "quarter value wrong at n=" + std::to_string(n); });
      } else {
        FieldElement fast = dickson::e1_functional(n, x);
        FieldElement slow =
            dickson::e1_recursive(dickson::reduce_index(n, q), x);
        c.expect(fast == slow, [&] {
          return "functional route disagrees at n=" + std::to_string(n) +
                 " x=" + io::render(x);
        });
      }
    }
  }
  return c.take();
}

SuiteResult suite_period6(const FieldSpec& spec) {
  Checker c("period6");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  const FieldElement one = spec.one();
  FieldElement prev = one, cur = one;
  for (u64 n = 0; n <= 600; ++n) {
    FieldElement value = n == 0 ? prev : cur;
    c.expect(value == spec.from_int(nec::period6_value(n)),
             [&] { return "period-6 table wrong at n=" + std::to_string(n); });
    if (n >= 1) {
      FieldElement next = cur - one * prev;
      prev = cur;
      cur = next;
    }
  }
  return c.take();
}

SuiteResult suite_series_defect(const FieldSpec& spec) {
  Checker c("series_defect");
  constexpr std::size_t kOrder = 64;
  for (u64 ix = 0; ix < spec.q(); ++ix) {
    FieldElement x = spec.from_code(ix);
    CoeffSeq denom{spec.one(), -spec.one(), x};
    CoeffSeq prod = poly_mul(denom, dickson::e1_series(x, kOrder));
    bool ok = prod[0] == spec.one();
    for (std::size_t i = 1; i <= kOrder && ok; ++i) ok = prod[i].is_zero();
    c.expect(ok, [&] { return "series defect at x=" + io::render(x); });
  }
  return c.take();
}

SuiteResult suite_scaling_identity(const FieldSpec& spec) {
  Checker c("scaling_identity");
  const u64 q = spec.q();
  const u64 step = stride_for(q, 12);
  for (u64 ia = 1; ia < q; ia += step)
    for (u64 ib = 1; ib < q; ib += step)
      for (u64 n = 0; n <= 30; ++n)
        for (u64 ix = 0; ix < q; ix += step) {
          bool ok = dickson::scaling_identity(n, spec.from_code(ia),
                                              spec.from_code(ib),
                                              spec.from_code(ix));
          if (!c.expect(ok, [&] {
                return "scaling identity fails at n=" + std::to_string(n);
              }))
            return c.take();
        }
  return c.take();
}

SuiteResult suite_frobenius_identity(const FieldSpec& spec) {
  Checker c("frobenius_identity");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  const u64 q = spec.q();
  const u64 step = stride_for(q, 32);
  for (u64 n = 1; n <= 30; ++n) {
    if (n % spec.p() == 0) continue;
    for (std::uint32_t r = 1; r <= 2; ++r)
      for (u64 ix = 0; ix < q; ix += step) {
        bool ok = dickson::frobenius_identity(n, r, spec.from_code(ix));
        if (!c.expect(ok, [&] {
              return "index-raising identity fails at n=" + std::to_string(n) +
                     " r=" + std::to_string(r);
            }))
          return c.take();
      }
  }
  return c.take();
}

SuiteResult suite_power_identity(const FieldSpec& spec) {
  Checker c("power_identity");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  for (std::uint32_t k = 1; k <= spec.e(); ++k) {
    for (u64 ix = 0; ix < spec.q(); ++ix)
      c.expect(dickson::power_identity(k, spec.from_code(ix)),
               [&] { return "power-form identity fails at k=" + std::to_string(k); });
    u64 pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= spec.p();
    auto table = dickson::e1_table(spec, pk - 1);
    const CoeffSeq& row = table[pk - 1];
    auto verdict = pp::is_pp_exhaustive(
        [&](const FieldElement& x) { return row[x.code()]; }, spec);
    c.expect(verdict.is_pp == pp::power_form_is_pp(k, spec),
             [&] { return "gcd criterion disagrees at k=" + std::to_string(k); });
  }
  return c.take();
}

SuiteResult suite_family_crosscheck(const FieldSpec& spec) {
  Checker c("family_crosscheck");
  const u64 p = spec.p();
  // exact rational coefficients (n-ki) C(n-i,i) / (n-i) against the
  // Lucas-based scheme used by eval_direct
  for (u64 n = 1; n <= 50; ++n)
    for (u64 i = 0; i <= n / 2; ++i)
      for (std::uint32_t k = 0; k <= 3; ++k) {
        cpp_int exact = (cpp_int(n) - cpp_int(k) * i) * binom_exact(n - i, i);
        exact /= static_cast<std::int64_t>(n - i);  // always divides evenly
        u64 expected = mod_p(exact, p);
        u64 lucas = spec.binom(n - i, i);
        u64 corr = i >= 1 ? spec.binom(n - i - 1, i - 1) : 0;
        // scheme term: C(n-i,i) - (k-1) C(n-i-1,i-1)
        u64 km1 = (u64(k) + p - 1) % p;
        u64 scheme = (lucas + (p - km1 * corr % p)) % p;
        c.expect(scheme == expected, [&] {
          return "coefficient mismatch at n=" + std::to_string(n) +
                 " i=" + std::to_string(i) + " k=" + std::to_string(k);
        });
      }
  // pointwise: the k = 1 family is the second kind
  const u64 step = stride_for(spec.q(), 9);
  for (u64 n = 0; n <= 24; ++n)
    for (u64 ia = 0; ia < spec.q(); ia += step)
      for (u64 ix = 0; ix < spec.q(); ix += step) {
        FieldElement a = spec.from_code(ia), x = spec.from_code(ix);
        FieldElement second =
            dickson::eval_direct({n, a, x, dickson::Family::reversed_kth_kind, 1});
        FieldElement e_form =
            dickson::eval_direct({n, a, x, dickson::Family::reversed_second_kind, 1});
        c.expect(second == e_form,
                 [&] { return "k=1 family != second kind at n=" + std::to_string(n); });
      }
  return c.take();
}

SuiteResult suite_pp_agreement(const FieldSpec& spec) {
  Checker c("pp_agreement");
  const u64 q = spec.q();
  const u64 n_top = q * q - 1;
  const u64 step = stride_for(n_top, 2000);
  auto table = dickson::e1_table(spec, n_top);
  for (u64 n = 0; n <= n_top; n += step) {
    const CoeffSeq& row = table[n];
    auto f = [&](const FieldElement& x) { return row[x.code()]; };
    auto exhaustive = pp::is_pp_exhaustive(f, spec);
    auto power_sum = pp::is_pp_power_sum(f, spec);
    c.expect(exhaustive.is_pp == power_sum.is_pp, [&] {
      return "power-sum verdict differs at n=" + std::to_string(n);
    });
    if (spec.p() != 2) {
      auto two = pp::is_pp_two_to_one(n, spec);
      c.expect(exhaustive.is_pp == two.is_pp, [&] {
        return "2-to-1 verdict differs at n=" + std::to_string(n);
      });
    }
  }
  return c.take();
}

SuiteResult suite_reflection_set(const FieldSpec& spec) {
  Checker c("reflection_set");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  auto v = pp::reflection_set(spec);
  c.expect(v.size() == spec.q(), "size != q");
  const FieldElement half = spec.from_int(2).inverse();
  const QuadElement one = spec.quad_one();
  std::size_t base_members = 0;
  for (const auto& x : v) {
    if (x.in_base()) {
      ++base_members;
      c.expect(x.c0 == half, "base member is not 1/2");
    }
    c.expect(x.pow(spec.q()) + x == one,
             [&] { return "x^q + x != 1 at code " + std::to_string(x.code()); });
    QuadElement mirror = one - x;
    bool closed = false;
    for (const auto& y : v)
      if (y == mirror) {
        closed = true;
        break;
      }
    c.expect(closed, "set not closed under x -> 1-x");
  }
  c.expect(base_members == 1, "intersection with F_q is not a single point");
  return c.take();
}

SuiteResult suite_zero_param(const FieldSpec& spec) {
  Checker c("zero_param");
  const u64 q = spec.q();
  const u64 n_top = q * q - 1;
  const u64 step = stride_for(n_top, 512);
  for (u64 n = 0; n <= n_top; n += step) {
    auto verdict = pp::is_pp_exhaustive(
        [&](const FieldElement& x) { return dickson::zero_param(n, x); }, spec);
    c.expect(verdict.is_pp == pp::zero_param_is_pp(n, q),
             [&] { return "zero-parameter classification wrong at n=" + std::to_string(n); });
  }
  return c.take();
}

SuiteResult suite_nec_soundness(const FieldSpec& spec) {
  Checker c("nec_soundness");
  const u64 q = spec.q();
  const u64 n_top = q * q - 1;
  auto table = dickson::e1_table(spec, n_top);
  for (u64 n = 1; n <= n_top; ++n) {
    const CoeffSeq& row = table[n];
    auto verdict = pp::is_pp_exhaustive(
        [&](const FieldElement& x) { return row[x.code()]; }, spec);
    if (!verdict.is_pp) continue;
    auto report = nec::screen_one(n, q, spec.p());
    c.expect(report.overall, [&] {
      return "a permutation index fails a filter at n=" + std::to_string(n);
    });
  }
  return c.take();
}

SuiteResult suite_gcd_product(const FieldSpec& spec) {
  Checker c("gcd_product");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  for (u64 n = 1; n <= 10000; n += 4)
    c.expect(nec::gcd_product_identity(n, spec.q()),
             [&] { return "gcd product identity fails at n=" + std::to_string(n); });
  return c.take();
}

SuiteResult suite_square_ratio(const FieldSpec& spec) {
  Checker c("square_ratio");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  const u64 qq = spec.q() * spec.q();
  const u64 step = stride_for(qq, 4096);
  for (u64 code = 2; code < qq; code += step) {
    QuadElement theta = spec.quad_from_code(code);
    if (theta.is_zero() || theta == spec.quad_one()) continue;
    c.expect(nec::square_ratio_biconditional(theta),
             [&] { return "criterion fails at theta code " + std::to_string(code); });
  }
  return c.take();
}

SuiteResult suite_odd_binomial(const FieldSpec& spec) {
  Checker c("odd_binomial");
  if (spec.p() != 2) {
    const u64 step = stride_for(spec.q(), 32);
    for (u64 m = 0; m <= 50; ++m)
      for (u64 ix = 1; ix < spec.q(); ix += step)
        c.expect(nec::odd_binomial_self_reciprocal(m, spec.from_code(ix)),
                 [&] { return "self-reciprocity fails at m=" + std::to_string(m); });
  }
  // characteristic-free exact values
  for (u64 m = 0; m <= 200; ++m) {
    cpp_int at_one = nec::odd_binomial_exact(2 * m + 2, 1);
    c.expect(at_one == cpp_int(1) << (2 * m + 1),
             [&] { return "value at 1 wrong for m=" + std::to_string(m); });
    cpp_int at_minus = nec::alternating_odd_binomial_sum(m);
    c.expect((at_minus == 0) == (m % 2 == 1),
             [&] { return "vanishing at -1 wrong for m=" + std::to_string(m); });
  }
  return c.take();
}

SuiteResult suite_kernel_numerator(const FieldSpec& spec) {
  Checker c("kernel_numerator");
  if (spec.p() == 2) {
    c.not_applicable();
    return c.take();
  }
  CoeffSeq closed = sums::kernel_numerator(spec);
  CoeffSeq expanded = sums::kernel_numerator_expanded(spec);
  c.expect(closed.size() == expanded.size(), "length mismatch");
  for (std::size_t i = 0; i < closed.size(); ++i)
    c.expect(closed[i] == expanded[i],
             [&] { return "coefficient differs at i=" + std::to_string(i); });
  return c.take();
}

SuiteResult suite_sum_tables(const FieldSpec& spec) {
  Checker c("sum_tables");
  if (spec.p() == 2 || spec.q() > 256) {
    c.not_applicable();
    return c.take();
  }
  CoeffSeq rhs = sums::rhs_coeffs(spec);
  sums::SumTable scheme = sums::table_scheme(spec);
  sums::SumTable brute = sums::table_brute_force(spec);
  c.expect(scheme.values.size() == spec.q() * spec.q() - 1, "bad table length");
  for (std::size_t i = 0; i < scheme.values.size(); ++i)
    c.expect(scheme.values[i] == brute.values[i], [&] {
      return "table mismatch at n=" + std::to_string(i + 1);
    });
  c.expect(!sums::check_sum_recurrences(scheme, rhs).has_value(),
           "recurrences fail on the scheme table");
  c.expect(!sums::check_sum_recurrences(brute, rhs).has_value(),
           "recurrences fail on the brute-force table");
  return c.take();
}

SuiteResult suite_sum_periodicity(const FieldSpec& spec) {
  Checker c("sum_periodicity");
  if (spec.p() == 2 || spec.q() > 7) {
    c.not_applicable();
    return c.take();
  }
  const u64 q = spec.q();
  const u64 period = q * q - 1;
  // d_n = S_n - (n+1)/2^n repeats with period q^2-1 when the table is
  // extended beyond it by brute force
  std::vector<FieldElement> d;
  for (u64 n = 1; n <= 2 * period; ++n) d.push_back(spec.zero());
  for (u64 code = 0; code < q; ++code) {
    FieldElement a = spec.from_code(code);
    FieldElement prev = spec.one(), cur = spec.one();
    d[0] = d[0] + cur;
    for (u64 n = 2; n <= 2 * period; ++n) {
      FieldElement next = cur - a * prev;
      prev = cur;
      cur = next;
      d[n - 1] = d[n - 1] + cur;
    }
  }
  for (u64 n = 1; n <= 2 * period; ++n)
    d[n - 1] = d[n - 1] - dickson::quarter_value(n, spec);
  for (u64 n = 1; n + period <= 2 * period; ++n)
    c.expect(d[n - 1] == d[n + period - 1],
             [&] { return "adjusted sums not periodic at n=" + std::to_string(n); });
  return c.take();
}

using SuiteFn = SuiteResult (*)(const FieldSpec&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"field_axioms", suite_field_axioms},
      {"frobenius", suite_frobenius},
      {"parameterization", suite_parameterization},
      {"field_power_sums", suite_field_power_sums},
      {"binomials", suite_binomials},
      {"evaluator_agreement", suite_evaluator_agreement},
      {"period6", suite_period6},
      {"series_defect", suite_series_defect},
      {"scaling_identity", suite_scaling_identity},
      {"frobenius_identity", suite_frobenius_identity},
      {"power_identity", suite_power_identity},
      {"family_crosscheck", suite_family_crosscheck},
      {"pp_agreement", suite_pp_agreement},
      {"reflection_set", suite_reflection_set},
      {"zero_param", suite_zero_param},
      {"nec_soundness", suite_nec_soundness},
      {"gcd_product", suite_gcd_product},
      {"square_ratio", suite_square_ratio},
      {"odd_binomial", suite_odd_binomial},
      {"kernel_numerator", suite_kernel_numerator},
      {"sum_tables", suite_sum_tables},
      {"sum_periodicity", suite_sum_periodicity},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<SuiteResult> run(const FieldSpec& spec,
                             const std::vector<std::string>& names) {
  std::vector<SuiteResult> results;
  if (names.empty()) {
    for (const auto& [name, fn] : registry()) results.push_back(fn(spec));
    return results;
  }
  for (const auto& wanted : names) {
    bool found = false;
    for (const auto& [name, fn] : registry()) {
      if (name == wanted) {
        results.push_back(fn(spec));
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown suite: " + wanted);
  }
  return results;
}

}  // namespace dicksonlab::verify
