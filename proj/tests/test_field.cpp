#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dicksonlab/field.hpp"
#include "dicksonlab/io.hpp"
#include "oracles.hpp"

using namespace dicksonlab;

TEST_CASE("field construction picks deterministic parameters") {
  Field f5 = make_field(5, 1);
  CHECK(f5->q() == 5);
  CHECK(f5->modulus() == std::vector<std::uint32_t>{0, 1});
  // oracle: squares mod 5 are {0,1,4}, so the smallest non-square is 2
  std::set<std::uint64_t> squares;
  for (std::uint64_t a = 0; a < 5; ++a) squares.insert(a * a % 5);
  CHECK(squares == std::set<std::uint64_t>{0, 1, 4});
  CHECK(f5->nonresidue().code() == 2);

  Field f9 = make_field(3, 2);
  // oracle: t^2+1 has no root mod 3
  for (std::uint64_t r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);
  CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f9->q() == 9);

  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
}

TEST_CASE("size guard and overrides") {
  CHECK_THROWS_AS(make_field(2, 17), std::invalid_argument);      // q > 2^16
  CHECK_NOTHROW(make_field(2, 17, std::nullopt, true));           // forced
  CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint32_t>{2, 0, 1}),
                  std::invalid_argument);  // t^2+2 = (t-1)(t+1) mod 3
  CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint32_t>{1, 1, 2}),
                  std::invalid_argument);  // not monic
  Field alt = make_field(3, 2, std::vector<std::uint32_t>{2, 2, 1});
  CHECK(alt->q() == 9);  // t^2+2t+2 is irreducible mod 3
}

TEST_CASE("basic arithmetic matches hand values") {
  Field f5 = make_field(5, 1);
  CHECK(f5->from_int(2) * f5->from_int(4) == f5->from_int(3));
  // oracle: exhaustive inverse search
  std::uint64_t inv4 = 0;
  for (std::uint64_t c = 1; c < 5; ++c)
    if (c * 4 % 5 == 1) inv4 = c;
  CHECK(inv4 == 4);
  CHECK(f5->one() / f5->from_int(4) == f5->from_code(inv4));

  Field f9 = make_field(3, 2);
  FieldElement t = f9->from_coeffs({0, 1});
  CHECK(t * t == f9->from_int(2));  // t^2 = -1 under t^2+1

  CHECK_THROWS_AS(f5->one() / f5->zero(), std::invalid_argument);
  CHECK_THROWS_AS(f5->one() + f9->one(), std::invalid_argument);
}

TEST_CASE("powers") {
  Field f5 = make_field(5, 1);
  CHECK(f5->from_int(2).pow(4) == f5->one());
  CHECK(f5->zero().pow(0) == f5->one());  // 0^0 = 1 by convention
  CHECK(f5->zero().pow(3) == f5->zero());

  Field f9 = make_field(3, 2);
  FieldElement t = f9->from_coeffs({0, 1});
  FieldElement acc = f9->one();
  for (int i = 0; i < 8; ++i) acc = acc * t;  // oracle: repeated product
  CHECK(acc == f9->one());
  CHECK(t.pow(8) == f9->one());
}

TEST_CASE("enumeration order is the code order") {
  Field f3 = make_field(3, 1);
  auto elems = f3->elements();
  REQUIRE(elems.size() == 3);
  for (std::uint64_t c = 0; c < 3; ++c) CHECK(elems[c].code() == c);

  Field f9 = make_field(3, 2);
  auto elems9 = f9->elements();
  REQUIRE(elems9.size() == 9);
  CHECK(io::render(elems9[0]) == "0.0");
  CHECK(io::render(elems9[1]) == "1.0");
  CHECK(io::render(elems9[2]) == "2.0");
  CHECK(elems9[1] == f9->from_int(1));
  CHECK(elems9[2] == f9->from_int(2));

  CHECK(make_field(5, 1)->elements().size() == 5);
}

TEST_CASE("binomials mod p agree with the integer oracle") {
  CHECK(binom_mod_p(5, 2, 5) == 0);  // integer value 10
  CHECK(oracles::binom(5, 2) == 10);
  CHECK(binom_mod_p(4, 1, 5) == 4);
  for (std::uint64_t n = 0; n < 40; ++n) CHECK(binom_mod_p(n, 0, 7) == 1);

  for (std::uint64_t p : {3, 5}) {
    Field f = make_field(p, 1);
    std::vector<oracles::cpp_int> row{1};
    for (std::uint64_t n = 0; n <= 2000; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        std::uint64_t expected = oracles::mod_p(row[k], p);
        REQUIRE(f->binom(n, k) == expected);
        REQUIRE(binom_mod_p(n, k, p) == expected);
      }
      row.push_back(1);
      for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
    }
  }
  // a couple of larger primes at moderate depth
  for (std::uint64_t p : {7, 13, 65521}) {
    std::vector<oracles::cpp_int> row{1};
    for (std::uint64_t n = 0; n <= 300; ++n) {
      for (std::uint64_t k = 0; k <= n; k += (n <= 60 ? 1 : 11))
        REQUIRE(binom_mod_p(n, k, p) == oracles::mod_p(row[k], p));
      row.push_back(1);
      for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
    }
  }
}

TEST_CASE("square roots in the quadratic extension") {
  Field f9 = make_field(3, 2);
  FieldElement two = f9->from_int(2);
  FieldElement t = f9->from_coeffs({0, 1});
  // oracle: the square table of F_9 itself says (+-t)^2 = 2
  CHECK(t * t == two);
  CHECK((-t) * (-t) == two);
  auto root = f9->sqrt(f9->embed(two));
  REQUIRE(root.has_value());
  CHECK(*root == f9->embed(t));  // code 3 beats code 6

  CHECK(*f9->sqrt(f9->quad_zero()) == f9->quad_zero());
  CHECK(*f9->sqrt(f9->quad_one()) == f9->quad_one());

  // every element of F_{q^2} either has a root squaring back to it, or is
  // flagged non-square consistently with the Euler criterion
  for (std::uint64_t p : {3, 5}) {
    Field f = make_field(p, 1);
    const std::uint64_t qq = f->q() * f->q();
    std::size_t squares = 0;
    for (std::uint64_t c = 0; c < qq; ++c) {
      QuadElement a = f->quad_from_code(c);
      auto s = f->sqrt(a);
      bool euler_square = a.is_zero() || a.pow((qq - 1) / 2) == f->quad_one();
      CHECK(s.has_value() == euler_square);
      if (s) CHECK((*s) * (*s) == a);
    }
    for (std::uint64_t c = 0; c < qq; ++c)
      if (f->sqrt(f->quad_from_code(c))) ++squares;
    CHECK(squares == (qq - 1) / 2 + 1);
  }
}

TEST_CASE("tonelli-shanks fallback beyond the table range") {
  // q = 331 > 256: no precomputed square table
  Field f = make_field(331, 1, std::nullopt, true);
  const std::uint64_t qq = f->q() * f->q();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    QuadElement a = f->quad_from_code(rng() % qq);
    auto s = f->sqrt(a);
    bool euler_square = a.is_zero() || a.pow((qq - 1) / 2) == f->quad_one();
    REQUIRE(s.has_value() == euler_square);
    if (s) {
      REQUIRE((*s) * (*s) == a);
      REQUIRE(s->code() <= (-*s).code());  // canonical choice
    }
  }
  // embedded base elements are always squares
  for (std::uint64_t c = 0; c < f->q(); c += 13) {
    auto s = f->sqrt(f->embed(f->from_code(c)));
    REQUIRE(s.has_value());
  }
}

TEST_CASE("parameterization solves x = y(1-y)") {
  Field f5 = make_field(5, 1);
  auto [y1, y2] = f5->parameterize(f5->zero());
  CHECK(((y1 == f5->quad_zero() && y2 == f5->quad_one()) ||
         (y1 == f5->quad_one() && y2 == f5->quad_zero())));

  auto [h1, h2] = f5->parameterize(f5->from_int(4));  // 4 = 1/4 in F_5
  QuadElement half = f5->embed(f5->from_int(3));      // 1/2 = 3
  CHECK(h1 == half);
  CHECK(h2 == half);

  Field f3 = make_field(3, 1);
  auto [y, ym] = f3->parameterize(f3->from_int(2));
  // worked example: y = 2 + 2u with u^2 = 2
  CHECK(y == f3->quad(f3->from_int(2), f3->from_int(2)));
  CHECK(y * ym == f3->embed(f3->from_int(2)));

  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    Field f = make_field(p, e);
    for (std::uint64_t c = 0; c < f->q(); ++c) {
      FieldElement x = f->from_code(c);
      auto [a, b] = f->parameterize(x);
      CHECK(a + b == f->quad_one());
      CHECK(a * b == f->embed(x));
    }
  }
  Field f2 = make_field(2, 1);
  CHECK_THROWS_AS(f2->parameterize(f2->one()), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 3}, {3, 2}, {5, 2}, {3, 3}, {23, 1}}) {
    Field f = make_field(p, e);
    const std::uint64_t q = f->q();
    for (std::uint64_t ia = 0; ia < q; ++ia) {
      FieldElement a = f->from_code(ia);
      CHECK(a + (-a) == f->zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
      for (std::uint64_t ib = 0; ib < q; ++ib) {
        FieldElement b = f->from_code(ib);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (std::uint64_t ic = 0; ic < q; ++ic) {
          FieldElement c = f->from_code(ic);
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("frobenius fixes the right subfields") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 2}, {5, 2}, {2, 4}, {7, 1}}) {
    Field f = make_field(p, e);
    const std::uint64_t q = f->q();
    for (std::uint64_t ia = 0; ia < q; ++ia) {
      FieldElement a = f->from_code(ia);
      CHECK(a.pow(q) == a);
      for (std::uint64_t ib = 0; ib < q; ++ib) {
        FieldElement b = f->from_code(ib);
        CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
        CHECK((a * b).pow(p) == a.pow(p) * b.pow(p));
      }
    }
    if (p == 2) continue;
    const std::uint64_t qq = q * q;
    for (std::uint64_t c = 0; c < qq; c += 3) {
      QuadElement x = f->quad_from_code(c);
      CHECK(x.pow(qq) == x);
      CHECK(x.pow(q) == x.conj());
    }
  }
}

TEST_CASE("power sums over the whole field") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}, {2, 3}}) {
    Field f = make_field(p, e);
    const std::uint64_t q = f->q();
    for (std::uint64_t k = 0; k <= q - 1; ++k) {
      FieldElement sum = f->zero();
      for (std::uint64_t c = 0; c < q; ++c) sum = sum + f->from_code(c).pow(k);
      if (k == q - 1)
        CHECK(sum == -f->one());
      else
        CHECK(sum == f->zero());
    }
  }
}

TEST_CASE("element text round trip") {
  Field f9 = make_field(3, 2);
  FieldElement a = f9->from_coeffs({1, 2});
  CHECK(io::render(a) == "1.2");
  CHECK(io::parse_element("1.2", *f9) == a);
  CHECK(io::parse_element("2", *f9) == f9->from_int(2));
  CHECK_THROWS_AS(io::parse_element("3.0", *f9), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_element("1.2.1", *f9), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_element("x", *f9), std::invalid_argument);
  CHECK_THROWS_AS(f9->from_code(9), std::invalid_argument);
}
