#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicksonlab/dickson.hpp"
#include "dicksonlab/pp.hpp"

using namespace dicksonlab;

namespace {

pp::EvalFn e1_at(std::uint64_t n) {
  return [n](const FieldElement& x) { return dickson::e1_recursive(n, x); };
}

}  // namespace

TEST_CASE("exhaustive test on linear and quadratic images") {
  Field f3 = make_field(3, 1);
  // E_2(1,x) = 1 - x hits {1, 0, 2}
  auto v3 = pp::is_pp_exhaustive(e1_at(2), *f3);
  CHECK(v3.is_pp);
  CHECK(!v3.witness.has_value());

  Field f5 = make_field(5, 1);
  CHECK(pp::is_pp_exhaustive(e1_at(2), *f5).is_pp);  // linear

  // E_4(1,x) = (1-4x)^2 collides
  auto v4 = pp::is_pp_exhaustive(e1_at(4), *f5);
  CHECK(!v4.is_pp);
  REQUIRE(v4.witness.has_value());
  const auto* col = std::get_if<pp::Collision>(&*v4.witness);
  REQUIRE(col != nullptr);
  CHECK(col->x1 != col->x2);
  CHECK(dickson::e1_recursive(4, f5->from_code(col->x1)) ==
        dickson::e1_recursive(4, f5->from_code(col->x2)));
}

TEST_CASE("power-sum criterion") {
  Field f3 = make_field(3, 1);
  auto identity = pp::is_pp_power_sum(
      [](const FieldElement& x) { return x; }, *f3);
  CHECK(identity.is_pp);

  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {3, 2}, {2, 3}}) {
    Field f = make_field(p, e);
    auto constant = pp::is_pp_power_sum(
        [&](const FieldElement&) { return f->one(); }, *f);
    CHECK(!constant.is_pp);
    REQUIRE(constant.witness.has_value());
    const auto* bad = std::get_if<pp::BadExponent>(&*constant.witness);
    REQUIRE(bad != nullptr);
    CHECK(bad->i == f->q() - 1);  // sum of ones is 0; only the top row fails
  }

  CHECK(pp::is_pp_power_sum(e1_at(2), *f3).is_pp ==
        pp::is_pp_exhaustive(e1_at(2), *f3).is_pp);
}

TEST_CASE("reflection set structure") {
  Field f3 = make_field(3, 1);
  auto v = pp::reflection_set(*f3);
  REQUIRE(v.size() == 3);
  // 1/2 = 2 in F_3: 2^3 = 8 = 2 = 1 - 2
  bool has_half = false;
  for (const auto& x : v)
    if (x == f3->embed(f3->from_int(2))) has_half = true;
  CHECK(has_half);

  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    Field f = make_field(p, e);
    auto set = pp::reflection_set(*f);
    CHECK(set.size() == f->q());
    const FieldElement half = f->from_int(2).inverse();
    const QuadElement one = f->quad_one();
    std::size_t in_base = 0;
    for (const auto& x : set) {
      CHECK(x.pow(f->q()) + x == one);
      if (x.in_base()) {
        ++in_base;
        CHECK(x.c0 == half);
      }
      bool mirror_in_set = false;
      for (const auto& y : set)
        if (y == one - x) mirror_in_set = true;
      CHECK(mirror_in_set);
    }
    CHECK(in_base == 1);
  }
  CHECK_THROWS_AS(pp::reflection_set(*make_field(2, 2)), std::domain_error);
}

TEST_CASE("2-to-1 criterion basics") {
  Field f3 = make_field(3, 1);
  auto v = pp::is_pp_two_to_one(2, *f3);
  CHECK(v.is_pp);
  CHECK(v.is_pp == pp::is_pp_exhaustive(e1_at(2), *f3).is_pp);

  // the map is symmetric in y <-> 1-y over the whole domain
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {3, 2}}) {
    Field f = make_field(p, e);
    const QuadElement one = f->quad_one();
    const QuadElement half = f->embed(f->from_int(2).inverse());
    std::vector<QuadElement> domain;
    for (std::uint64_t c = 0; c < f->q(); ++c) {
      QuadElement y = f->embed(f->from_code(c));
      if (y != half) domain.push_back(y);
    }
    for (const auto& y : pp::reflection_set(*f))
      if (y != half) domain.push_back(y);
    CHECK(domain.size() == 2 * f->q() - 2);

    for (std::uint64_t n : {2ULL, 5ULL, 9ULL}) {
      for (const auto& y : domain) {
        QuadElement fy =
            (y.pow(n + 1) - (one - y).pow(n + 1)) / (y + y - one);
        QuadElement mirrored = one - y;
        QuadElement fm = (mirrored.pow(n + 1) - (one - mirrored).pow(n + 1)) /
                         (mirrored + mirrored - one);
        CHECK(fy == fm);
        CHECK(fy.in_base());
      }
    }
  }
  CHECK_THROWS_AS(pp::is_pp_two_to_one(2, *make_field(2, 2)),
                  std::domain_error);
}

TEST_CASE("three methods agree across whole index ranges") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {3, 2}}) {
    Field f = make_field(p, e);
    const std::uint64_t top = f->q() * f->q() - 1;
    auto table = dickson::e1_table(*f, top);
    for (std::uint64_t n = 0; n <= top; ++n) {
      const CoeffSeq& row = table[n];
      auto fn = [&](const FieldElement& x) { return row[x.code()]; };
      bool exhaustive = pp::is_pp_exhaustive(fn, *f).is_pp;
      CHECK(pp::is_pp_power_sum(fn, *f).is_pp == exhaustive);
      CHECK(pp::is_pp_two_to_one(n, *f).is_pp == exhaustive);
    }
  }
  // characteristic 2: the two available methods
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 2}, {2, 3}}) {
    Field f = make_field(p, e);
    const std::uint64_t top = f->q() * f->q() - 1;
    auto table = dickson::e1_table(*f, top);
    for (std::uint64_t n = 0; n <= top; ++n) {
      const CoeffSeq& row = table[n];
      auto fn = [&](const FieldElement& x) { return row[x.code()]; };
      CHECK(pp::is_pp_power_sum(fn, *f).is_pp ==
            pp::is_pp_exhaustive(fn, *f).is_pp);
    }
  }
}

TEST_CASE("2-to-1 witnesses point at real collisions") {
  Field f5 = make_field(5, 1);
  const std::uint64_t top = 24;
  auto table = dickson::e1_table(*f5, top);
  const QuadElement one = f5->quad_one();
  for (std::uint64_t n = 0; n <= top; ++n) {
    auto v = pp::is_pp_two_to_one(n, *f5);
    if (v.is_pp) continue;
    REQUIRE(v.witness.has_value());
    const auto* col = std::get_if<pp::Collision>(&*v.witness);
    REQUIRE(col != nullptr);
    QuadElement y1 = f5->quad_from_code(col->x1);
    QuadElement y2 = f5->quad_from_code(col->x2);
    // both parameterize arguments in F_q whose images under E_n coincide
    QuadElement x1 = y1 * (one - y1);
    QuadElement x2 = y2 * (one - y2);
    REQUIRE(x1.in_base());
    REQUIRE(x2.in_base());
    CHECK(x1 != x2);  // distinct fibers
    CHECK(table[n][x1.c0.code()] == table[n][x2.c0.code()]);
  }
}

TEST_CASE("zero-parameter classification") {
  CHECK(!pp::zero_param_is_pp(3, 5));   // odd: constant zero
  CHECK(!pp::zero_param_is_pp(4, 5));   // k = 2, gcd(2,4) = 2
  CHECK(pp::zero_param_is_pp(2, 5));    // -x is linear
  CHECK(!pp::zero_param_is_pp(0, 5));   // constant one

  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {3, 2}, {2, 3}}) {
    Field f = make_field(p, e);
    for (std::uint64_t n = 0; n <= f->q() * f->q() - 1; ++n) {
      auto verdict = pp::is_pp_exhaustive(
          [&](const FieldElement& x) { return dickson::zero_param(n, x); },
          *f);
      CHECK(verdict.is_pp == pp::zero_param_is_pp(n, f->q()));
    }
  }
}

TEST_CASE("gcd criterion for the power form") {
  CHECK(pp::power_form_is_pp(1, *make_field(3, 1)));   // gcd(1, 2) = 1
  CHECK(!pp::power_form_is_pp(1, *make_field(5, 1)));  // gcd(2, 4) = 2
  CHECK(!pp::power_form_is_pp(1, *make_field(7, 1)));  // gcd(3, 6) = 3

  Field f3 = make_field(3, 1);
  CHECK(pp::is_pp_exhaustive(e1_at(2), *f3).is_pp);  // 1-4x = 1-x over F_3

  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    Field f = make_field(p, e);
    for (std::uint32_t k = 1; k <= f->e(); ++k) {
      std::uint64_t pk = 1;
      for (std::uint32_t i = 0; i < k; ++i) pk *= p;
      CHECK(pp::power_form_is_pp(k, *f) ==
            pp::is_pp_exhaustive(e1_at(pk - 1), *f).is_pp);
    }
    CHECK_THROWS_AS(pp::power_form_is_pp(f->e() + 1, *f),
                    std::invalid_argument);
    CHECK_THROWS_AS(pp::power_form_is_pp(0, *f), std::invalid_argument);
  }
  CHECK_THROWS_AS(pp::power_form_is_pp(1, *make_field(2, 3)),
                  std::domain_error);
}
