#include "dicksonlab/pp.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dicksonlab/dickson.hpp"

namespace dicksonlab::pp {

Verdict is_pp_exhaustive(const EvalFn& f, const FieldSpec& spec) {
  const std::uint64_t q = spec.q();
  std::vector<std::uint64_t> first_preimage(q, q);  // q = unseen
  for (std::uint64_t c = 0; c < q; ++c) {
    std::uint64_t image = f(spec.from_code(c)).code();
    if (first_preimage[image] != q) {
      return {false, Method::exhaustive,
              Witness{Collision{first_preimage[image], c}}};
    }
    first_preimage[image] = c;
  }
  return {true, Method::exhaustive, std::nullopt};
}

Verdict is_pp_power_sum(const EvalFn& f, const FieldSpec& spec) {
  const std::uint64_t q = spec.q();
  std::vector<FieldElement> images;
  images.reserve(q);
  for (std::uint64_t c = 0; c < q; ++c) images.push_back(f(spec.from_code(c)));
  std::vector<FieldElement> powers(q, spec.one());  // i = 0, with 0^0 = 1
  const FieldElement minus_one = -spec.one();
  for (std::uint64_t i = 0; i < q; ++i) {
    FieldElement sum = spec.zero();
    for (auto& v : powers) sum = sum + v;
    const FieldElement expected = (i == q - 1) ? minus_one : spec.zero();
    if (sum != expected)
      return {false, Method::power_sum, Witness{BadExponent{i}}};
    if (i + 1 < q)
      for (std::uint64_t j = 0; j < q; ++j) powers[j] = powers[j] * images[j];
  }
  return {true, Method::power_sum, std::nullopt};
}

std::vector<QuadElement> reflection_set(const FieldSpec& spec) {
  if (spec.p() == 2)
    throw std::domain_error("reflection set requires odd characteristic");
  const std::uint64_t qq = spec.q() * spec.q();
  std::vector<QuadElement> v;
  v.reserve(spec.q());
  const QuadElement one = spec.quad_one();
  for (std::uint64_t c = 0; c < qq; ++c) {
    QuadElement x = spec.quad_from_code(c);
    if (x.pow(spec.q()) == one - x) v.push_back(x);
  }
  if (v.size() != spec.q())
    throw std::logic_error("reflection set has unexpected size");
  return v;
}

Verdict is_pp_two_to_one(std::uint64_t n, const FieldSpec& spec) {
  if (spec.p() == 2)
    throw std::domain_error("the 2-to-1 criterion requires odd characteristic");
  const std::uint64_t q = spec.q();
  const QuadElement one = spec.quad_one();
  const QuadElement half = spec.embed(spec.from_int(2).inverse());

  // (F_q u V) \ {1/2}: sizes q-1 + q-1 since F_q n V = {1/2}
  std::vector<QuadElement> domain;
  domain.reserve(2 * q - 2);
  for (std::uint64_t c = 0; c < q; ++c) {
    QuadElement y = spec.embed(spec.from_code(c));
    if (y != half) domain.push_back(y);
  }
  for (const QuadElement& y : reflection_set(spec))
    if (y != half) domain.push_back(y);
  if (domain.size() != 2 * q - 2)
    throw std::logic_error("unexpected 2-to-1 domain size");

  const FieldElement quarter_image = dickson::quarter_value(n, spec);
  struct Hits {
    std::uint64_t first, second;
    int count;
  };
  std::unordered_map<std::uint64_t, Hits> seen;
  seen.reserve(domain.size());
  bool two_to_one = true;
  std::optional<Witness> witness;
  for (const QuadElement& y : domain) {
    QuadElement num = y.pow(n + 1) - (one - y).pow(n + 1);
    QuadElement den = y + y - one;
    QuadElement value = num / den;
    if (!value.in_base())
      throw std::logic_error("2-to-1 map left the base field");
    if (value.c0 == quarter_image)
      return {false, Method::two_to_one,
              Witness{Collision{y.code(), half.code()}}};
    auto [it, inserted] = seen.emplace(value.code(), Hits{y.code(), 0, 1});
    if (inserted) continue;
    Hits& h = it->second;
    h.count += 1;
    if (h.count == 2) {
      h.second = y.code();
    } else if (two_to_one) {
      // third hit: report a pair from two distinct {y, 1-y} fibers
      const std::uint64_t partner = (one - spec.quad_from_code(h.first)).code();
      two_to_one = false;
      witness = (y.code() != partner) ? Witness{Collision{h.first, y.code()}}
                                      : Witness{Collision{h.first, h.second}};
    }
  }
  if (!two_to_one) return {false, Method::two_to_one, witness};
  // the map is invariant under y -> 1-y and the domain is closed under it,
  // so multiplicities are even; anything else is an internal error
  for (const auto& [value, hits] : seen)
    if (hits.count != 2)
      throw std::logic_error("2-to-1 multiset has an odd fiber");
  return {true, Method::two_to_one, std::nullopt};
}

bool zero_param_is_pp(std::uint64_t n, std::uint64_t q) {
  if (n % 2 == 1) return false;
  return std::gcd(n / 2, q - 1) == 1;
}

bool power_form_is_pp(std::uint32_t k, const FieldSpec& spec) {
  if (spec.p() == 2)
    throw std::domain_error("power_form_is_pp requires odd characteristic");
  if (k < 1 || k > spec.e()) throw std::invalid_argument("k out of range");
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= spec.p();
  return std::gcd((pk - 1) / 2, spec.q() - 1) == 1;
}

}  // namespace dicksonlab::pp
