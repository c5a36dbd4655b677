#include "dicksonlab/io.hpp"

#include <sstream>
#include <stdexcept>

namespace dicksonlab::io {

std::string render(const FieldElement& a) {
  const auto digits = a.coeffs();
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(digits[i]);
  }
  return out;
}

std::string render(const QuadElement& a) {
  return render(a.c0) + "|" + render(a.c1);
}

FieldElement parse_element(const std::string& text, const FieldSpec& spec) {
  if (text.empty()) throw std::invalid_argument("empty element literal");
  std::vector<std::uint32_t> digits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string part =
        text.substr(pos, dot == std::string::npos ? std::string::npos
                                                  : dot - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad element literal: " + text);
    unsigned long value = std::stoul(part);
    if (value >= spec.p())
      throw std::invalid_argument("coefficient out of range in: " + text);
    digits.push_back(static_cast<std::uint32_t>(value));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  if (digits.size() > spec.e())
    throw std::invalid_argument("too many coefficients in: " + text);
  return spec.from_coeffs(digits);
}

nlohmann::ordered_json field_spec_json(const FieldSpec& spec) {
  nlohmann::ordered_json j;
  j["p"] = spec.p();
  j["e"] = spec.e();
  j["modulus"] = spec.modulus();
  if (spec.has_quad()) {
    j["nu"] = spec.nonresidue().coeffs();
  } else {
    j["nu"] = nullptr;
  }
  return j;
}

}  // namespace dicksonlab::io
