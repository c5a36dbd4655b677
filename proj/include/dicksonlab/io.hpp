/// Canonical text forms. Elements render as their coefficient sequence
/// joined by '.', lowest coefficient first: "2" in a prime field, "1.2"
/// for c0=1, c1=2. The forms are stable so fixtures diff cleanly.

#pragma once

#include <string>

#include <json.hpp>

#include "dicksonlab/field.hpp"

namespace dicksonlab::io {

std::string render(const FieldElement& a);
/// F_{q^2} elements render as "<c0>|<c1>".
std::string render(const QuadElement& a);

/// Accepts 1..e dot-separated residues; missing high coefficients are zero.
FieldElement parse_element(const std::string& text, const FieldSpec& spec);

nlohmann::ordered_json field_spec_json(const FieldSpec& spec);

}  // namespace dicksonlab::io
