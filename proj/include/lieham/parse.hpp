#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lieham/poly.hpp"

namespace lieham {

/// Parses "p/q", "p/q+r/s*sqrt(d)" and any constant arithmetic expression.
Scalar parse_scalar(std::string_view text);

/// Parses a polynomial expression over ring. Supports + - * / ^, parentheses,
/// integers and sqrt(d). Division is allowed by constants and parameter monomials.
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Identifiers appearing in an expression, in order of first appearance.
std::vector<std::string> identifiers_in(std::string_view text);

/// True for names of the form u<k>.
bool is_field_var_name(std::string_view name);

/// True for jet names such as u1_x or u2_xx.
bool is_jet_name(std::string_view name);

}  // namespace lieham
