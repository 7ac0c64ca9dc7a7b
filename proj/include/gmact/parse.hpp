#pragma once
#include "gmact/polynomial.hpp"

namespace gmact {

/// Text grammar: integers, rational coefficients "p/q", variable names,
/// and the operators + - * ^ ( ). Round-trips with Polynomial::str().
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

} // namespace gmact
