#pragma once

#include <string_view>
#include <vector>

#include "pquad/func1d.hpp"

namespace pquad {

/// The built-in test functions. Every entry's |f'|^q is a P-function on its
/// p_cert_domain for all q >= 1 (powers and exp give nonnegative convex
/// derivative powers, recip and xlogx give nonnegative monotone ones); the
/// test suite re-validates each declaration with the sampled checker.
const std::vector<Func1D>& catalog();

/// Looks an entry up by its stable lowercase name ("pow3", "exp", ...).
/// Throws ParameterError for unknown names.
const Func1D& find_function(std::string_view name);

/// Monomial x^n with its closed-form antiderivative, certified on [-6, 6].
/// Catalog entries pow2..pow6 are instances of this.
Func1D power_function(int n);

}  // namespace pquad
