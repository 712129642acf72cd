#pragma once

#include <functional>
#include <string>

#include "pquad/interval.hpp"

namespace pquad {

using RealFn = std::function<double(double)>;

/// A differentiable scalar test function.
///
/// `antiderivative` is optional; when present it is treated as exact and used
/// as the integral oracle. `p_cert_domain` is the interval on which
/// |derivative|^q is asserted to be a P-function for every q >= 1; the
/// declaration is validated by sampling in the test suite, never inferred.
struct Func1D {
    std::string name;
    RealFn value;
    RealFn derivative;
    RealFn antiderivative;  // empty when no closed form is known
    Interval valid_domain;
    Interval p_cert_domain;

    bool has_antiderivative() const { return static_cast<bool>(antiderivative); }
    bool certified_on(const Interval& iv) const { return p_cert_domain.contains(iv); }
};

}  // namespace pquad
