#pragma once

#include <cmath>

#include "pquad/errors.hpp"

namespace pquad {

/// A finite real segment [a, b] with a < b.
class Interval {
public:
    Interval(double a, double b) : a_(a), b_(b) {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw ParameterError("interval endpoints must be finite");
        if (!(a < b)) throw ParameterError("interval requires a < b");
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double width() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return 0.5 * (a_ + b_); }

    bool contains(double x) const noexcept { return a_ <= x && x <= b_; }
    bool contains(const Interval& sub) const noexcept {
        return a_ <= sub.a_ && sub.b_ <= b_;
    }

private:
    double a_;
    double b_;
};

}  // namespace pquad
