#include "pquad/catalog.hpp"

#include <cmath>
#include <string>

namespace pquad {

namespace {

// Wide enough to cover every interval the means propositions touch, small
// enough that closed-form antiderivatives stay within ~1e-11 of exact in
// double precision (x^7 <= 2.8e5 on [-6,6]).
constexpr double kPowLo = -6.0;
constexpr double kPowHi = 6.0;

std::vector<Func1D> build_catalog() {
    std::vector<Func1D> entries;

    entries.push_back({"const1",
                       [](double) { return 1.0; },
                       [](double) { return 0.0; },
                       [](double x) { return x; },
                       Interval(kPowLo, kPowHi),
                       Interval(kPowLo, kPowHi)});

    entries.push_back({"linear",
                       [](double x) { return x; },
                       [](double) { return 1.0; },
                       [](double x) { return 0.5 * x * x; },
                       Interval(kPowLo, kPowHi),
                       Interval(kPowLo, kPowHi)});

    for (int n = 2; n <= 6; ++n) entries.push_back(power_function(n));

    // |f'|^q = e^{qx}: positive and convex, P on any interval; certified on
    // [0,3] to keep magnitudes tame for the oracle-accuracy checks.
    entries.push_back({"exp",
                       [](double x) { return std::exp(x); },
                       [](double x) { return std::exp(x); },
                       [](double x) { return std::exp(x); },
                       Interval(kPowLo, kPowHi),
                       Interval(0.0, 3.0)});

    // 1/x on the positive axis: |f'|^q = x^{-2q} is positive, decreasing,
    // convex.
    entries.push_back({"recip",
                       [](double x) { return 1.0 / x; },
                       [](double x) { return -1.0 / (x * x); },
                       [](double x) { return std::log(x); },
                       Interval(0.05, 20.0),
                       Interval(0.1, 10.0)});

    // x log x: f' = log x + 1 is nonnegative and increasing on [1, inf), so
    // |f'|^q is monotone nonnegative (hence quasi-convex, hence P).
    entries.push_back({"xlogx",
                       [](double x) { return x * std::log(x); },
                       [](double x) { return std::log(x) + 1.0; },
                       [](double x) { return 0.5 * x * x * std::log(x) - 0.25 * x * x; },
                       Interval(0.25, 20.0),
                       Interval(1.0, 10.0)});

    return entries;
}

}  // namespace

Func1D power_function(int n) {
    if (n < 1) throw ParameterError("power_function requires n >= 1");
    return {"pow" + std::to_string(n),
            [n](double x) { return std::pow(x, n); },
            [n](double x) { return n * std::pow(x, n - 1); },
            [n](double x) { return std::pow(x, n + 1) / (n + 1); },
            Interval(kPowLo, kPowHi),
            Interval(kPowLo, kPowHi)};
}

const std::vector<Func1D>& catalog() {
    static const std::vector<Func1D> entries = build_catalog();
    return entries;
}

const Func1D& find_function(std::string_view name) {
    for (const Func1D& f : catalog())
        if (f.name == name) return f;
    throw ParameterError("unknown function: " + std::string(name));
}

}  // namespace pquad
