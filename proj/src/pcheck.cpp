#include "pquad/pcheck.hpp"

#include <array>
#include <cmath>

#include "pquad/quadrature.hpp"
#include "pquad/rng.hpp"

namespace pquad {

namespace {

double eval_checked(const RealFn& g, double x) {
    const double v = g(x);
    if (!std::isfinite(v)) throw EvaluationError("function non-finite at sample", x);
    return v;
}

// Pure floating-point roundoff guard, not a semantic relaxation.
double guard(double scale) { return 1e-12 * std::max(1.0, scale); }

struct Checker {
    const RealFn& g;
    std::optional<PWitness> witness;

    // Evaluates g(x); records a negativity witness on failure.
    bool point(double x, double& out) {
        out = eval_checked(g, x);
        if (out < -guard(std::abs(out))) {
            witness = PWitness{PWitness::Kind::Negative, x, x, 0.0, out, 0.0};
            return false;
        }
        return true;
    }

    bool nonnegative(double x) {
        double unused;
        return point(x, unused);
    }

    bool triple(double x, double y, double t) {
        const double z = t * x + (1.0 - t) * y;
        double gx, gy, gz;
        if (!point(x, gx) || !point(y, gy) || !point(z, gz)) return false;
        if (gz > gx + gy + guard(std::abs(gx) + std::abs(gy))) {
            witness = PWitness{PWitness::Kind::Subadditive, x, y, t, gz, gx + gy};
            return false;
        }
        return true;
    }
};

}  // namespace

PCheckResult is_p_function_sampled(const RealFn& g, const Interval& iv,
                                   int n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw ParameterError("n_samples must be >= 1");
    Checker chk{g, std::nullopt};

    // Stratified stage: the common failure modes (sign changes, spikes at
    // grid points) show up at endpoints and midpoint before any sampling.
    const std::array<double, 3> pts{iv.a(), iv.midpoint(), iv.b()};
    const std::array<double, 5> mixes{0.0, 0.25, 0.5, 0.75, 1.0};
    for (double p : pts)
        if (!chk.nonnegative(p)) return {false, chk.witness};
    for (double x : pts)
        for (double y : pts)
            for (double t : mixes)
                if (!chk.triple(x, y, t)) return {false, chk.witness};

    SplitMix64 rng(seed);
    for (int i = 0; i < n_samples; ++i) {
        const double x = rng.uniform(iv.a(), iv.b());
        const double y = rng.uniform(iv.a(), iv.b());
        const double t = rng.uniform01();
        if (!chk.triple(x, y, t)) return {false, chk.witness};
    }
    return {true, std::nullopt};
}

HhCheckResult hh_p_check(const Func1D& f, const Interval& iv, double q) {
    if (!(q >= 1.0)) throw ParameterError("hh_p_check requires q >= 1");
    if (!f.certified_on(iv))
        throw CertificationError("interval not P-certified for " + f.name);
    const auto g = [&](double x) { return std::pow(std::abs(f.derivative(x)), q); };
    const double left = g(iv.midpoint());
    const double middle = 2.0 / iv.width() * reference_integral(g, iv).value;
    const double right = 2.0 * (g(iv.a()) + g(iv.b()));
    const double tol = 1e-9 * std::max(1.0, std::abs(left) + std::abs(middle) + std::abs(right));
    const bool holds = left <= middle + tol && middle <= right + tol;
    return {left, middle, right, holds};
}

}  // namespace pquad
