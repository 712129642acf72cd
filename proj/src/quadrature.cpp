#include "pquad/quadrature.hpp"

#include <cmath>
#include <limits>

namespace pquad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double eval_checked(const RealFn& g, double x) {
    const double v = g(x);
    if (!std::isfinite(v)) throw EvaluationError("integrand non-finite", x);
    return v;
}

struct AdaptState {
    const RealFn& g;
    int max_depth;
    // Kahan-compensated accumulation keeps the roundoff floor near
    // eps * integral of |g| even over many panels.
    double sum = 0.0;
    double comp = 0.0;
    double err = 0.0;

    void accept(double v, double e) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += e;
    }
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// One panel: compare the stored Simpson estimate against its two-half
// refinement; accept with the Richardson-extrapolated value or split.
void adapt(AdaptState& st, double a, double fa, double m, double fm, double b,
           double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    // Cannot refine further once midpoints degenerate in floating point.
    if (!(a < lm && lm < m && m < rm && rm < b)) {
        st.accept(whole, kEps * std::abs(whole));
        return;
    }
    const double flm = eval_checked(st.g, lm);
    const double frm = eval_checked(st.g, rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double two = left + right;
    const double diff = two - whole;
    // Roundoff floor: below this level the difference is noise, not signal.
    const double noise = 32.0 * kEps * (std::abs(left) + std::abs(right));
    if (std::abs(diff) <= 15.0 * tol || std::abs(diff) <= noise) {
        st.accept(two + diff / 15.0, std::abs(diff) / 15.0 + kEps * std::abs(two));
        return;
    }
    if (depth >= st.max_depth)
        throw IntegrationError("adaptive quadrature did not converge", a, b);
    adapt(st, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1);
    adapt(st, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

IntegralResult reference_integral(const RealFn& g, const Interval& iv, double tol,
                                  int max_depth) {
    if (!(tol >= 1e-13)) throw ParameterError("oracle tolerance must be >= 1e-13");
    if (max_depth < 1) throw ParameterError("oracle max depth must be >= 1");
    const double a = iv.a();
    const double b = iv.b();
    const double m = iv.midpoint();
    const double fa = eval_checked(g, a);
    const double fm = eval_checked(g, m);
    const double fb = eval_checked(g, b);
    AdaptState st{g, max_depth};
    adapt(st, a, fa, m, fm, b, fb, simpson(a, b, fa, fm, fb), tol, 0);
    return {st.sum, st.err};
}

IntegralResult integrate_func(const Func1D& f, const Interval& iv, double tol) {
    if (f.has_antiderivative())
        return {f.antiderivative(iv.b()) - f.antiderivative(iv.a()), 0.0};
    return reference_integral(f.value, iv, tol);
}

QuadResult quad_functional(const Func1D& f, const Interval& iv, const RuleParams& rp) {
    if (!f.valid_domain.contains(iv))
        throw ParameterError("interval outside the valid domain of " + f.name);
    const double node = rp.alpha() * iv.a() + (1.0 - rp.alpha()) * iv.b();
    const IntegralResult ref = integrate_func(f, iv);
    const double mean = ref.value / iv.width();
    const double rule = rp.lambda() * (rp.alpha() * f.value(iv.a()) +
                                       (1.0 - rp.alpha()) * f.value(iv.b())) +
                        (1.0 - rp.lambda()) * f.value(node);
    return {rule - mean, ref.value, ref.error_est};
}

namespace {

// Integrates k over [lo, hi] in t-space, splitting at the kernel's kink
// abscissa when it falls strictly inside. Zero-width ranges contribute 0.
double integrate_pieces(const RealFn& k, double lo, double hi, double split) {
    if (!(lo < hi)) return 0.0;
    double total = 0.0;
    if (split > lo && split < hi) {
        total += reference_integral(k, Interval(lo, split)).value;
        total += reference_integral(k, Interval(split, hi)).value;
    } else {
        total += reference_integral(k, Interval(lo, hi)).value;
    }
    return total;
}

}  // namespace

double identity_rhs(const Func1D& f, const Interval& iv, const RuleParams& rp) {
    if (!f.valid_domain.contains(iv))
        throw ParameterError("interval outside the valid domain of " + f.name);
    const double w = iv.width();
    const double a = iv.a();
    const auto fprime = [&](double t) { return f.derivative(a + t * w); };

    const double alpha = rp.alpha();
    const double lambda = rp.lambda();
    const double c1 = alpha * lambda;             // kink of |t - alpha*lambda|
    const double c2 = 1.0 - lambda * (1.0 - alpha);  // kink of the second kernel

    const auto k1 = [&](double t) { return (t - c1) * fprime(t); };
    const auto k2 = [&](double t) { return (t - c2) * fprime(t); };

    double total = integrate_pieces(k1, 0.0, 1.0 - alpha, c1);
    total += integrate_pieces(k2, 1.0 - alpha, 1.0, c2);
    return w * total;
}

}  // namespace pquad
