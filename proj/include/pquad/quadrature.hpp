#pragma once

#include "pquad/func1d.hpp"
#include "pquad/interval.hpp"

namespace pquad {

/// Default absolute tolerance of the reference integrator. Bound and identity
/// assertions run at 1e-9 and above, so the oracle's budget sits well below.
inline constexpr double kOracleTol = 1e-10;
inline constexpr int kOracleMaxDepth = 50;

/// The (alpha, lambda) pair parameterizing the three-point rule: lambda
/// weights the endpoint pair against the interior node, alpha splits the
/// endpoint weight and places the node at alpha*a + (1-alpha)*b.
class RuleParams {
public:
    RuleParams(double alpha, double lambda) : alpha_(alpha), lambda_(lambda) {
        if (!(alpha >= 0.0 && alpha <= 1.0) || !(lambda >= 0.0 && lambda <= 1.0))
            throw ParameterError("rule parameters must lie in [0,1]^2");
    }

    double alpha() const noexcept { return alpha_; }
    double lambda() const noexcept { return lambda_; }

private:
    double alpha_;
    double lambda_;
};

struct IntegralResult {
    double value;
    double error_est;  // estimated absolute error, >= 0
};

struct QuadResult {
    double i_f;           // signed value of the rule functional
    double ref_integral;  // reference value of the integral over [a,b]
    double ref_error_est;
};

/// Adaptive interval-halving Simpson quadrature with Richardson error
/// extrapolation. Accepts a panel once the two-half refinement agrees with the
/// single-panel estimate to the local budget (or to roundoff level for very
/// large integrands) and returns the extrapolated value.
///
/// Throws IntegrationError carrying the offending subinterval when a panel
/// still disagrees at `max_depth` halvings, and EvaluationError when the
/// integrand returns a non-finite value.
IntegralResult reference_integral(const RealFn& g, const Interval& iv,
                                  double tol = kOracleTol,
                                  int max_depth = kOracleMaxDepth);

/// Integral of f over iv: the closed-form antiderivative when the function
/// carries one (error estimate 0), the adaptive oracle otherwise.
IntegralResult integrate_func(const Func1D& f, const Interval& iv,
                              double tol = kOracleTol);

/// Evaluates the rule-error functional
///   lambda*(alpha f(a) + (1-alpha) f(b)) + (1-lambda) f(alpha a + (1-alpha) b)
///     - (1/(b-a)) * integral of f over [a,b].
QuadResult quad_functional(const Func1D& f, const Interval& iv, const RuleParams& rp);

/// Right-hand side of the kernel identity: (b-a) times the sum of the two
/// weighted derivative integrals
///   int_0^{1-alpha} (t - alpha*lambda) f'(tb+(1-t)a) dt
///   + int_{1-alpha}^1 (t - 1 + lambda(1-alpha)) f'(tb+(1-t)a) dt,
/// each evaluated with the reference oracle. Equals quad_functional().i_f up
/// to oracle error; the sub-integral over an empty range (alpha in {0,1})
/// contributes 0.
double identity_rhs(const Func1D& f, const Interval& iv, const RuleParams& rp);

}  // namespace pquad
