#pragma once

#include <optional>
#include <string_view>

#include "pquad/func1d.hpp"
#include "pquad/quadrature.hpp"

namespace pquad {

/// The two antiderivative constants of the kernel weight |t - alpha*lambda|:
///   gamma1 = (1-alpha) [alpha*lambda - (1-alpha)/2]
///   gamma2 = (alpha*lambda)^2 - gamma1
/// gamma1 applies when the kink lies past the range, gamma2 when it falls
/// inside; the two coincide at alpha*lambda = 1-alpha.
struct GammaPair {
    double gamma1;
    double gamma2;
};

/// Which row of the three-way power-mean bound applies. Selection is made by
/// two independent comparisons: the first kernel takes its gamma2 branch iff
/// alpha*lambda <= 1-alpha, the second iff lambda*(1-alpha) <= alpha. Ties go
/// to the gamma2 branch (the branches agree there). Both comparisons failing
/// simultaneously would force lambda > 1, so only three rows exist.
enum class CaseTag { C1, C2, C3 };

/// Conjugate exponents p, q > 1 with 1/p + 1/q = 1.
class HolderPair {
public:
    HolderPair(double p, double q);
    static HolderPair conjugate(double p);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

private:
    double p_;
    double q_;
};

/// Kernel weight p-norm constants: eps1 when the kink of |t - alpha*lambda|
/// falls inside the range, eps2 when it lies past it. Each component is
/// meaningful only on its own branch (the out-of-branch formula can raise a
/// negative base to a fractional power); they agree at alpha*lambda = 1-alpha.
struct EpsilonPair {
    double eps1;  // (alpha*lambda)^{p+1} + (1 - alpha - alpha*lambda)^{p+1}
    double eps2;  // (alpha*lambda)^{p+1} - (alpha*lambda - 1 + alpha)^{p+1}
};

/// Derivative-power sums at the node (1-alpha) b + alpha a and the endpoints:
///   c_f = (1-alpha) [ |f'(node)|^q + |f'(a)|^q ]
///   k_f =    alpha  [ |f'(node)|^q + |f'(b)|^q ]
struct CKPair {
    double c_f;
    double k_f;
};

struct BoundReport {
    double i_f_abs;
    double bound22;
    std::optional<double> bound23;  // present iff a Holder pair was supplied
    double q;
    std::optional<HolderPair> holder;
    CaseTag case_tag;
    double ratio22;  // i_f_abs / bound22, 0 when bound22 == 0
    std::optional<double> ratio23;
};

GammaPair gamma_pair(double alpha, double lambda);

CaseTag classify_case(const RuleParams& rp);

/// Power-mean bound: (b-a) (|f'(b)|^q + |f'(a)|^q)^{1/q} times the
/// case-selected gamma sum
///   C1: gamma2(a,l) + gamma2(1-a,l)
///   C2: gamma2(a,l) + gamma1(1-a,l)
///   C3: gamma1(a,l) + gamma2(1-a,l).
/// Requires q >= 1 and iv inside f's certified domain (overridable with
/// allow_uncertified for exploratory sweeps; the bound is then unproven).
double bound_thm22(const Func1D& f, const Interval& iv, const RuleParams& rp,
                   double q, bool allow_uncertified = false);

EpsilonPair epsilon_pair(double alpha, double lambda, double p);

CKPair ck_pair(const Func1D& f, const Interval& iv, double alpha, double q);

/// Holder bound: (b-a) (1/(p+1))^{1/p} times the case-selected combination
///   C1: eps1^{1/p}(a,l,p) c_f^{1/q} + eps1^{1/p}(1-a,l,p) k_f^{1/q}
///   C2: eps1^{1/p}(a,l,p) c_f^{1/q} + eps2^{1/p}(1-a,l,p) k_f^{1/q}
///   C3: eps2^{1/p}(a,l,p) c_f^{1/q} + eps1^{1/p}(1-a,l,p) k_f^{1/q},
/// with case selection shared with classify_case.
double bound_thm23(const Func1D& f, const Interval& iv, const RuleParams& rp,
                   const HolderPair& hp, bool allow_uncertified = false);

/// Midpoint-rule variant of the Holder bound using endpoint derivatives only:
///   (b-a)/4 (1/(p+1))^{1/p} [ (|f'(b)|^q + 2|f'(a)|^q)^{1/q}
///                             + (|f'(a)|^q + 2|f'(b)|^q)^{1/q} ].
/// Always >= bound_thm23 at the midpoint preset (it relaxes |f'(mid)|^q).
double midpoint_bound_endpoints_only(const Func1D& f, const Interval& iv,
                                     const HolderPair& hp,
                                     bool allow_uncertified = false);

/// Named rule parameters: "simpson" (1/2, 1/3), "midpoint" (1/2, 0),
/// "trapezoid" (1/2, 1).
RuleParams preset(std::string_view name);

/// Classical fourth-derivative Simpson estimate sup|f''''| (b-a)^4 / 2880,
/// for comparison against the derivative-only bounds.
double classical_simpson_bound(double sup_f4, const Interval& iv);

/// Evaluates |I_f| together with both bound families and tightness ratios.
/// bound23/ratio23 are filled only when a Holder pair is supplied.
BoundReport evaluate(const Func1D& f, const Interval& iv, const RuleParams& rp,
                     double q, const std::optional<HolderPair>& hp = std::nullopt,
                     bool allow_uncertified = false);

/// Assertion guard for the dominance inequalities: absolute 1e-9 scaled by
/// max(1, bound), absorbing the oracle's 1e-10 budget with margin.
inline double inequality_tol(double bound) {
    return 1e-9 * (bound > 1.0 ? bound : 1.0);
}

/// True when |I_f| <= bound within the guard, for every bound present.
bool dominance_holds(const BoundReport& report);

const char* case_name(CaseTag tag);

}  // namespace pquad
