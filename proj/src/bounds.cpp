#include "pquad/bounds.hpp"

#include <cmath>
#include <string>

namespace pquad {

namespace {

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ParameterError(std::string(what) + " must lie in [0,1]");
}

void check_certified(const Func1D& f, const Interval& iv, bool allow) {
    if (allow) return;
    if (!f.certified_on(iv))
        throw CertificationError("interval not P-certified for " + f.name +
                                 " (pass allow_uncertified to explore anyway)");
}

// (A^q + B^q)^{1/q} for A, B >= 0, factored to avoid overflow and keep the
// symmetric case exact.
double power_sum_root(double a, double b, double q) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (hi == 0.0) return 0.0;
    const double r = lo / hi;
    return hi * std::pow(1.0 + std::pow(r, q), 1.0 / q);
}

// base^e with tiny negative round-off bases (1-alpha-alpha*lambda near the
// case junction) clamped to 0 rather than producing NaN.
double pow_clamped(double base, double e) {
    if (base < 0.0 && base > -1e-15) base = 0.0;
    return std::pow(base, e);
}

bool first_kernel_gamma2(const RuleParams& rp) {
    return rp.alpha() * rp.lambda() <= 1.0 - rp.alpha();
}

bool second_kernel_gamma2(const RuleParams& rp) {
    return rp.lambda() * (1.0 - rp.alpha()) <= rp.alpha();
}

}  // namespace

GammaPair gamma_pair(double alpha, double lambda) {
    check_unit(alpha, "alpha");
    check_unit(lambda, "lambda");
    const double al = alpha * lambda;
    const double g1 = (1.0 - alpha) * (al - 0.5 * (1.0 - alpha));
    return {g1, al * al - g1};
}

CaseTag classify_case(const RuleParams& rp) {
    if (!first_kernel_gamma2(rp)) return CaseTag::C3;
    return second_kernel_gamma2(rp) ? CaseTag::C1 : CaseTag::C2;
}

HolderPair::HolderPair(double p, double q) : p_(p), q_(q) {
    if (!(p > 1.0) || !(q > 1.0))
        throw ParameterError("Holder exponents must both exceed 1");
    if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
        throw ParameterError("Holder exponents must satisfy 1/p + 1/q = 1");
}

HolderPair HolderPair::conjugate(double p) {
    if (!(p > 1.0)) throw ParameterError("Holder exponent p must exceed 1");
    return HolderPair(p, p / (p - 1.0));
}

double bound_thm22(const Func1D& f, const Interval& iv, const RuleParams& rp,
                   double q, bool allow_uncertified) {
    if (!(q >= 1.0)) throw ParameterError("bound_thm22 requires q >= 1");
    check_certified(f, iv, allow_uncertified);

    const GammaPair ga = gamma_pair(rp.alpha(), rp.lambda());
    const GammaPair gb = gamma_pair(1.0 - rp.alpha(), rp.lambda());
    double weight = 0.0;
    switch (classify_case(rp)) {
        case CaseTag::C1: weight = ga.gamma2 + gb.gamma2; break;
        case CaseTag::C2: weight = ga.gamma2 + gb.gamma1; break;
        case CaseTag::C3: weight = ga.gamma1 + gb.gamma2; break;
    }
    const double s = power_sum_root(std::abs(f.derivative(iv.b())),
                                    std::abs(f.derivative(iv.a())), q);
    return iv.width() * s * weight;
}

EpsilonPair epsilon_pair(double alpha, double lambda, double p) {
    check_unit(alpha, "alpha");
    check_unit(lambda, "lambda");
    if (!(p > 1.0)) throw ParameterError("epsilon_pair requires p > 1");
    const double al = alpha * lambda;
    const double e = p + 1.0;
    return {std::pow(al, e) + pow_clamped(1.0 - alpha - al, e),
            std::pow(al, e) - pow_clamped(al - 1.0 + alpha, e)};
}

CKPair ck_pair(const Func1D& f, const Interval& iv, double alpha, double q) {
    check_unit(alpha, "alpha");
    const double node = (1.0 - alpha) * iv.b() + alpha * iv.a();
    const double dn = std::pow(std::abs(f.derivative(node)), q);
    const double da = std::pow(std::abs(f.derivative(iv.a())), q);
    const double db = std::pow(std::abs(f.derivative(iv.b())), q);
    return {(1.0 - alpha) * (dn + da), alpha * (dn + db)};
}

double bound_thm23(const Func1D& f, const Interval& iv, const RuleParams& rp,
                   const HolderPair& hp, bool allow_uncertified) {
    check_certified(f, iv, allow_uncertified);

    const double p = hp.p();
    const double q = hp.q();
    const EpsilonPair ea = epsilon_pair(rp.alpha(), rp.lambda(), p);
    const EpsilonPair eb = epsilon_pair(1.0 - rp.alpha(), rp.lambda(), p);
    const CKPair ck = ck_pair(f, iv, rp.alpha(), q);

    double eps_first = 0.0;
    double eps_second = 0.0;
    switch (classify_case(rp)) {
        case CaseTag::C1: eps_first = ea.eps1; eps_second = eb.eps1; break;
        case CaseTag::C2: eps_first = ea.eps1; eps_second = eb.eps2; break;
        case CaseTag::C3: eps_first = ea.eps2; eps_second = eb.eps1; break;
    }
    const double combo = std::pow(eps_first, 1.0 / p) * std::pow(ck.c_f, 1.0 / q) +
                         std::pow(eps_second, 1.0 / p) * std::pow(ck.k_f, 1.0 / q);
    return iv.width() * std::pow(1.0 / (p + 1.0), 1.0 / p) * combo;
}

double midpoint_bound_endpoints_only(const Func1D& f, const Interval& iv,
                                     const HolderPair& hp, bool allow_uncertified) {
    check_certified(f, iv, allow_uncertified);
    const double q = hp.q();
    const double da = std::pow(std::abs(f.derivative(iv.a())), q);
    const double db = std::pow(std::abs(f.derivative(iv.b())), q);
    return 0.25 * iv.width() * std::pow(1.0 / (hp.p() + 1.0), 1.0 / hp.p()) *
           (std::pow(db + 2.0 * da, 1.0 / q) + std::pow(da + 2.0 * db, 1.0 / q));
}

RuleParams preset(std::string_view name) {
    if (name == "simpson") return RuleParams(0.5, 1.0 / 3.0);
    if (name == "midpoint") return RuleParams(0.5, 0.0);
    if (name == "trapezoid") return RuleParams(0.5, 1.0);
    throw ParameterError("unknown preset: " + std::string(name));
}

double classical_simpson_bound(double sup_f4, const Interval& iv) {
    if (!(sup_f4 >= 0.0)) throw ParameterError("sup|f''''| must be >= 0");
    const double w = iv.width();
    return sup_f4 * w * w * w * w / 2880.0;
}

BoundReport evaluate(const Func1D& f, const Interval& iv, const RuleParams& rp,
                     double q, const std::optional<HolderPair>& hp,
                     bool allow_uncertified) {
    const QuadResult qr = quad_functional(f, iv, rp);
    BoundReport rep;
    rep.i_f_abs = std::abs(qr.i_f);
    rep.bound22 = bound_thm22(f, iv, rp, q, allow_uncertified);
    rep.q = q;
    rep.case_tag = classify_case(rp);
    rep.ratio22 = rep.bound22 > 0.0 ? rep.i_f_abs / rep.bound22 : 0.0;
    if (hp) {
        rep.holder = *hp;
        rep.bound23 = bound_thm23(f, iv, rp, *hp, allow_uncertified);
        rep.ratio23 = *rep.bound23 > 0.0 ? rep.i_f_abs / *rep.bound23 : 0.0;
    }
    return rep;
}

bool dominance_holds(const BoundReport& report) {
    if (report.i_f_abs > report.bound22 + inequality_tol(report.bound22)) return false;
    if (report.bound23 &&
        report.i_f_abs > *report.bound23 + inequality_tol(*report.bound23))
        return false;
    return true;
}

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::C1: return "C1";
        case CaseTag::C2: return "C2";
        case CaseTag::C3: return "C3";
    }
    return "?";
}

}  // namespace pquad
