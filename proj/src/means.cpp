#include "pquad/means.hpp"

#include <cmath>
#include <string>

namespace pquad {

namespace {

void check_means_case(const MeansCase& mc, bool needs_p) {
    if (!std::isfinite(mc.a) || !std::isfinite(mc.b) || !(mc.a < mc.b))
        throw ParameterError("means case requires finite a < b");
    if (mc.n < 2) throw ParameterError("means case requires n >= 2");
    if (!(mc.q >= 1.0)) throw ParameterError("means case requires q >= 1");
    if (needs_p && !mc.p)
        throw ParameterError("Holder-based propositions require the exponent p");
    if (mc.p) {
        if (!(*mc.p > 1.0) || !(mc.q > 1.0) ||
            std::abs(1.0 / *mc.p + 1.0 / mc.q - 1.0) > 1e-12)
            throw ParameterError("means case requires 1/p + 1/q = 1 with p, q > 1");
    }
}

}  // namespace

PropositionKind proposition_kind(std::string_view key) {
    if (key == "1") return PropositionKind::P1;
    if (key == "2a") return PropositionKind::P2a;
    if (key == "2b") return PropositionKind::P2b;
    if (key == "3") return PropositionKind::P3;
    if (key == "4a") return PropositionKind::P4a;
    if (key == "4b") return PropositionKind::P4b;
    throw ParameterError("unknown proposition: " + std::string(key));
}

const char* proposition_name(PropositionKind k) {
    switch (k) {
        case PropositionKind::P1: return "1";
        case PropositionKind::P2a: return "2a";
        case PropositionKind::P2b: return "2b";
        case PropositionKind::P3: return "3";
        case PropositionKind::P4a: return "4a";
        case PropositionKind::P4b: return "4b";
    }
    return "?";
}

double arithmetic_mean(double a, double b) { return 0.5 * (a + b); }

double log_mean_pow_n(double a, double b, int n) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw ParameterError("log mean requires finite a < b");
    if (n < 1) throw ParameterError("log mean requires n >= 1");
    return (std::pow(b, n + 1) - std::pow(a, n + 1)) / ((n + 1) * (b - a));
}

double log_mean_n(double a, double b, int n) {
    const double radicand = log_mean_pow_n(a, b, n);
    if (radicand < 0.0) {
        if (n % 2 == 0)
            throw DomainError("negative radicand has no real even root");
        return -std::pow(-radicand, 1.0 / n);
    }
    return std::pow(radicand, 1.0 / n);
}

PropResult proposition(PropositionKind k, const MeansCase& mc) {
    const bool holder_based = k == PropositionKind::P3 || k == PropositionKind::P4a ||
                              k == PropositionKind::P4b;
    check_means_case(mc, holder_based);

    const double a = mc.a;
    const double b = mc.b;
    const double n = mc.n;
    const double q = mc.q;
    const double w = b - a;
    const double mean_pow = arithmetic_mean(std::pow(a, mc.n), std::pow(b, mc.n));
    const double pow_mean = std::pow(arithmetic_mean(a, b), mc.n);
    const double lnn = log_mean_pow_n(a, b, mc.n);

    // Derivative-power sums with the degree factor n pulled out front:
    // endpoint form for the power-mean bounds, node forms for the Holder
    // bounds.
    const double s = (n - 1.0) * q;
    const double endpoint_sum =
        std::pow(std::pow(std::abs(b), s) + std::pow(std::abs(a), s), 1.0 / q);
    const double mid = std::abs(arithmetic_mean(a, b));
    const double node_sum_a =
        std::pow(std::pow(mid, s) + std::pow(std::abs(a), s), 1.0 / q);
    const double node_sum_b =
        std::pow(std::pow(mid, s) + std::pow(std::abs(b), s), 1.0 / q);

    PropResult res;
    switch (k) {
        case PropositionKind::P1:
            res.lhs = std::abs(mean_pow / 3.0 + 2.0 * pow_mean / 3.0 - lnn);
            res.rhs = 5.0 * n * w / 36.0 * endpoint_sum;
            break;
        case PropositionKind::P2a:
            res.lhs = std::abs(pow_mean - lnn);
            res.rhs = n * w / 4.0 * endpoint_sum;
            break;
        case PropositionKind::P2b:
            res.lhs = std::abs(mean_pow - lnn);
            res.rhs = n * w / 4.0 * endpoint_sum;
            break;
        case PropositionKind::P3: {
            const double p = *mc.p;
            res.lhs = std::abs(mean_pow / 3.0 + 2.0 * pow_mean / 3.0 - lnn);
            res.rhs = n * w / 12.0 *
                      std::pow((1.0 + std::pow(2.0, p + 1.0)) / (3.0 * (p + 1.0)), 1.0 / p) *
                      (node_sum_a + node_sum_b);
            break;
        }
        case PropositionKind::P4a: {
            const double p = *mc.p;
            res.lhs = std::abs(pow_mean - lnn);
            res.rhs = n * w / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) *
                      (node_sum_a + node_sum_b);
            break;
        }
        case PropositionKind::P4b: {
            const double p = *mc.p;
            const double factor =
                w / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) * (node_sum_a + node_sum_b);
            res.lhs = std::abs(mean_pow - lnn);
            res.rhs = n * factor;
            res.rhs_verbatim = factor;
            break;
        }
    }
    res.holds = res.lhs <= res.rhs + 1e-9 * std::max(1.0, res.rhs);
    return res;
}

}  // namespace pquad
