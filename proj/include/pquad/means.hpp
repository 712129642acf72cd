#pragma once

#include <optional>
#include <string_view>

#include "pquad/errors.hpp"

namespace pquad {

/// Which special-means inequality to evaluate, keyed by rule and bound family:
///   P1  Simpson rule,   power-mean bound
///   P2a midpoint rule,  power-mean bound
///   P2b trapezoid rule, power-mean bound
///   P3  Simpson rule,   Holder bound
///   P4a midpoint rule,  Holder bound
///   P4b trapezoid rule, Holder bound
enum class PropositionKind { P1, P2a, P2b, P3, P4a, P4b };

PropositionKind proposition_kind(std::string_view key);  // "1","2a","2b","3","4a","4b"
const char* proposition_name(PropositionKind k);

struct MeansCase {
    double a;
    double b;
    int n;                    // monomial degree, >= 2
    double q;                 // >= 1
    std::optional<double> p;  // Holder conjugate of q; required for P3/P4a/P4b
};

struct PropResult {
    double lhs;
    double rhs;
    bool holds;  // lhs <= rhs within the roundoff guard
    // P4b only: the trapezoid/Holder inequality as printed carries prefactor
    // (b-a)/4 without the factor n that the generic derivation produces (and
    // that the companion midpoint form shows). rhs above keeps the n so the
    // value matches the generic bound; the n-less literal form is reported
    // here for reference. It is not a valid bound for large n.
    std::optional<double> rhs_verbatim;
};

double arithmetic_mean(double a, double b);

/// n-logarithmic mean ((b^{n+1} - a^{n+1}) / ((n+1)(b-a)))^{1/n}, n >= 1.
/// Odd n with a negative radicand yields the real odd root; a negative
/// radicand with even n (unreachable for a < b) raises DomainError.
double log_mean_n(double a, double b, int n);

/// L_n(a,b)^n evaluated directly as the radicand, i.e. the mean value of x^n
/// over [a,b]. Avoids the root/power round trip.
double log_mean_pow_n(double a, double b, int n);

/// Evaluates the selected inequality for f(x) = x^n: lhs is the rule error in
/// means form, rhs the matching closed-form bound (both computed directly
/// from (a, b, n, q, p), independently of the quadrature and bound modules).
PropResult proposition(PropositionKind k, const MeansCase& mc);

}  // namespace pquad
