#pragma once

#include <cstdint>
#include <optional>

#include "pquad/func1d.hpp"
#include "pquad/interval.hpp"

namespace pquad {

/// Counterexample to the P-property: either g went negative at a sample
/// (lhs = g(x) < 0, rhs = 0, x == y) or a sampled triple broke subadditivity
/// under mixing (lhs = g(tx + (1-t)y) > rhs = g(x) + g(y)).
struct PWitness {
    enum class Kind { Negative, Subadditive };
    Kind kind;
    double x;
    double y;
    double t;  // in [0,1]
    double lhs;
    double rhs;
};

struct PCheckResult {
    bool pass;
    std::optional<PWitness> witness;  // first violation, present iff !pass
};

/// Sampled refutation check of the P-property for g on iv: nonnegativity at
/// every sampled point and g(tx+(1-t)y) <= g(x) + g(y) on every sampled
/// triple, within a pure roundoff guard of 1e-12 scaled by the magnitudes
/// involved. Stratified triples (endpoints, midpoint, coarse t grid) run
/// first, then n_samples seeded uniform triples. Deterministic given the
/// seed. A pass certifies nothing; a failure refutes with a witness.
PCheckResult is_p_function_sampled(const RealFn& g, const Interval& iv,
                                   int n_samples, std::uint64_t seed);

struct HhCheckResult {
    double left;    // g((a+b)/2)
    double middle;  // (2/(b-a)) * integral of g over [a,b]
    double right;   // 2 * (g(a) + g(b))
    bool holds;
};

/// Hadamard-type two-sided check for g = |f'|^q on iv:
///   g((a+b)/2) <= (2/(b-a)) int g <= 2 [g(a) + g(b)],
/// with the integral from the reference oracle. Requires iv inside the
/// function's certified domain.
HhCheckResult hh_p_check(const Func1D& f, const Interval& iv, double q);

}  // namespace pquad
