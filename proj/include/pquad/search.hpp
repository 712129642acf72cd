#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pquad/bounds.hpp"
#include "pquad/func1d.hpp"

namespace pquad {

/// Evaluation grid over the (alpha, lambda) square, endpoints included.
struct SweepGrid {
    int alpha_steps;               // >= 2
    int lambda_steps;              // >= 2
    std::vector<double> q_values;  // each >= 1
    std::vector<double> p_values;  // each > 1; may be empty (no Holder bound)
};

/// One sweep/fuzz evaluation row. `pass` means both dominance inequalities
/// held; evaluation failures are recorded in `error` (fields NaN) rather
/// than thrown.
struct TrialRecord {
    std::string function;
    double a;
    double b;
    double alpha;
    double lambda;
    double q;
    std::optional<double> p;
    double i_f_abs;
    double bound22;
    std::optional<double> bound23;
    CaseTag case_tag;
    double ratio22;
    std::optional<double> ratio23;
    bool pass;
    std::string error;  // empty on success
};

/// Builds one record, never throws: errors land in TrialRecord::error.
TrialRecord run_trial(const Func1D& f, const Interval& iv, const RuleParams& rp,
                      double q, std::optional<double> p);

/// One record per grid point and exponent combination, ordered row-major:
/// alpha, then lambda, then q, then p.
std::vector<TrialRecord> sweep(const Func1D& f, const Interval& iv,
                               const SweepGrid& grid);

struct OptResult {
    double best_exponent;
    double best_bound;
    int evaluations;
    std::vector<std::pair<double, double>> trace;  // (p, bound) in eval order
};

/// Minimizes the Holder bound over the exponent p in [p_lo, p_hi], with
/// q = p/(p-1). A 32-point log-spaced probe brackets the minimum (the bound
/// varies over decades as p -> 1+ and unimodality is not guaranteed), then
/// golden-section search on log p refines to relative tolerance 1e-6 in the
/// exponent. best_bound is the minimum over every point evaluated; a
/// uniformly zero bound returns p_lo by convention.
OptResult optimize_p(const Func1D& f, const Interval& iv, const RuleParams& rp,
                     double p_lo, double p_hi);

/// Power-mean bound as a function of q over an ascending q list; the values
/// are nonincreasing, approaching (b-a) max(|f'(a)|,|f'(b)|) times the gamma
/// sum as q grows.
std::vector<std::pair<double, double>> q_profile(const Func1D& f, const Interval& iv,
                                                 const RuleParams& rp,
                                                 const std::vector<double>& q_values);

/// All records of a fuzzing run: per trial, a seeded draw of function,
/// certified subinterval (width >= 1e-3), rule parameters uniform on [0,1]^2,
/// q uniform on [1,4] and p uniform on (1.1, 8], then both dominance checks.
/// Trial i derives its substream from (seed, i), so records are independent
/// of evaluation order and reruns are bit-identical.
std::vector<TrialRecord> fuzz_records(const std::vector<Func1D>& catalog_subset,
                                      int trials, std::uint64_t seed);

/// Failing records only (expected empty).
std::vector<TrialRecord> fuzz(const std::vector<Func1D>& catalog_subset, int trials,
                              std::uint64_t seed);

}  // namespace pquad
