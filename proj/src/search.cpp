#include "pquad/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pquad/rng.hpp"

namespace pquad {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

TrialRecord run_trial(const Func1D& f, const Interval& iv, const RuleParams& rp,
                      double q, std::optional<double> p) {
    TrialRecord rec;
    rec.function = f.name;
    rec.a = iv.a();
    rec.b = iv.b();
    rec.alpha = rp.alpha();
    rec.lambda = rp.lambda();
    rec.q = q;
    rec.p = p;
    rec.case_tag = classify_case(rp);
    try {
        std::optional<HolderPair> hp;
        if (p) hp = HolderPair::conjugate(*p);
        const BoundReport rep = evaluate(f, iv, rp, q, hp);
        rec.i_f_abs = rep.i_f_abs;
        rec.bound22 = rep.bound22;
        rec.bound23 = rep.bound23;
        rec.ratio22 = rep.ratio22;
        rec.ratio23 = rep.ratio23;
        rec.pass = dominance_holds(rep);
    } catch (const std::exception& e) {
        rec.i_f_abs = kNaN;
        rec.bound22 = kNaN;
        rec.ratio22 = kNaN;
        rec.pass = false;
        rec.error = e.what();
    }
    return rec;
}

std::vector<TrialRecord> sweep(const Func1D& f, const Interval& iv,
                               const SweepGrid& grid) {
    if (grid.alpha_steps < 2 || grid.lambda_steps < 2)
        throw ParameterError("sweep grid needs at least 2 steps per axis");
    for (double q : grid.q_values)
        if (!(q >= 1.0)) throw ParameterError("sweep q values must be >= 1");
    for (double p : grid.p_values)
        if (!(p > 1.0)) throw ParameterError("sweep p values must be > 1");
    if (grid.q_values.empty()) throw ParameterError("sweep needs at least one q");
    if (!f.certified_on(iv))
        throw CertificationError("interval not P-certified for " + f.name);

    std::vector<TrialRecord> records;
    const std::size_t per_q = grid.p_values.empty() ? 1 : grid.p_values.size();
    records.reserve(static_cast<std::size_t>(grid.alpha_steps) * grid.lambda_steps *
                    grid.q_values.size() * per_q);
    for (int i = 0; i < grid.alpha_steps; ++i) {
        const double alpha = static_cast<double>(i) / (grid.alpha_steps - 1);
        for (int j = 0; j < grid.lambda_steps; ++j) {
            const double lambda = static_cast<double>(j) / (grid.lambda_steps - 1);
            const RuleParams rp(alpha, lambda);
            for (double q : grid.q_values) {
                if (grid.p_values.empty()) {
                    records.push_back(run_trial(f, iv, rp, q, std::nullopt));
                } else {
                    for (double p : grid.p_values)
                        records.push_back(run_trial(f, iv, rp, q, p));
                }
            }
        }
    }
    return records;
}

OptResult optimize_p(const Func1D& f, const Interval& iv, const RuleParams& rp,
                     double p_lo, double p_hi) {
    if (!(p_lo > 1.0) || !(p_hi > p_lo))
        throw ParameterError("optimize_p requires 1 < p_lo < p_hi");
    if (!f.certified_on(iv))
        throw CertificationError("interval not P-certified for " + f.name);

    OptResult res;
    res.evaluations = 0;
    const auto bound_at = [&](double p) {
        const double v = bound_thm23(f, iv, rp, HolderPair::conjugate(p));
        res.trace.emplace_back(p, v);
        ++res.evaluations;
        return v;
    };

    // Coarse log-spaced probe; golden section then refines inside the best
    // bracket, guarding against non-unimodal profiles.
    constexpr int kProbePoints = 32;
    const double llo = std::log(p_lo);
    const double lhi = std::log(p_hi);
    int best_idx = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int k = 0; k < kProbePoints; ++k) {
        const double lp = llo + (lhi - llo) * k / (kProbePoints - 1);
        const double v = bound_at(std::exp(lp));
        if (v < best_val) {
            best_val = v;
            best_idx = k;
        }
    }
    double lo = llo + (lhi - llo) * std::max(best_idx - 1, 0) / (kProbePoints - 1);
    double hi = llo + (lhi - llo) * std::min(best_idx + 1, kProbePoints - 1) /
                          (kProbePoints - 1);

    constexpr double kInvPhi = 0.6180339887498949;
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    double fc = bound_at(std::exp(c));
    double fd = bound_at(std::exp(d));
    while (hi - lo > 1e-6 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kInvPhi * (hi - lo);
            fc = bound_at(std::exp(c));
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kInvPhi * (hi - lo);
            fd = bound_at(std::exp(d));
        }
    }

    res.best_bound = std::numeric_limits<double>::infinity();
    res.best_exponent = p_lo;
    for (const auto& [p, v] : res.trace) {
        if (v < res.best_bound) {
            res.best_bound = v;
            res.best_exponent = p;
        }
    }
    if (res.best_bound == 0.0) res.best_exponent = p_lo;
    return res;
}

std::vector<std::pair<double, double>> q_profile(const Func1D& f, const Interval& iv,
                                                 const RuleParams& rp,
                                                 const std::vector<double>& q_values) {
    if (!std::is_sorted(q_values.begin(), q_values.end()))
        throw ParameterError("q_profile expects ascending q values");
    for (double q : q_values)
        if (!(q >= 1.0)) throw ParameterError("q_profile requires q >= 1");
    std::vector<std::pair<double, double>> out;
    out.reserve(q_values.size());
    for (double q : q_values) out.emplace_back(q, bound_thm22(f, iv, rp, q));
    return out;
}

std::vector<TrialRecord> fuzz_records(const std::vector<Func1D>& catalog_subset,
                                      int trials, std::uint64_t seed) {
    if (trials < 1) throw ParameterError("fuzz requires trials >= 1");
    if (catalog_subset.empty()) throw ParameterError("fuzz requires a nonempty catalog");

    std::vector<TrialRecord> records;
    records.reserve(static_cast<std::size_t>(trials));
    for (int i = 0; i < trials; ++i) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        const Func1D& f = catalog_subset[rng.index(catalog_subset.size())];
        const Interval& dom = f.p_cert_domain;
        // Width floor keeps both |I_f| and the bounds away from pure-noise
        // territory where the trial would test nothing.
        const double min_width = std::min(1e-3, 0.5 * dom.width());
        const double width = min_width + rng.uniform01() * (dom.width() - min_width);
        const double start = dom.a() + rng.uniform01() * (dom.width() - width);
        const Interval iv(start, start + width);
        const RuleParams rp(rng.uniform01(), rng.uniform01());
        const double q = rng.uniform(1.0, 4.0);
        const double p = rng.uniform(1.1, 8.0);
        records.push_back(run_trial(f, iv, rp, q, p));
    }
    return records;
}

std::vector<TrialRecord> fuzz(const std::vector<Func1D>& catalog_subset, int trials,
                              std::uint64_t seed) {
    std::vector<TrialRecord> failures;
    for (TrialRecord& rec : fuzz_records(catalog_subset, trials, seed))
        if (!rec.pass) failures.push_back(std::move(rec));
    return failures;
}

}  // namespace pquad
