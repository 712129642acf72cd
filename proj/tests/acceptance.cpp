// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Expected values are computed from independent closed forms inside each
// criterion, never through the code paths under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pquad/bounds.hpp"
#include "pquad/catalog.hpp"
#include "pquad/means.hpp"
#include "pquad/pcheck.hpp"
#include "pquad/quadrature.hpp"
#include "pquad/report.hpp"
#include "pquad/rng.hpp"
#include "pquad/search.hpp"

using namespace pquad;

namespace {

struct Failure {
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_ms;  // 0 = no limit
    std::function<void(std::vector<std::string>&)> run;
};

Interval random_sub(const Interval& dom, SplitMix64& rng, double min_width) {
    const double floor_w = std::min(min_width, 0.5 * dom.width());
    const double width = floor_w + rng.uniform01() * (dom.width() - floor_w);
    const double start = dom.a() + rng.uniform01() * (dom.width() - width);
    return Interval(start, start + width);
}

void expect(std::vector<std::string>& errs, bool ok, const std::string& what) {
    if (!ok) errs.push_back(what);
}

// --- criterion 1: preset constants of the power-mean bound -----------------

void crit_preset_constants(std::vector<std::string>& errs) {
    SplitMix64 rng(1001);
    const auto& entries = catalog();
    for (int i = 0; i < 100; ++i) {
        const Func1D& f = entries[rng.index(entries.size())];
        const Interval iv = random_sub(f.p_cert_domain, rng, 1e-2);
        const double q = 1.0 + 3.0 * rng.uniform01();
        const double s = std::pow(std::pow(std::abs(f.derivative(iv.b())), q) +
                                      std::pow(std::abs(f.derivative(iv.a())), q),
                                  1.0 / q);
        const double w = iv.width();
        const struct {
            const char* name;
            double factor;
        } presets[] = {
            {"simpson", 5.0 * w / 36.0}, {"midpoint", w / 4.0}, {"trapezoid", w / 4.0}};
        for (const auto& pr : presets) {
            const double bound = bound_thm22(f, iv, preset(pr.name), q);
            const double expect_v = pr.factor * s;
            if (std::abs(bound - expect_v) > 1e-12 * std::max(1.0, std::abs(expect_v)))
                errs.push_back("case " + std::to_string(i) + " " + f.name + " " +
                               pr.name + ": " + format_double(bound) + " vs " +
                               format_double(expect_v));
        }
    }
}

// --- criterion 2: Simpson-preset Holder closed form -------------------------

void crit_holder_closed_form(std::vector<std::string>& errs) {
    SplitMix64 rng(1002);
    const auto& entries = catalog();
    for (int i = 0; i < 100; ++i) {
        const Func1D& f = entries[rng.index(entries.size())];
        const Interval iv = random_sub(f.p_cert_domain, rng, 1e-2);
        for (double p : {1.5, 2.0, 4.0}) {
            const double q = p / (p - 1.0);
            const double bound = bound_thm23(f, iv, preset("simpson"), HolderPair(p, q));
            const double gm = std::pow(std::abs(f.derivative(iv.midpoint())), q);
            const double ga = std::pow(std::abs(f.derivative(iv.a())), q);
            const double gb = std::pow(std::abs(f.derivative(iv.b())), q);
            const double expect_v =
                iv.width() / 12.0 *
                std::pow((1.0 + std::pow(2.0, p + 1.0)) / (3.0 * (p + 1.0)), 1.0 / p) *
                (std::pow(gm + ga, 1.0 / q) + std::pow(gm + gb, 1.0 / q));
            if (std::abs(bound - expect_v) > 1e-12 * std::max(1.0, std::abs(expect_v)))
                errs.push_back("case " + std::to_string(i) + " " + f.name + " p=" +
                               format_double(p) + ": " + format_double(bound) + " vs " +
                               format_double(expect_v));
        }
    }
}

// --- criterion 3: kernel identity ------------------------------------------

void crit_identity(std::vector<std::string>& errs) {
    SplitMix64 pick(1003);
    const auto& entries = catalog();
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        SplitMix64 rng(mix_seed(1003, static_cast<std::uint64_t>(i)));
        const Func1D& f = entries[pick.index(entries.size())];
        const Interval iv = random_sub(f.valid_domain, rng, 1e-3);
        const RuleParams rp(rng.uniform01(), rng.uniform01());
        const double i_f = quad_functional(f, iv, rp).i_f;
        const double rhs = identity_rhs(f, iv, rp);
        const double scaled = std::abs(i_f - rhs) / std::max(1.0, std::abs(i_f));
        worst = std::max(worst, scaled);
        if (scaled > 1e-8)
            errs.push_back("trial " + std::to_string(i) + " " + f.name +
                           " residual " + format_double(scaled));
    }
    std::printf("        max scaled identity residual %s\n", format_double(worst).c_str());
}

// --- criterion 4: dominance fuzz --------------------------------------------

void crit_fuzz(std::vector<std::string>& errs) {
    const std::vector<TrialRecord> failures = fuzz(catalog(), 10000, 42);
    for (const TrialRecord& rec : failures)
        errs.push_back(rec.function + " a=" + format_double(rec.a) + " b=" +
                       format_double(rec.b) + " alpha=" + format_double(rec.alpha) +
                       " lambda=" + format_double(rec.lambda) +
                       (rec.error.empty() ? "" : " error=" + rec.error));
}

// --- criterion 5: case continuity -------------------------------------------

void crit_continuity(std::vector<std::string>& errs) {
    SplitMix64 rng(1005);
    const Func1D& f = find_function("pow3");
    const Interval iv(0.5, 2.0);
    for (int rep = 0; rep < 50; ++rep) {
        const double lambda = 0.05 + 0.95 * rng.uniform01();
        const double junction = 1.0 / (1.0 + lambda);

        const GammaPair g = gamma_pair(junction, lambda);
        expect(errs, std::abs(g.gamma1 - g.gamma2) <= 1e-12,
               "gamma junction mismatch at lambda=" + format_double(lambda));
        for (double p : {1.5, 2.0, 4.0}) {
            const EpsilonPair e = epsilon_pair(junction, lambda, p);
            expect(errs, std::abs(e.eps1 - e.eps2) <= 1e-12,
                   "epsilon junction mismatch at lambda=" + format_double(lambda) +
                       " p=" + format_double(p));
        }

        const double h = 1e-4;
        std::vector<double> values;
        for (int i = -10; i <= 10; ++i)
            values.push_back(
                bound_thm22(f, iv, RuleParams(junction + i * h, lambda), 2.0));
        std::vector<double> diffs;
        for (std::size_t i = 1; i < values.size(); ++i)
            diffs.push_back(std::abs(values[i] - values[i - 1]));
        for (std::size_t i = 1; i + 1 < diffs.size(); ++i) {
            const double lipschitz_step = 3.0 * std::max(diffs[i - 1], diffs[i + 1]);
            expect(errs, diffs[i] <= 1e-9 + lipschitz_step,
                   "bound22 jump at lambda=" + format_double(lambda));
        }
    }
}

// --- criterion 6: special-means propositions --------------------------------

void crit_means(std::vector<std::string>& errs) {
    constexpr PropositionKind kinds[] = {PropositionKind::P1, PropositionKind::P2a,
                                         PropositionKind::P2b, PropositionKind::P3,
                                         PropositionKind::P4a, PropositionKind::P4b};
    const auto rule_of = [](PropositionKind k) {
        switch (k) {
            case PropositionKind::P1:
            case PropositionKind::P3: return preset("simpson");
            case PropositionKind::P2a:
            case PropositionKind::P4a: return preset("midpoint");
            default: return preset("trapezoid");
        }
    };
    const auto holder_based = [](PropositionKind k) {
        return k == PropositionKind::P3 || k == PropositionKind::P4a ||
               k == PropositionKind::P4b;
    };

    const double pairs[][2] = {{1.0, 2.0}, {0.5, 3.0}, {2.0, 5.0}};
    for (const auto& ab : pairs) {
        const Interval iv(ab[0], ab[1]);
        for (int n = 2; n <= 6; ++n) {
            const Func1D f = power_function(n);
            for (double q : {1.0, 2.0, 3.0}) {
                for (PropositionKind k : kinds) {
                    const bool needs_p = holder_based(k);
                    if (needs_p && q == 1.0) continue;
                    MeansCase mc{ab[0], ab[1], n, q, {}};
                    if (needs_p) mc.p = q / (q - 1.0);
                    const PropResult res = proposition(k, mc);
                    const RuleParams rp = rule_of(k);
                    const double lhs_gen = std::abs(quad_functional(f, iv, rp).i_f);
                    const double rhs_gen =
                        needs_p ? bound_thm23(f, iv, rp, HolderPair(*mc.p, q))
                                : bound_thm22(f, iv, rp, q);
                    const std::string tag = std::string("P") + proposition_name(k) +
                                            " (a,b)=(" + format_double(ab[0]) + "," +
                                            format_double(ab[1]) + ") n=" +
                                            std::to_string(n) + " q=" + format_double(q);
                    expect(errs, res.holds, tag + ": lhs > rhs");
                    expect(errs,
                           std::abs(res.lhs - lhs_gen) <= 1e-9 * std::max(1.0, lhs_gen),
                           tag + ": lhs disagrees with generic path");
                    expect(errs,
                           std::abs(res.rhs - rhs_gen) <= 1e-9 * std::max(1.0, rhs_gen),
                           tag + ": rhs disagrees with generic path");
                }
            }
        }
    }

    // Pinned exact case: Simpson is exact on quadratics.
    const PropResult exact = proposition(PropositionKind::P1, {1.0, 2.0, 2, 1.0, {}});
    expect(errs, exact.lhs <= 1e-12, "P1(1,2,2,1) lhs not ~0");
    expect(errs, std::abs(exact.rhs - 5.0 / 6.0) <= 1e-12, "P1(1,2,2,1) rhs != 5/6");
}

// --- criterion 7: oracle accuracy -------------------------------------------

void crit_oracle(std::vector<std::string>& errs) {
    SplitMix64 rng(1007);
    const auto& entries = catalog();
    for (int c = 0; c < 100; ++c) {
        const Func1D& f = entries[c % entries.size()];
        const Interval iv = random_sub(f.p_cert_domain, rng, 1e-2);
        // Route through the plain callable so the closed form cannot be used.
        const IntegralResult numeric = reference_integral(f.value, iv);
        const double closed = f.antiderivative(iv.b()) - f.antiderivative(iv.a());
        if (std::abs(numeric.value - closed) > 1e-10)
            errs.push_back(f.name + " [" + format_double(iv.a()) + "," +
                           format_double(iv.b()) + "]: |" + format_double(numeric.value) +
                           " - " + format_double(closed) + "| > 1e-10");
    }
}

// --- criterion 8: q-monotonicity --------------------------------------------

void crit_q_monotone(std::vector<std::string>& errs) {
    SplitMix64 rng(1008);
    const auto& entries = catalog();
    const std::vector<double> qs{1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0};
    for (int i = 0; i < 100; ++i) {
        const Func1D& f = entries[rng.index(entries.size())];
        const Interval iv = random_sub(f.p_cert_domain, rng, 1e-2);
        const RuleParams rp(rng.uniform01(), rng.uniform01());
        const auto prof = q_profile(f, iv, rp, qs);
        for (std::size_t j = 1; j < prof.size(); ++j)
            if (prof[j].second > prof[j - 1].second +
                                     1e-12 * std::max(1.0, prof[j - 1].second))
                errs.push_back("case " + std::to_string(i) + " " + f.name +
                               ": bound rose from q=" + format_double(prof[j - 1].first) +
                               " to q=" + format_double(prof[j].first));
    }
}

// --- criterion 9: determinism ------------------------------------------------

void crit_determinism(std::vector<std::string>& errs) {
    const std::string fuzz_a = to_csv(fuzz_records(catalog(), 10000, 99));
    const std::string fuzz_b = to_csv(fuzz_records(catalog(), 10000, 99));
    expect(errs, fuzz_a == fuzz_b, "fuzz rerun produced different CSV bytes");

    const Func1D& f = find_function("pow2");
    const Interval iv(0.0, 1.0);
    const SweepGrid grid{6, 6, {1.0, 2.0}, {2.0, 4.0}};
    const std::string sweep_a = to_csv(sweep(f, iv, grid));
    const std::string sweep_b = to_csv(sweep(f, iv, grid));
    expect(errs, sweep_a == sweep_b, "sweep rerun produced different CSV bytes");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "preset constants of the power-mean bound (rel 1e-12, 100 cases)", 1000.0,
         crit_preset_constants},
        {2, "Simpson-preset Holder closed form (rel 1e-12, p in {1.5,2,4})", 1000.0,
         crit_holder_closed_form},
        {3, "kernel identity residual <= 1e-8 scaled (1000 trials)", 30000.0,
         crit_identity},
        {4, "dominance fuzz, 10000 trials, zero violations", 300000.0, crit_fuzz},
        {5, "case continuity across the alpha*lambda = 1-alpha junction", 0.0,
         crit_continuity},
        {6, "special-means propositions vs the generic path (1e-9)", 0.0, crit_means},
        {7, "oracle reproduces closed forms to 1e-10 (100 intervals)", 0.0, crit_oracle},
        {8, "q-profile nonincreasing in q (100 cases)", 0.0, crit_q_monotone},
        {9, "byte-identical fuzz and sweep CSV reruns", 0.0, crit_determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::vector<std::string> errs;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(errs);
        } catch (const std::exception& e) {
            errs.push_back(std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (c.time_limit_ms > 0.0 && ms > c.time_limit_ms)
            errs.push_back("runtime " + std::to_string(ms) + " ms exceeds limit");
        const bool ok = errs.empty();
        failed += ok ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), ms);
        for (std::size_t i = 0; i < errs.size() && i < 5; ++i)
            std::printf("        %s\n", errs[i].c_str());
        if (errs.size() > 5)
            std::printf("        ... %zu further failures\n", errs.size() - 5);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
