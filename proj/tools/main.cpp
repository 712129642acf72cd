#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pquad/bounds.hpp"
#include "pquad/catalog.hpp"
#include "pquad/means.hpp"
#include "pquad/quadrature.hpp"
#include "pquad/report.hpp"
#include "pquad/rng.hpp"
#include "pquad/search.hpp"

namespace {

using namespace pquad;

// Exit codes: 0 = every asserted inequality held, 1 = at least one violation,
// 2 = configuration rejected or the computation itself failed.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OutputOpts {
    std::string format = "csv";
    std::string path;  // empty = stdout
};

void write_text(const OutputOpts& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path);
    if (!f) throw ParameterError("cannot open output file: " + out.path);
    f << text;
}

void write_records(const OutputOpts& out, const std::vector<TrialRecord>& recs) {
    write_text(out, out.format == "json" ? to_json(recs) : to_csv(recs));
}

// Small cell/table helper for the non-TrialRecord tables (identity, means,
// optp), so CSV and JSON carry identical values.
struct Cell {
    enum class Kind { Num, Str, Bool, Null } kind;
    double num = 0.0;
    std::string str;
    bool flag = false;

    static Cell number(double v) { return {Kind::Num, v, {}, false}; }
    static Cell text(std::string s) { return {Kind::Str, 0.0, std::move(s), false}; }
    static Cell boolean(bool b) { return {Kind::Bool, 0.0, {}, b}; }
    static Cell null() { return {Kind::Null, 0.0, {}, false}; }
};

using Row = std::vector<Cell>;

std::string table_csv(const std::vector<std::string>& cols, const std::vector<Row>& rows) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    out += '\n';
    for (const Row& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            switch (row[i].kind) {
                case Cell::Kind::Num: out += format_double(row[i].num); break;
                case Cell::Kind::Str: out += row[i].str; break;
                case Cell::Kind::Bool: out += row[i].flag ? "true" : "false"; break;
                case Cell::Kind::Null: break;
            }
        }
        out += '\n';
    }
    return out;
}

std::string table_json(const std::vector<std::string>& cols, const std::vector<Row>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < cols.size(); ++i) {
            switch (row[i].kind) {
                case Cell::Kind::Num: obj[cols[i]] = row[i].num; break;
                case Cell::Kind::Str: obj[cols[i]] = row[i].str; break;
                case Cell::Kind::Bool: obj[cols[i]] = row[i].flag; break;
                case Cell::Kind::Null: obj[cols[i]] = nullptr; break;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

void write_table(const OutputOpts& out, const std::vector<std::string>& cols,
                 const std::vector<Row>& rows) {
    write_text(out, out.format == "json" ? table_json(cols, rows) : table_csv(cols, rows));
}

RuleParams resolve_rule(const std::optional<std::string>& preset_name,
                        const std::optional<double>& alpha,
                        const std::optional<double>& lambda) {
    if (preset_name && (alpha || lambda))
        throw ParameterError("give either --preset or --alpha/--lambda, not both");
    if (preset_name) return preset(*preset_name);
    if (!alpha || !lambda)
        throw ParameterError("rule parameters required: --preset or both --alpha and --lambda");
    return RuleParams(*alpha, *lambda);
}

struct VerifyOpts {
    std::string function;
    double a = 0.0, b = 1.0;
    std::optional<std::string> preset_name;
    std::optional<double> alpha, lambda;
    double q = 1.0;
    std::optional<double> p;
    bool allow_uncertified = false;
    OutputOpts out;
};

int run_verify(const VerifyOpts& o) {
    const Func1D& f = find_function(o.function);
    const Interval iv(o.a, o.b);
    const RuleParams rp = resolve_rule(o.preset_name, o.alpha, o.lambda);
    std::optional<HolderPair> hp;
    if (o.p) hp = HolderPair::conjugate(*o.p);
    const BoundReport rep = evaluate(f, iv, rp, o.q, hp, o.allow_uncertified);

    TrialRecord rec;
    rec.function = f.name;
    rec.a = iv.a();
    rec.b = iv.b();
    rec.alpha = rp.alpha();
    rec.lambda = rp.lambda();
    rec.q = o.q;
    rec.p = o.p;
    rec.i_f_abs = rep.i_f_abs;
    rec.bound22 = rep.bound22;
    rec.bound23 = rep.bound23;
    rec.case_tag = rep.case_tag;
    rec.ratio22 = rep.ratio22;
    rec.ratio23 = rep.ratio23;
    rec.pass = dominance_holds(rep);
    write_records(o.out, {rec});
    return rec.pass ? kExitOk : kExitViolation;
}

struct IdentityOpts {
    std::string function;
    double a = 0.0, b = 1.0;
    int trials = 100;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    OutputOpts out;
};

int run_identity(const IdentityOpts& o) {
    const Func1D& f = find_function(o.function);
    const Interval iv(o.a, o.b);
    const std::vector<std::string> cols{"function", "a",   "b",            "trial",
                                        "alpha",    "lambda", "i_f",       "identity_rhs",
                                        "residual", "scaled_residual"};
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(o.trials));
    double worst = 0.0;
    for (int i = 0; i < o.trials; ++i) {
        SplitMix64 rng(mix_seed(o.seed, static_cast<std::uint64_t>(i)));
        const RuleParams rp(rng.uniform01(), rng.uniform01());
        const double i_f = quad_functional(f, iv, rp).i_f;
        const double rhs = identity_rhs(f, iv, rp);
        const double residual = std::abs(i_f - rhs);
        const double scaled = residual / std::max(1.0, std::abs(i_f));
        worst = std::max(worst, scaled);
        rows.push_back({Cell::text(f.name), Cell::number(iv.a()), Cell::number(iv.b()),
                        Cell::number(i), Cell::number(rp.alpha()), Cell::number(rp.lambda()),
                        Cell::number(i_f), Cell::number(rhs), Cell::number(residual),
                        Cell::number(scaled)});
    }
    write_table(o.out, cols, rows);
    const bool ok = worst <= o.tol;
    std::cerr << "identity: max scaled residual " << format_double(worst) << " over "
              << o.trials << " trials (tol " << format_double(o.tol) << ") -> "
              << (ok ? "ok" : "VIOLATION") << "\n";
    return ok ? kExitOk : kExitViolation;
}

struct SweepOpts {
    std::string function;
    double a = 0.0, b = 1.0;
    int alpha_steps = 5;
    int lambda_steps = 5;
    std::vector<double> q_values;
    std::vector<double> p_values;
    OutputOpts out;
};

int run_sweep(const SweepOpts& o) {
    const Func1D& f = find_function(o.function);
    const Interval iv(o.a, o.b);
    SweepGrid grid{o.alpha_steps, o.lambda_steps, o.q_values, o.p_values};
    if (grid.q_values.empty()) grid.q_values.push_back(1.0);
    const std::vector<TrialRecord> records = sweep(f, iv, grid);
    write_records(o.out, records);
    for (const TrialRecord& rec : records)
        if (!rec.pass) return kExitViolation;
    return kExitOk;
}

struct FuzzOpts {
    std::vector<std::string> functions;
    int trials = 1000;
    std::uint64_t seed = 0;
    bool emit_all = false;
    OutputOpts out;
};

int run_fuzz(const FuzzOpts& o) {
    std::vector<Func1D> subset;
    if (o.functions.empty()) {
        subset = catalog();
    } else {
        for (const std::string& name : o.functions) subset.push_back(find_function(name));
    }
    const std::vector<TrialRecord> records = fuzz_records(subset, o.trials, o.seed);
    std::vector<TrialRecord> failures;
    for (const TrialRecord& rec : records)
        if (!rec.pass) failures.push_back(rec);
    write_records(o.out, o.emit_all ? records : failures);
    std::cerr << "fuzz: " << failures.size() << " violations in " << o.trials
              << " trials (seed " << o.seed << ")\n";
    return failures.empty() ? kExitOk : kExitViolation;
}

struct MeansOpts {
    std::string k;
    double a = 0.0, b = 1.0;
    int n = 2;
    double q = 1.0;
    std::optional<double> p;
    OutputOpts out;
};

int run_means(const MeansOpts& o) {
    const PropositionKind kind = proposition_kind(o.k);
    const MeansCase mc{o.a, o.b, o.n, o.q, o.p};
    const PropResult res = proposition(kind, mc);
    const std::vector<std::string> cols{"k", "a",   "b",   "n",           "q",
                                        "p", "lhs", "rhs", "rhs_verbatim", "holds"};
    const Row row{Cell::text(proposition_name(kind)),
                  Cell::number(o.a),
                  Cell::number(o.b),
                  Cell::number(o.n),
                  Cell::number(o.q),
                  o.p ? Cell::number(*o.p) : Cell::null(),
                  Cell::number(res.lhs),
                  Cell::number(res.rhs),
                  res.rhs_verbatim ? Cell::number(*res.rhs_verbatim) : Cell::null(),
                  Cell::boolean(res.holds)};
    write_table(o.out, cols, {row});
    return res.holds ? kExitOk : kExitViolation;
}

struct OptpOpts {
    std::string function;
    double a = 0.0, b = 1.0;
    std::optional<std::string> preset_name;
    std::optional<double> alpha, lambda;
    double p_lo = 1.1;
    double p_hi = 8.0;
    std::string trace_path;
    OutputOpts out;
};

int run_optp(const OptpOpts& o) {
    const Func1D& f = find_function(o.function);
    const Interval iv(o.a, o.b);
    const RuleParams rp = resolve_rule(o.preset_name, o.alpha, o.lambda);
    const OptResult res = optimize_p(f, iv, rp, o.p_lo, o.p_hi);

    const std::vector<std::string> cols{"function", "a",    "b",     "alpha",
                                        "lambda",   "p_lo", "p_hi",  "best_p",
                                        "best_bound", "evaluations"};
    const Row row{Cell::text(f.name),        Cell::number(iv.a()),
                  Cell::number(iv.b()),      Cell::number(rp.alpha()),
                  Cell::number(rp.lambda()), Cell::number(o.p_lo),
                  Cell::number(o.p_hi),      Cell::number(res.best_exponent),
                  Cell::number(res.best_bound), Cell::number(res.evaluations)};
    write_table(o.out, cols, {row});

    if (!o.trace_path.empty()) {
        std::vector<Row> trace_rows;
        trace_rows.reserve(res.trace.size());
        for (const auto& [p, bound] : res.trace)
            trace_rows.push_back({Cell::number(p), Cell::number(bound)});
        OutputOpts trace_out{o.out.format, o.trace_path};
        write_table(trace_out, {"p", "bound"}, trace_rows);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-point quadrature error functional and certified bounds"};
    app.require_subcommand(1);

    VerifyOpts verify_opts;
    IdentityOpts identity_opts;
    SweepOpts sweep_opts;
    FuzzOpts fuzz_opts;
    MeansOpts means_opts;
    OptpOpts optp_opts;

    const auto add_output = [](CLI::App* cmd, OutputOpts& out) {
        cmd->add_option("--format", out.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--output", out.path, "Output file (default stdout)");
        // key=value file with the option names; command-line flags win.
        cmd->set_config("--config");
    };
    const auto add_interval = [](CLI::App* cmd, double& a, double& b) {
        cmd->add_option("--a", a, "Left endpoint")->required();
        cmd->add_option("--b", b, "Right endpoint")->required();
    };
    const auto add_rule = [](CLI::App* cmd, std::optional<std::string>& preset_name,
                             std::optional<double>& alpha, std::optional<double>& lambda) {
        cmd->add_option("--preset", preset_name, "simpson | midpoint | trapezoid");
        cmd->add_option("--alpha", alpha, "Node placement in [0,1]");
        cmd->add_option("--lambda", lambda, "Endpoint weight in [0,1]");
    };

    CLI::App* verify = app.add_subcommand("verify", "Evaluate |I_f| and both bounds");
    verify->add_option("--function", verify_opts.function, "Catalog function")->required();
    add_interval(verify, verify_opts.a, verify_opts.b);
    add_rule(verify, verify_opts.preset_name, verify_opts.alpha, verify_opts.lambda);
    verify->add_option("--q", verify_opts.q, "Power-mean exponent, >= 1")
        ->capture_default_str();
    verify->add_option("--p", verify_opts.p, "Holder exponent (enables the Holder bound)");
    verify->add_flag("--allow-uncertified", verify_opts.allow_uncertified,
                     "Evaluate outside the certified domain (exploratory)");
    add_output(verify, verify_opts.out);

    CLI::App* identity = app.add_subcommand("identity", "Check the kernel identity");
    identity->add_option("--function", identity_opts.function, "Catalog function")->required();
    add_interval(identity, identity_opts.a, identity_opts.b);
    identity->add_option("--trials", identity_opts.trials, "Random (alpha,lambda) trials")
        ->capture_default_str();
    identity->add_option("--seed", identity_opts.seed, "Seed")->capture_default_str();
    identity->add_option("--tol", identity_opts.tol, "Scaled residual tolerance")
        ->capture_default_str();
    add_output(identity, identity_opts.out);

    CLI::App* sweepc = app.add_subcommand("sweep", "Grid sweep over (alpha, lambda)");
    sweepc->add_option("--function", sweep_opts.function, "Catalog function")->required();
    add_interval(sweepc, sweep_opts.a, sweep_opts.b);
    sweepc->add_option("--alpha-steps", sweep_opts.alpha_steps, "Grid points in alpha")
        ->capture_default_str();
    sweepc->add_option("--lambda-steps", sweep_opts.lambda_steps, "Grid points in lambda")
        ->capture_default_str();
    sweepc->add_option("--q", sweep_opts.q_values, "Power-mean exponents (repeatable)");
    sweepc->add_option("--p", sweep_opts.p_values, "Holder exponents (repeatable)");
    add_output(sweepc, sweep_opts.out);

    CLI::App* fuzzc = app.add_subcommand("fuzz", "Randomized dominance search");
    fuzzc->add_option("--function", fuzz_opts.functions,
                      "Restrict to these catalog functions (repeatable)");
    fuzzc->add_option("--trials", fuzz_opts.trials, "Trial count")->capture_default_str();
    fuzzc->add_option("--seed", fuzz_opts.seed, "Seed")->capture_default_str();
    fuzzc->add_flag("--emit-all", fuzz_opts.emit_all,
                    "Emit every trial record, not only failures");
    add_output(fuzzc, fuzz_opts.out);

    CLI::App* meansc = app.add_subcommand("means", "Special-means inequalities");
    meansc->add_option("--k", means_opts.k, "Proposition: 1|2a|2b|3|4a|4b")->required();
    add_interval(meansc, means_opts.a, means_opts.b);
    meansc->add_option("--n", means_opts.n, "Monomial degree, >= 2")->required();
    meansc->add_option("--q", means_opts.q, "Exponent q >= 1")->capture_default_str();
    meansc->add_option("--p", means_opts.p, "Holder conjugate of q (needed for 3,4a,4b)");
    add_output(meansc, means_opts.out);

    CLI::App* optpc = app.add_subcommand("optp", "Minimize the Holder bound over p");
    optpc->add_option("--function", optp_opts.function, "Catalog function")->required();
    add_interval(optpc, optp_opts.a, optp_opts.b);
    add_rule(optpc, optp_opts.preset_name, optp_opts.alpha, optp_opts.lambda);
    optpc->add_option("--p-lo", optp_opts.p_lo, "Lower exponent limit, > 1")
        ->capture_default_str();
    optpc->add_option("--p-hi", optp_opts.p_hi, "Upper exponent limit")
        ->capture_default_str();
    optpc->add_option("--trace-output", optp_opts.trace_path, "Write the (p, bound) trace");
    add_output(optpc, optp_opts.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(verify_opts);
        if (identity->parsed()) return run_identity(identity_opts);
        if (sweepc->parsed()) return run_sweep(sweep_opts);
        if (fuzzc->parsed()) return run_fuzz(fuzz_opts);
        if (meansc->parsed()) return run_means(means_opts);
        if (optpc->parsed()) return run_optp(optp_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
