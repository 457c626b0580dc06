#include "fracdelay/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fracdelay/config.hpp"
#include "fracdelay/errors.hpp"
#include "fracdelay/special_functions.hpp"
#include "fracdelay/stability.hpp"
#include "fracdelay/verify.hpp"

namespace fracdelay {

namespace {

double parse_number(const std::string& what, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last) throw DomainError(what + " is not a number: '" + text + "'");
    return v;
}

std::string format_17(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

// Writes to path, or to fallback when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("cannot write output file '" + path + "'");
    f << text;
    if (!f) throw DomainError("failed writing output file '" + path + "'");
}

std::string list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + format_double(v[k]);
    return s;
}

int cmd_solve(const std::string& path, const std::string& output, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = load_config(path);
    const ProblemSpec spec = cfg.to_problem();
    const PicardResult r = picard_solve(spec, cfg.solver);
    emit(output, trajectory_csv(r.trajectory.grid, r.trajectory.values), out);
    std::ostream& summary = output.empty() ? err : out;
    summary << "iterations: " << r.iterations << "\n"
            << "final_residual: " << format_double(r.final_residual) << "\n"
            << "contraction_ratios: " << list(r.ratios) << "\n";
    return kExitOk;
}

std::string stability_report(const StabilityReport& r) {
    std::ostringstream s;
    s << "epsilon: " << format_double(r.eps) << "\n"
      << "c_ml: " << format_double(r.c_ml) << "\n"
      << "trials: " << r.trials << "\n"
      << "failed_trials: " << r.failed_trials << "\n"
      << "worst_ratio: " << format_double(r.worst_ratio) << "\n"
      << "history_max_dev: " << format_double(r.history_max_dev) << "\n"
      << "domination_excess: " << format_double(r.domination_excess) << "\n"
      << "majorant_excess: " << format_double(r.majorant_excess) << "\n"
      << "trial_ratios: " << list(r.trial_ratios) << "\n"
      << "pass: " << (r.pass ? "true" : "false") << "\n";
    return s.str();
}

int cmd_stability(const std::string& path, const std::string& output, std::ostream& out) {
    const RunConfig cfg = load_config(path);
    if (!cfg.stability) throw ConfigError("stability", "block missing, set stability.epsilon");
    const ProblemSpec spec = cfg.to_problem();
    const auto& b = *cfg.stability;
    const StabilityReport r = verify_uhml(spec, b.epsilon, b.trials, cfg.solver, b.seed);
    emit(output, stability_report(r), out);
    return r.pass ? kExitOk : kExitFailed;
}

int cmd_mlf(std::vector<std::string> values, std::ostream& out) {
    // "--" may only separate theta from the parameters
    const auto dash = std::find(values.begin(), values.end(), "--");
    if (dash != values.end()) {
        if (dash + 2 != values.end()) throw DomainError("mlf: expected exactly one value after '--'");
        values.erase(dash);
    }
    if (values.size() < 2 || values.size() > 3) throw DomainError("mlf: usage mlf <p> [q] -- <theta>");
    const double p = parse_number("p", values[0]);
    const double theta = parse_number("theta", values.back());
    double v;
    if (values.size() == 3) {
        v = ml2(p, parse_number("q", values[1]), theta);
    } else {
        v = ml1(p, theta);
    }
    out << format_17(v) << "\n";
    return kExitOk;
}

// Restores the gamma hook on scope exit.
struct FaultGuard {
    explicit FaultGuard(double rel) { testing::set_gamma_fault(rel); }
    ~FaultGuard() { testing::set_gamma_fault(0.0); }
    FaultGuard(const FaultGuard&) = delete;
    FaultGuard& operator=(const FaultGuard&) = delete;
};

int cmd_verify(const std::string& suite, double fault, std::ostream& out) {
    std::vector<IdentityCheck> checks;
    {
        const FaultGuard guard(fault);
        checks = run_verify_suite(suite);
    }
    out << format_checks(checks);
    for (const auto& c : checks)
        if (!c.pass) return kExitFailed;
    return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional delay integral equations: solve, certify stability, evaluate Mittag-Leffler"};
    app.name("fracdelay");
    app.require_subcommand(1);

    std::string config, output;
    auto* solve = app.add_subcommand("solve", "Solve a configured problem and write the trajectory CSV");
    solve->add_option("config", config, "Config file")->required();
    solve->add_option("-o,--output", output, "CSV file (stdout when absent)");

    std::string sconfig, soutput;
    auto* stab = app.add_subcommand("stability", "Run the stability certification of a configured problem");
    stab->add_option("config", sconfig, "Config file with a stability block")->required();
    stab->add_option("-o,--output", soutput, "Report file (stdout when absent)");

    // CLI11 ends a vector positional at "--", so the operands are split by hand
    auto* mlf = app.add_subcommand("mlf", "Evaluate E_p(theta) or E_(p,q)(theta): mlf <p> [q] [--] <theta>");
    mlf->prefix_command();

    std::string suite;
    double fault = 0.0;
    auto* verify = app.add_subcommand("verify", "Run an identity suite: special, calculus, laplace or all");
    verify->add_option("suite", suite, "Suite name")->required();
    verify->add_option("--inject-gamma-fault", fault, "Test hook: scale gamma(x) by 1 + REL x")->group("");

    auto* vlap = app.add_subcommand("verify-laplace", "Same as 'verify laplace'");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitDomain;
    }

    if (*solve) return cmd_solve(config, output, out, err);
    if (*stab) return cmd_stability(sconfig, soutput, out);
    if (*mlf) return cmd_mlf(mlf->remaining(), out);
    if (*verify) return cmd_verify(suite, fault, out);
    if (*vlap) return cmd_verify("laplace", 0.0, out);
    return kExitDomain;
}

}  // namespace

std::string trajectory_csv(const std::vector<double>& grid, const std::vector<double>& values) {
    if (grid.size() != values.size()) throw DomainError("grid and values differ in length");
    std::string s = "ell,z\n";
    for (std::size_t k = 0; k < grid.size(); ++k) s += format_double(grid[k]) + "," + format_double(values[k]) + "\n";
    return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace fracdelay
