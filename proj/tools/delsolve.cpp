// delsolve: closed-form and simulated solutions of second-order linear
// discrete systems with a single pure delay,
//   Delta^2 y(t) + A y(t) + B y(t-m) = f(t),  y = phi on [-m, 1],
// plus the verification, determining-table, and delayed-trig utilities.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "delsolve/io.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string input;
    std::string output;  // empty -> stdout
    std::string mode;    // "", "rational", "f64"
    std::optional<int> horizon;
    std::string format = "csv";
    int decimal_digits = -1;
    int tmin = 0;
    int tmax = 10;
};

void add_io_flags(CLI::App* cmd, CommonFlags& flags, bool with_format) {
    cmd->add_option("--input", flags.input, "problem file (JSON)")->required();
    cmd->add_option("--output", flags.output, "output path (default: stdout)");
    cmd->add_option("--mode", flags.mode, "override the file's scalar mode")
        ->check(CLI::IsMember({"rational", "f64"}));
    cmd->add_option("--horizon", flags.horizon, "override the file's horizon");
    if (with_format)
        cmd->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
}

delsolve::ProblemFile load(const CommonFlags& flags) {
    delsolve::ProblemFile file = delsolve::load_problem(flags.input);
    if (flags.mode == "rational") file.mode = delsolve::ScalarMode::rational;
    if (flags.mode == "f64") file.mode = delsolve::ScalarMode::f64;
    if (flags.horizon) {
        file.exact.horizon = *flags.horizon;
        file.exact.validate();
    }
    return file;
}

void emit(const CommonFlags& flags, const std::string& text) {
    if (flags.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(flags.output);
    if (!out) throw std::runtime_error(flags.output + ": cannot open for writing");
    out << text;
}

void emit_json(const CommonFlags& flags, const delsolve::json& doc) {
    emit(flags, doc.dump(2) + "\n");
}

template <typename S>
delsolve::Problem<S> problem_as(const delsolve::ProblemFile& file);

template <>
delsolve::Problem<delsolve::Rational> problem_as(const delsolve::ProblemFile& file) {
    return file.exact;
}

template <>
delsolve::Problem<double> problem_as(const delsolve::ProblemFile& file) {
    return delsolve::to_f64(file.exact);
}

template <typename S>
int run_trajectory(const CommonFlags& flags, const delsolve::ProblemFile& file, bool closed_form) {
    const auto problem = problem_as<S>(file);
    const delsolve::Trajectory<S> traj =
        closed_form ? delsolve::solve_closed_form(problem) : delsolve::simulate(problem);
    if (flags.format == "json")
        emit_json(flags, delsolve::trajectory_to_json(traj));
    else
        emit(flags, delsolve::trajectory_to_csv(traj, flags.decimal_digits));
    return kExitSuccess;
}

template <typename S>
int run_verify(const CommonFlags& flags, const delsolve::ProblemFile& file) {
    const auto report = delsolve::verify(problem_as<S>(file));
    emit_json(flags, delsolve::report_to_json(report));
    return report.passed() ? kExitSuccess : kExitVerificationFailure;
}

int run_qtable(const CommonFlags& flags, const delsolve::ProblemFile& file) {
    // Exact rationals regardless of the file's mode; f64 entries lift losslessly.
    delsolve::DeterminingTable<delsolve::Rational> table(file.exact.A, file.exact.B);
    delsolve::json out;
    out["d"] = table.dim();
    delsolve::json rows = delsolve::json::array();
    for (int t = 0; t <= flags.tmax; ++t) {
        delsolve::json row;
        row["t"] = t;
        delsolve::json entries = delsolve::json::array();
        for (int s = 0; s < t; ++s)
            entries.push_back(delsolve::io_detail::matrix_to_json(table.eval(t, s)));
        row["q"] = std::move(entries);
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    emit_json(flags, out);
    return kExitSuccess;
}

template <typename S>
int run_trig(const CommonFlags& flags, const delsolve::ProblemFile& file) {
    const auto problem = problem_as<S>(file);
    delsolve::TrigEvaluator<S> trig(problem.A, problem.B, problem.delay);
    if (flags.format == "json") {
        delsolve::json out = delsolve::json::array();
        for (int t = flags.tmin; t <= flags.tmax; ++t) {
            delsolve::json entry;
            entry["t"] = t;
            entry["sin"] = delsolve::io_detail::matrix_to_json(trig.sine(t));
            entry["cos"] = delsolve::io_detail::matrix_to_json(trig.cosine(t));
            out.push_back(std::move(entry));
        }
        emit_json(flags, out);
    } else {
        const int d = trig.dim();
        std::string out = "t";
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                out += ",sin" + std::to_string(i) + std::to_string(j);
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                out += ",cos" + std::to_string(i) + std::to_string(j);
        out += "\n";
        for (int t = flags.tmin; t <= flags.tmax; ++t) {
            out += std::to_string(t);
            const auto& s = trig.sine(t);
            const auto& c = trig.cosine(t);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    out += "," + delsolve::io_detail::scalar_to_csv(s(i, j), flags.decimal_digits);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    out += "," + delsolve::io_detail::scalar_to_csv(c(i, j), flags.decimal_digits);
            out += "\n";
        }
        emit(flags, out);
    }
    return kExitSuccess;
}

template <typename S>
int run_bounds(const CommonFlags& flags, const delsolve::ProblemFile& file) {
    auto problem = problem_as<S>(file);
    delsolve::TrigEvaluator<S> trig(problem.A, problem.B, problem.delay);

    delsolve::json out;
    out["tmax"] = flags.tmax;
    delsolve::json ls = delsolve::json::array(), lc = delsolve::json::array();
    for (int t = 0; t <= flags.tmax; ++t) {
        ls.push_back(delsolve::io_detail::scalar_to_json(trig.sine_bound(t)));
        lc.push_back(delsolve::io_detail::scalar_to_json(trig.cosine_bound(t)));
    }
    out["sine_bound"] = std::move(ls);
    out["cosine_bound"] = std::move(lc);

    // The exponential majorant needs geometric forcing; zero and constant
    // forcing are re-expressed as the equivalent geometric envelope.
    using Kind = typename delsolve::Forcing<S>::Kind;
    auto kind = problem.forcing.kind;
    if (kind == Kind::zero)
        problem.forcing = delsolve::Forcing<S>::geometric(delsolve::Vec<S>::zero(problem.dim),
                                                          delsolve::scalar_traits<S>::one());
    else if (kind == Kind::constant)
        problem.forcing = delsolve::Forcing<S>::geometric(problem.forcing.constant_value,
                                                          delsolve::scalar_traits<S>::one());
    if (problem.forcing.kind == Kind::geometric) {
        problem.horizon = std::max(problem.horizon, std::max(flags.tmax, 1));
        const auto bound = delsolve::exponential_bound(problem);
        delsolve::json b = delsolve::json::array(), env = delsolve::json::array();
        for (int t = 0; t <= flags.tmax; ++t) {
            b.push_back(delsolve::io_detail::scalar_to_json(bound.b_of_t[static_cast<size_t>(t)]));
            env.push_back(
                delsolve::io_detail::scalar_to_json(bound.bound_of_t[static_cast<size_t>(t)]));
        }
        out["exp_b"] = std::move(b);
        out["exp_bound"] = std::move(env);
        out["b1_hat"] = delsolve::io_detail::scalar_to_json(bound.b1_hat);
        out["b2_hat"] = delsolve::io_detail::scalar_to_json(bound.b2_hat);
    }
    emit_json(flags, out);
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form solver for second-order delayed discrete systems"};
    app.require_subcommand(1);

    CommonFlags flags;
    CLI::App* solve = app.add_subcommand("solve", "closed-form trajectory");
    add_io_flags(solve, flags, true);
    solve->add_option("--decimal-digits", flags.decimal_digits,
                      "render rationals as fixed-point decimals in CSV");

    CLI::App* simulate = app.add_subcommand("simulate", "brute-force recurrence trajectory");
    add_io_flags(simulate, flags, true);
    simulate->add_option("--decimal-digits", flags.decimal_digits,
                         "render rationals as fixed-point decimals in CSV");

    CLI::App* verify = app.add_subcommand(
        "verify", "closed form vs. oracle plus identity and bound checks");
    add_io_flags(verify, flags, false);

    CLI::App* qtable = app.add_subcommand("qtable", "determining-matrix table dump (JSON)");
    add_io_flags(qtable, flags, false);
    qtable->add_option("--tmax", flags.tmax, "largest row index t")->required();

    CLI::App* trig = app.add_subcommand("trig", "delayed sine/cosine dump");
    add_io_flags(trig, flags, true);
    trig->add_option("--tmin", flags.tmin, "first t (default 0)");
    trig->add_option("--tmax", flags.tmax, "last t")->required();
    trig->add_option("--decimal-digits", flags.decimal_digits,
                     "render rationals as fixed-point decimals in CSV");

    CLI::App* bounds = app.add_subcommand(
        "bounds", "l_s/l_c norm majorants and the exponential-bound series (JSON)");
    add_io_flags(bounds, flags, false);
    bounds->add_option("--tmax", flags.tmax, "last t")->required();

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
        const delsolve::ProblemFile file = load(flags);
        const bool rational = file.mode == delsolve::ScalarMode::rational;
        if (solve->parsed())
            return rational ? run_trajectory<delsolve::Rational>(flags, file, true)
                            : run_trajectory<double>(flags, file, true);
        if (simulate->parsed())
            return rational ? run_trajectory<delsolve::Rational>(flags, file, false)
                            : run_trajectory<double>(flags, file, false);
        if (verify->parsed())
            return rational ? run_verify<delsolve::Rational>(flags, file)
                            : run_verify<double>(flags, file);
        if (qtable->parsed()) return run_qtable(flags, file);
        if (trig->parsed())
            return rational ? run_trig<delsolve::Rational>(flags, file)
                            : run_trig<double>(flags, file);
        if (bounds->parsed())
            return rational ? run_bounds<delsolve::Rational>(flags, file)
                            : run_bounds<double>(flags, file);
    } catch (const std::exception& e) {
        std::cerr << "delsolve: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
