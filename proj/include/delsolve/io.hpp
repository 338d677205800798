#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "delsolve/oracle.hpp"
#include "delsolve/problem.hpp"

namespace delsolve {

using json = nlohmann::ordered_json;

/// Raised for malformed problem files; the message carries the file (and,
/// for JSON syntax errors, line/column) context.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A problem file parsed losslessly. Entries are held exactly regardless of
/// the declared mode (every f64 literal is a dyadic rational); `mode` records
/// the mode the file declared, which the CLI may override.
struct ProblemFile {
    ScalarMode mode = ScalarMode::rational;
    Problem<Rational> exact;
};

ProblemFile parse_problem(const json& doc, const std::string& context);
ProblemFile load_problem(const std::string& path);
json problem_to_json(const ProblemFile& file);

Problem<double> to_f64(const Problem<Rational>& p);

/// Fixed-point decimal rendering of an exact rational, rounded to nearest
/// (ties away from zero).
std::string format_rational_decimal(const Rational& r, int digits);

namespace io_detail {

template <typename S>
json scalar_to_json(const S& v) {
    if constexpr (scalar_traits<S>::exact)
        return scalar_traits<S>::to_string(v);
    else
        return v;
}

template <typename S>
std::string scalar_to_csv(const S& v, int decimal_digits) {
    if constexpr (scalar_traits<S>::exact) {
        if (decimal_digits >= 0) return format_rational_decimal(v, decimal_digits);
        return scalar_traits<S>::to_string(v);
    } else {
        if (decimal_digits >= 0) {
            char buf[512];
            std::snprintf(buf, sizeof buf, "%.*f", decimal_digits, v);
            return buf;
        }
        return scalar_traits<S>::to_string(v);
    }
}

template <typename S>
json matrix_to_json(const Mat<S>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename S>
json vector_to_json(const Vec<S>& v) {
    json out = json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(scalar_to_json(v[i]));
    return out;
}

}  // namespace io_detail

/// CSV with header "t,y1,...,yd" and one row per t in [t_min, t_max].
/// decimal_digits < 0 keeps exact "p/q" (or shortest-round-trip f64) text.
template <typename S>
std::string trajectory_to_csv(const Trajectory<S>& traj, int decimal_digits = -1) {
    std::string out = "t";
    const int d = traj.values.empty() ? 0 : traj.values.front().dim();
    for (int i = 1; i <= d; ++i) out += ",y" + std::to_string(i);
    out += "\n";
    for (int t = traj.t_min; t <= traj.t_max; ++t) {
        out += std::to_string(t);
        for (int i = 0; i < d; ++i) {
            out += ",";
            out += io_detail::scalar_to_csv(traj.at(t)[i], decimal_digits);
        }
        out += "\n";
    }
    return out;
}

template <typename S>
json trajectory_to_json(const Trajectory<S>& traj) {
    json out;
    out["t_min"] = traj.t_min;
    out["t_max"] = traj.t_max;
    json values = json::array();
    for (int t = traj.t_min; t <= traj.t_max; ++t)
        values.push_back(io_detail::vector_to_json(traj.at(t)));
    out["values"] = std::move(values);
    return out;
}

template <typename S>
json report_to_json(const VerificationReport<S>& report) {
    json out;
    out["mode"] = to_string(scalar_traits<S>::mode);
    out["passed"] = report.passed();
    out["exact_equal"] = report.exact_equal;
    out["max_abs_discrepancy"] = io_detail::scalar_to_json(report.max_abs_discrepancy);
    out["max_scaled_discrepancy"] = report.max_scaled_discrepancy;
    if (report.first_divergence_t)
        out["first_divergence_t"] = *report.first_divergence_t;
    else
        out["first_divergence_t"] = nullptr;
    json identities = json::array();
    for (const auto& c : report.identity_checks)
        identities.push_back(json{{"name", c.name}, {"pass", c.pass}});
    out["identity_checks"] = std::move(identities);
    json bounds = json::array();
    for (const auto& c : report.bound_checks)
        bounds.push_back(json{{"name", c.name},
                              {"margin", io_detail::scalar_to_json(c.margin)},
                              {"pass", c.pass}});
    out["bound_checks"] = std::move(bounds);
    return out;
}

}  // namespace delsolve
