#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delsolve/solver.hpp"

namespace delsolve {

/// Ground-truth simulator: iterates the recurrence
///   y(t+2) = 2 y(t+1) - y(t) - A y(t) - B y(t-m) + f(t)
/// from the initial data. This is the arbiter every closed-form claim is
/// checked against; it must stay independent of the trig machinery.
template <typename S>
Trajectory<S> simulate(const Problem<S>& p) {
    p.validate();
    Trajectory<S> y(-p.delay, p.horizon, p.dim);
    for (int t = -p.delay; t <= std::min(1, p.horizon); ++t) y.at(t) = p.phi(t);
    for (int t = 0; t + 2 <= p.horizon; ++t) {
        Vec<S> next = y.at(t + 1) * scalar_traits<S>::from_long(2);
        next -= y.at(t);
        next -= p.A * y.at(t);
        next -= p.B * y.at(t - p.delay);
        next += p.forcing.at(t, p.dim);
        y.at(t + 2) = std::move(next);
    }
    return y;
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
};

template <typename S>
struct BoundCheck {
    std::string name;
    S margin = scalar_traits<S>::zero();  // min over t of bound - value
    bool pass = false;
};

/// Comparison of the closed form against the simulator plus the per-problem
/// identity and norm-bound checks. In rational mode everything is exact; in
/// f64 mode discrepancies are measured and compared against `f64_tolerance`.
template <typename S>
struct VerificationReport {
    bool exact_equal = false;
    S max_abs_discrepancy = scalar_traits<S>::zero();
    double max_scaled_discrepancy = 0.0;  // |delta| / max(1, |oracle|)
    std::optional<int> first_divergence_t;
    std::vector<IdentityCheck> identity_checks;
    std::vector<BoundCheck<S>> bound_checks;
    bool trajectory_pass = false;

    bool passed() const {
        if (!trajectory_pass) return false;
        for (const auto& c : identity_checks)
            if (!c.pass) return false;
        for (const auto& c : bound_checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    HistorySign history_sign = HistorySign::minus;
    /// Componentwise |delta| / max(1, |reference|) accepted in f64 mode.
    double f64_tolerance = 1e-8;
};

namespace detail {

template <typename S>
double scaled_gap(const S& lhs, const S& rhs) {
    const double a = scalar_traits<S>::to_double(lhs);
    const double b = scalar_traits<S>::to_double(rhs);
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

/// Max |lhs-rhs| / max(1, |lhs|, |rhs|, scale) over all entries.
template <typename S>
double matrix_gap(const Mat<S>& lhs, const Mat<S>& rhs, double scale) {
    double worst = 0.0;
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j) {
            const double a = scalar_traits<S>::to_double(lhs(i, j));
            const double b = scalar_traits<S>::to_double(rhs(i, j));
            const double denom = std::max({1.0, std::abs(a), std::abs(b), scale});
            worst = std::max(worst, std::abs(a - b) / denom);
        }
    return worst;
}

}  // namespace detail

/// Runs the full consistency suite for one problem:
///   - closed form vs. simulate on [0, T] (exact in rational mode),
///   - the difference identities DeltaSin = Cos, DeltaCos = -A Sin - B Sin(.-m)
///     and their second-difference consequences, over t in [0, T],
///   - the norm bounds ||Sin(t)|| <= l_s(t), ||Cos(t)|| <= l_c(t) in the
///     induced 1-norm, over t in [0, T].
template <typename S>
VerificationReport<S> verify(const Problem<S>& p, const VerifyOptions& opts = {}) {
    constexpr bool exact = scalar_traits<S>::exact;
    VerificationReport<S> report;

    // Closed form vs. oracle.
    const Trajectory<S> closed = solve_closed_form(p, SolveOptions{opts.history_sign});
    const Trajectory<S> reference = simulate(p);
    report.exact_equal = true;
    for (int t = 0; t <= p.horizon; ++t) {
        for (int i = 0; i < p.dim; ++i) {
            S gap = scalar_traits<S>::abs(closed.at(t)[i] - reference.at(t)[i]);
            if (gap != scalar_traits<S>::zero() && report.exact_equal) {
                report.exact_equal = false;
                report.first_divergence_t = t;
            }
            if (gap > report.max_abs_discrepancy) report.max_abs_discrepancy = gap;
            report.max_scaled_discrepancy = std::max(
                report.max_scaled_discrepancy, detail::scaled_gap(closed.at(t)[i], reference.at(t)[i]));
        }
    }
    report.trajectory_pass =
        exact ? report.exact_equal : report.max_scaled_discrepancy <= opts.f64_tolerance;
    if (report.exact_equal) report.first_divergence_t.reset();

    // Difference identities for this (A, B, m).
    TrigEvaluator<S> trig(p.A, p.B, p.delay);
    const Mat<S> zero = Mat<S>::zero(p.dim);
    auto sine_at = [&](int t) -> const Mat<S>& { return trig.sine(t); };
    auto cosine_at = [&](int t) -> const Mat<S>& { return trig.cosine(t); };

    auto identity_holds = [&](const Mat<S>& lhs, const Mat<S>& rhs, double scale) {
        if (exact) return lhs == rhs;
        return detail::matrix_gap(lhs, rhs, scale) <= opts.f64_tolerance;
    };

    IdentityCheck d_sine{"delta_sine_equals_cosine", true};
    IdentityCheck d_cosine{"delta_cosine_recurrence", true};
    IdentityCheck dd_sine{"second_delta_sine_recurrence", true};
    IdentityCheck dd_cosine{"second_delta_cosine_recurrence", true};
    for (int t = 0; t <= p.horizon; ++t) {
        const double scale = exact ? 0.0 : scalar_traits<S>::to_double(trig.cosine_bound(t + 2));
        Mat<S> lhs = sine_at(t + 1) - sine_at(t);
        if (!identity_holds(lhs, cosine_at(t), scale)) d_sine.pass = false;

        Mat<S> rhs = zero - p.A * sine_at(t) - p.B * sine_at(t - p.delay);
        lhs = cosine_at(t + 1) - cosine_at(t);
        if (!identity_holds(lhs, rhs, scale)) d_cosine.pass = false;

        lhs = sine_at(t + 2) - sine_at(t + 1) * scalar_traits<S>::from_long(2) + sine_at(t);
        if (!identity_holds(lhs, rhs, scale)) dd_sine.pass = false;

        lhs = cosine_at(t + 2) - cosine_at(t + 1) * scalar_traits<S>::from_long(2) + cosine_at(t);
        rhs = zero - p.A * cosine_at(t) - p.B * cosine_at(t - p.delay);
        if (!identity_holds(lhs, rhs, scale)) dd_cosine.pass = false;
    }
    report.identity_checks = {d_sine, d_cosine, dd_sine, dd_cosine};

    // Norm bounds (q7-style majorants).
    BoundCheck<S> sine_bound{"sine_norm_le_bound"};
    BoundCheck<S> cosine_bound{"cosine_norm_le_bound"};
    bool first = true;
    for (int t = 0; t <= p.horizon; ++t) {
        S sine_margin = trig.sine_bound(t) - sine_at(t).norm_one();
        S cosine_margin = trig.cosine_bound(t) - cosine_at(t).norm_one();
        if (first || sine_margin < sine_bound.margin) sine_bound.margin = sine_margin;
        if (first || cosine_margin < cosine_bound.margin) cosine_bound.margin = cosine_margin;
        first = false;
    }
    auto margin_ok = [&](const S& margin) {
        if (exact) return margin >= scalar_traits<S>::zero();
        return scalar_traits<S>::to_double(margin) >= -opts.f64_tolerance;
    };
    sine_bound.pass = margin_ok(sine_bound.margin);
    cosine_bound.pass = margin_ok(cosine_bound.margin);
    report.bound_checks = {sine_bound, cosine_bound};

    return report;
}

/// Which index the Gronwall product coefficient a is frozen at. The source
/// statement prints a(j) (the outer summation index); the standard inequality
/// uses a(i). The two coincide for constant a, and only the a(i) variant is
/// sound for increasing a.
enum class GronwallVariant { outer_coefficient, running_coefficient };

/// Right-hand side of the discrete Gronwall inequality:
///   bound(t) = b(t) + a(t) sum_{j=0}^{t-1} b(j) f(j) prod_{i=j+1}^{t-1} (1 + a(.) f(i))
/// with empty sums = 0 and empty products = 1.
template <typename S>
std::vector<S> gronwall_bound(const std::vector<S>& b, const std::vector<S>& a,
                              const std::vector<S>& f,
                              GronwallVariant variant = GronwallVariant::outer_coefficient) {
    detail::check(a.size() == b.size() && f.size() == b.size(),
                  "gronwall_bound: sequences must have equal length");
    const int n = static_cast<int>(b.size());
    std::vector<S> bound;
    bound.reserve(b.size());
    for (int t = 0; t < n; ++t) {
        S sum = scalar_traits<S>::zero();
        for (int j = 0; j < t; ++j) {
            S prod = scalar_traits<S>::one();
            for (int i = j + 1; i < t; ++i) {
                const S& coeff = variant == GronwallVariant::outer_coefficient
                                     ? a[static_cast<size_t>(j)]
                                     : a[static_cast<size_t>(i)];
                prod *= scalar_traits<S>::one() + coeff * f[static_cast<size_t>(i)];
            }
            sum += b[static_cast<size_t>(j)] * f[static_cast<size_t>(j)] * prod;
        }
        bound.push_back(b[static_cast<size_t>(t)] + a[static_cast<size_t>(t)] * sum);
    }
    return bound;
}

/// Majorant data for exponential boundedness of the solution under
/// geometric forcing ||f(t)|| <= b1 * b2^t.
template <typename S>
struct ExponentialBoundReport {
    std::vector<S> b_of_t;      // the Gronwall input majorant, t = 0..T
    std::vector<S> bound_of_t;  // b(t) (1 + t^2 K (1 + t K)^t), K = ||A|| + ||B||
    S b1_hat = scalar_traits<S>::zero();  // explicit envelope ||y(t)|| <= b1_hat b2_hat^t
    S b2_hat = scalar_traits<S>::zero();
};

/// Exponential-boundedness estimate for a problem with geometric forcing.
///
///   b(t) = ||phi(0)|| + t ||Delta phi(0)||
///          + sum_{j=-m}^{-1} max(0, t-m-j) ||B|| ||phi(j)||
///          + t(t+1)/2 b1 b2^t
///
/// with b1 = ||scale||_1 and b2 normalized to max(ratio, 1) (for ratio < 1
/// the forcing is re-majorized by b1 * 1^t). The history coefficients are
/// clamped at zero: the index shift in the derivation only produces terms
/// with j <= t-1-m, so for t < m the unclamped coefficients would go
/// negative and break both b >= 0 and the majorant property.
///
/// bound(t) multiplies b(t) by the Gronwall factor. (b1_hat, b2_hat) is an
/// explicit envelope with ||y(t)|| <= b1_hat * b2_hat^t on [0, T], obtained
/// by induction on the recurrence with base b2_hat = 2 + ||A|| + ||B|| + b1 + b2.
template <typename S>
ExponentialBoundReport<S> exponential_bound(const Problem<S>& p) {
    p.validate();
    detail::check(p.forcing.kind == Forcing<S>::Kind::geometric,
                  "exponential_bound requires geometric forcing");

    const S one = scalar_traits<S>::one();
    const S norm_a = p.A.norm_one();
    const S norm_b = p.B.norm_one();
    const S growth = norm_a + norm_b;  // K
    const S b1 = p.forcing.geometric_scale.norm_one();
    S b2 = p.forcing.geometric_ratio;
    if (b2 < one) b2 = one;

    std::vector<S> history_norms;  // ||phi(j)||, j = -m..-1
    for (int j = -p.delay; j <= -1; ++j) history_norms.push_back(p.phi(j).norm_one());
    const S phi0_norm = p.phi(0).norm_one();
    const S dphi0_norm = p.phi_delta0().norm_one();

    ExponentialBoundReport<S> report;
    report.b_of_t.reserve(static_cast<size_t>(p.horizon) + 1);
    report.bound_of_t.reserve(static_cast<size_t>(p.horizon) + 1);
    for (int t = 0; t <= p.horizon; ++t) {
        const S t_s = scalar_traits<S>::from_long(t);
        S b = phi0_norm + t_s * dphi0_norm;
        for (int j = -p.delay; j <= -1; ++j) {
            const long coeff = std::max(0L, static_cast<long>(t) - p.delay - j);
            b += scalar_traits<S>::from_long(coeff) * norm_b *
                 history_norms[static_cast<size_t>(j + p.delay)];
        }
        b += scalar_traits<S>::from_long(static_cast<long>(t) * (t + 1)) /
             scalar_traits<S>::from_long(2) * b1 * scalar_pow(b2, t);
        const S growth_base = one + t_s * growth;
        S factor = one + t_s * t_s * growth * scalar_pow(growth_base, t);
        report.bound_of_t.push_back(b * factor);
        report.b_of_t.push_back(std::move(b));
    }

    report.b2_hat = scalar_traits<S>::from_long(2) + growth + b1 + b2;
    S phi_max = scalar_traits<S>::zero();
    for (int t = -p.delay; t <= 1; ++t) {
        S n = p.phi(t).norm_one();
        if (n > phi_max) phi_max = n;
    }
    report.b1_hat = phi_max * scalar_pow(report.b2_hat, p.delay);
    if (report.b1_hat < b1) report.b1_hat = b1;
    return report;
}

}  // namespace delsolve
