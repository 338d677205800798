#pragma once

#include <utility>
#include <vector>

#include "delsolve/delayed_trig.hpp"
#include "delsolve/problem.hpp"

namespace delsolve {

/// Sign of the history term in the closed form. The theorem as published
/// prints plus, but its own derivation (and the recurrence oracle) demand
/// minus: with plus, the scalar problem d=1, m=1, A=0, B=1, phi==1 already
/// disagrees with the recurrence at t=2. `plus` is kept for the regression
/// test only.
enum class HistorySign { minus, plus };

struct SolveOptions {
    HistorySign history_sign = HistorySign::minus;
};

/// The four addends of the closed form at one time step; their sum is y(t).
template <typename S>
struct SolutionTerms {
    Vec<S> from_cosine;   // Cos(t) phi(0)
    Vec<S> from_sine;     // Sin(t) (phi(1) - phi(0))
    Vec<S> from_history;  // -+ sum_{i=-m}^{-1} Sin(t-i-m-1) B phi(i), sign as implemented
    Vec<S> from_forcing;  // sum_{j=0}^{t-2} Sin(t-j-1) f(j)

    Vec<S> total() const { return from_cosine + from_sine + from_history + from_forcing; }
};

namespace detail {

template <typename S>
SolutionTerms<S> closed_form_terms(const Problem<S>& p, TrigEvaluator<S>& trig, int t,
                                   const std::vector<Vec<S>>& weighted_history,
                                   const SolveOptions& opts) {
    SolutionTerms<S> terms;
    terms.from_cosine = trig.cosine(t) * p.phi(0);
    terms.from_sine = trig.sine(t) * p.phi_delta0();

    Vec<S> history = Vec<S>::zero(p.dim);
    for (int i = -p.delay; i <= -1; ++i) {
        const Mat<S>& s = trig.sine(t - i - p.delay - 1);
        if (!s.is_zero()) history += s * weighted_history[static_cast<size_t>(i + p.delay)];
    }
    terms.from_history = opts.history_sign == HistorySign::minus ? -history : history;

    terms.from_forcing = Vec<S>::zero(p.dim);
    for (int j = 0; j <= t - 2; ++j)
        terms.from_forcing += trig.sine(t - j - 1) * p.forcing.at(j, p.dim);
    return terms;
}

}  // namespace detail

/// Closed-form solution of the initial value problem via the delayed
/// trig representation:
///
///   y(t) = Cos(t) phi(0) + Sin(t) (phi(1)-phi(0))
///          - sum_{i=-m}^{-1} Sin(t-i-m-1) B phi(i)
///          + sum_{j=0}^{t-2}  Sin(t-j-1) f(j).
///
/// The formula is applied uniformly on [0, T]: at t in {0, 1} the history
/// and forcing sums vanish through the negative-argument convention and the
/// value reduces to phi(t). Samples on [-m, -1] are copied from phi.
template <typename S>
Trajectory<S> solve_closed_form(const Problem<S>& p, const SolveOptions& opts = {}) {
    p.validate();
    TrigEvaluator<S> trig(p.A, p.B, p.delay);

    std::vector<Vec<S>> weighted_history;  // B phi(i), i = -m..-1
    weighted_history.reserve(static_cast<size_t>(p.delay));
    for (int i = -p.delay; i <= -1; ++i) weighted_history.push_back(p.B * p.phi(i));

    Trajectory<S> out(-p.delay, p.horizon, p.dim);
    for (int t = -p.delay; t <= -1; ++t) out.at(t) = p.phi(t);
    for (int t = 0; t <= p.horizon; ++t)
        out.at(t) = detail::closed_form_terms(p, trig, t, weighted_history, opts).total();
    return out;
}

/// The four addends of the representation at one t in [0, T].
template <typename S>
SolutionTerms<S> solution_terms(const Problem<S>& p, int t, const SolveOptions& opts = {}) {
    p.validate();
    detail::check(t >= 0 && t <= p.horizon, "solution_terms: t must lie in [0, horizon]");
    TrigEvaluator<S> trig(p.A, p.B, p.delay);
    std::vector<Vec<S>> weighted_history;
    weighted_history.reserve(static_cast<size_t>(p.delay));
    for (int i = -p.delay; i <= -1; ++i) weighted_history.push_back(p.B * p.phi(i));
    return detail::closed_form_terms(p, trig, t, weighted_history, opts);
}

}  // namespace delsolve
