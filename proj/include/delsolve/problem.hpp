#pragma once

#include <utility>
#include <vector>

#include "delsolve/matrix.hpp"

namespace delsolve {

/// Right-hand side f(t) of the difference system, t >= 0.
template <typename S>
struct Forcing {
    enum class Kind { zero, constant, geometric, table };

    Kind kind = Kind::zero;
    Vec<S> constant_value;            // kind == constant
    Vec<S> geometric_scale;           // kind == geometric: f(t) = scale * ratio^t
    S geometric_ratio = scalar_traits<S>::one();
    std::vector<Vec<S>> table_values;  // kind == table: f(t) = table[t]

    static Forcing zero_forcing() { return Forcing{}; }
    static Forcing constant(Vec<S> c) {
        Forcing f;
        f.kind = Kind::constant;
        f.constant_value = std::move(c);
        return f;
    }
    static Forcing geometric(Vec<S> scale, S ratio) {
        Forcing f;
        f.kind = Kind::geometric;
        f.geometric_scale = std::move(scale);
        f.geometric_ratio = std::move(ratio);
        return f;
    }
    static Forcing table(std::vector<Vec<S>> values) {
        Forcing f;
        f.kind = Kind::table;
        f.table_values = std::move(values);
        return f;
    }

    Vec<S> at(int t, int dim) const {
        switch (kind) {
            case Kind::zero: return Vec<S>::zero(dim);
            case Kind::constant: return constant_value;
            case Kind::geometric: return geometric_scale * scalar_pow(geometric_ratio, t);
            case Kind::table:
                detail::check(t >= 0 && t < static_cast<int>(table_values.size()),
                              "forcing table does not cover the requested step");
                return table_values[static_cast<size_t>(t)];
        }
        return Vec<S>::zero(dim);
    }
};

/// Initial value problem
///   Delta^2 y(t) + A y(t) + B y(t-m) = f(t),  t >= 0,
///   y(t) = phi(t) on [-m, 1],
/// to be evaluated on [-m, horizon].
template <typename S>
struct Problem {
    int dim = 0;
    int delay = 1;   // m >= 1
    int horizon = 1; // T >= 1
    Mat<S> A, B;
    std::vector<Vec<S>> initial;  // phi(-m), ..., phi(1); exactly m+2 entries
    Forcing<S> forcing;

    const Vec<S>& phi(int t) const { return initial[static_cast<size_t>(t + delay)]; }
    Vec<S> phi_delta0() const { return phi(1) - phi(0); }

    /// Throws std::invalid_argument when any structural invariant fails.
    void validate() const {
        detail::check(dim >= 1, "problem: dimension must be >= 1");
        detail::check(delay >= 1, "problem: delay m must be >= 1");
        detail::check(horizon >= 1, "problem: horizon must be >= 1");
        detail::check(A.rows() == dim && A.cols() == dim, "problem: A must be d x d");
        detail::check(B.rows() == dim && B.cols() == dim, "problem: B must be d x d");
        detail::check(static_cast<int>(initial.size()) == delay + 2,
                      "initial data must cover Z_{-m}^{1}");
        for (const auto& v : initial)
            detail::check(v.dim() == dim, "problem: initial vector dimension mismatch");
        switch (forcing.kind) {
            case Forcing<S>::Kind::zero: break;
            case Forcing<S>::Kind::constant:
                detail::check(forcing.constant_value.dim() == dim,
                              "problem: constant forcing dimension mismatch");
                break;
            case Forcing<S>::Kind::geometric:
                detail::check(forcing.geometric_scale.dim() == dim,
                              "problem: geometric forcing dimension mismatch");
                detail::check(forcing.geometric_ratio > scalar_traits<S>::zero(),
                              "problem: geometric forcing ratio must be positive");
                break;
            case Forcing<S>::Kind::table:
                // f(t) is consumed for t <= horizon-2.
                detail::check(static_cast<int>(forcing.table_values.size()) >= horizon - 1,
                              "problem: forcing table shorter than horizon-1");
                for (const auto& v : forcing.table_values)
                    detail::check(v.dim() == dim, "problem: forcing table dimension mismatch");
                break;
        }
    }
};

/// Solution samples on the integer window [t_min, t_max] = [-m, T].
template <typename S>
struct Trajectory {
    int t_min = 0, t_max = 0;
    std::vector<Vec<S>> values;

    Trajectory() = default;
    Trajectory(int tmin, int tmax, int dim)
        : t_min(tmin), t_max(tmax),
          values(static_cast<size_t>(tmax - tmin + 1), Vec<S>::zero(dim)) {
        detail::check(tmax >= tmin, "trajectory: empty time window");
    }

    Vec<S>& at(int t) { return values[static_cast<size_t>(t - t_min)]; }
    const Vec<S>& at(int t) const { return values[static_cast<size_t>(t - t_min)]; }

    bool operator==(const Trajectory& o) const {
        return t_min == o.t_min && t_max == o.t_max && values == o.values;
    }
};

}  // namespace delsolve
