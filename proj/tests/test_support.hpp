#pragma once

// Shared generators for the randomized suites. Every test fixes its own
// mt19937 seed so runs are reproducible.

#include <random>

#include "delsolve/problem.hpp"

namespace test_support {

using delsolve::Mat;
using delsolve::Rational;
using delsolve::Vec;

/// n/d in canonical form (mpq_class's two-argument constructor does not
/// canonicalize on its own).
inline Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Mat<Rational> random_int_matrix(std::mt19937& rng, int d, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Mat<Rational> m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = Rational(dist(rng));
    return m;
}

inline Vec<Rational> random_int_vector(std::mt19937& rng, int d, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Vec<Rational> v(d);
    for (int i = 0; i < d; ++i) v[i] = Rational(dist(rng));
    return v;
}

/// Entries p/q with p in [-9, 9] and q in [1, 9].
inline Mat<Rational> random_rational_matrix(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Mat<Rational> m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            m(i, j) = r;
        }
    return m;
}

/// Resamples until the pair genuinely fails to commute.
inline std::pair<Mat<Rational>, Mat<Rational>> random_noncommuting_pair(std::mt19937& rng, int d,
                                                                        int lo = -3, int hi = 3) {
    for (;;) {
        Mat<Rational> a = random_int_matrix(rng, d, lo, hi);
        Mat<Rational> b = random_int_matrix(rng, d, lo, hi);
        if (a * b != b * a) return {a, b};
    }
}

/// Random problem with integer data, the shape the acceptance criteria use.
inline delsolve::Problem<Rational> random_problem(std::mt19937& rng, int horizon, int entry_lo = -3,
                                                  int entry_hi = 3, int max_dim = 3,
                                                  int max_delay = 4) {
    std::uniform_int_distribution<int> dim_dist(1, max_dim);
    std::uniform_int_distribution<int> delay_dist(1, max_delay);
    std::uniform_int_distribution<int> kind_dist(0, 3);

    delsolve::Problem<Rational> p;
    p.dim = dim_dist(rng);
    p.delay = delay_dist(rng);
    p.horizon = horizon;
    p.A = random_int_matrix(rng, p.dim, entry_lo, entry_hi);
    p.B = random_int_matrix(rng, p.dim, entry_lo, entry_hi);
    for (int t = -p.delay; t <= 1; ++t)
        p.initial.push_back(random_int_vector(rng, p.dim, entry_lo, entry_hi));

    switch (kind_dist(rng)) {
        case 0:
            p.forcing = delsolve::Forcing<Rational>::zero_forcing();
            break;
        case 1:
            p.forcing = delsolve::Forcing<Rational>::constant(
                random_int_vector(rng, p.dim, entry_lo, entry_hi));
            break;
        case 2: {
            std::uniform_int_distribution<int> ratio_dist(1, 2);
            p.forcing = delsolve::Forcing<Rational>::geometric(
                random_int_vector(rng, p.dim, entry_lo, entry_hi), Rational(ratio_dist(rng)));
            break;
        }
        default: {
            std::vector<Vec<Rational>> table;
            for (int t = 0; t + 2 <= horizon; ++t)
                table.push_back(random_int_vector(rng, p.dim, entry_lo, entry_hi));
            if (table.empty()) table.push_back(Vec<Rational>::zero(p.dim));
            p.forcing = delsolve::Forcing<Rational>::table(std::move(table));
            break;
        }
    }
    return p;
}

/// The scalar running example: d=1, m=1, A=0, B=1, phi == 1, f == 0.
inline delsolve::Problem<Rational> scalar_example(int horizon) {
    delsolve::Problem<Rational> p;
    p.dim = 1;
    p.delay = 1;
    p.horizon = horizon;
    p.A = Mat<Rational>{{Rational(0)}};
    p.B = Mat<Rational>{{Rational(1)}};
    p.initial = {Vec<Rational>{Rational(1)}, Vec<Rational>{Rational(1)}, Vec<Rational>{Rational(1)}};
    p.forcing = delsolve::Forcing<Rational>::zero_forcing();
    return p;
}

}  // namespace test_support
