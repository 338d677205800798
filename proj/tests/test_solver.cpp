#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delsolve/oracle.hpp"
#include "delsolve/solver.hpp"
#include "test_support.hpp"

using namespace delsolve;
using test_support::random_problem;
using test_support::scalar_example;

TEST_CASE("closed form reproduces the initial data at t = 0, 1") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Problem<Rational> p = random_problem(rng, 5);
        Trajectory<Rational> y = solve_closed_form(p);
        CHECK(y.at(0) == p.phi(0));
        CHECK(y.at(1) == p.phi(1));
        for (int t = -p.delay; t <= -1; ++t) CHECK(y.at(t) == p.phi(t));
    }
}

TEST_CASE("scalar running example") {
    Problem<Rational> p = scalar_example(10);
    Trajectory<Rational> y = solve_closed_form(p);
    CHECK(y.at(2)[0] == 0);
    CHECK(y.at(3)[0] == -2);
    CHECK(y == simulate(p));
}

TEST_CASE("nilpotent 2x2 pair with delay 2 matches the oracle") {
    Problem<Rational> p;
    p.dim = 2;
    p.delay = 2;
    p.horizon = 10;
    p.A = Mat<Rational>{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
    p.B = Mat<Rational>{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
    for (int t = -2; t <= 1; ++t) p.initial.push_back(Vec<Rational>{Rational(1), Rational(1)});
    p.forcing = Forcing<Rational>::zero_forcing();
    CHECK(solve_closed_form(p) == simulate(p));
}

TEST_CASE("closed form equals the oracle on random problems") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        Problem<Rational> p = random_problem(rng, 15);
        CHECK(solve_closed_form(p) == simulate(p));
    }
}

TEST_CASE("equation residual vanishes exactly") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        Problem<Rational> p = random_problem(rng, 12);
        Trajectory<Rational> y = solve_closed_form(p);
        for (int t = 0; t + 2 <= p.horizon; ++t) {
            Vec<Rational> residual = y.at(t + 2) - y.at(t + 1) * Rational(2) + y.at(t);
            residual += p.A * y.at(t);
            residual += p.B * y.at(t - p.delay);
            residual -= p.forcing.at(t, p.dim);
            CHECK(residual.is_zero());
        }
    }
}

TEST_CASE("history sign regression: the published plus sign diverges at t = 2") {
    Problem<Rational> p = scalar_example(10);
    Trajectory<Rational> reference = simulate(p);
    Trajectory<Rational> flipped = solve_closed_form(p, SolveOptions{HistorySign::plus});
    CHECK(flipped.at(0) == reference.at(0));
    CHECK(flipped.at(1) == reference.at(1));
    CHECK(flipped.at(2)[0] == 2);    // formula with "+"
    CHECK(reference.at(2)[0] == 0);  // oracle
    CHECK(flipped.at(2) != reference.at(2));
}

TEST_CASE("solution terms decompose the value") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        Problem<Rational> p = random_problem(rng, 10);
        Trajectory<Rational> y = solve_closed_form(p);
        for (int t : {0, 1, 4, 10}) {
            SolutionTerms<Rational> terms = solution_terms(p, t);
            CHECK(terms.total() == y.at(t));
        }
    }
}

TEST_CASE("zero forcing yields a zero forced term") {
    std::mt19937 rng(45);
    Problem<Rational> p = random_problem(rng, 8);
    p.forcing = Forcing<Rational>::zero_forcing();
    SolutionTerms<Rational> terms = solution_terms(p, 7);
    CHECK(terms.from_forcing.is_zero());
}

TEST_CASE("zero initial data isolates the forced term") {
    std::mt19937 rng(46);
    Problem<Rational> p = random_problem(rng, 8);
    p.forcing = Forcing<Rational>::constant(test_support::random_int_vector(rng, p.dim));
    for (auto& v : p.initial) v = Vec<Rational>::zero(p.dim);
    SolutionTerms<Rational> terms = solution_terms(p, 6);
    CHECK(terms.from_cosine.is_zero());
    CHECK(terms.from_sine.is_zero());
    CHECK(terms.from_history.is_zero());
    CHECK(terms.total() == terms.from_forcing);
    CHECK(terms.total() == simulate(p).at(6));
}

TEST_CASE("malformed problems are rejected") {
    Problem<Rational> p = scalar_example(10);

    Problem<Rational> bad = p;
    bad.initial.pop_back();
    CHECK_THROWS_WITH_AS(solve_closed_form(bad), "initial data must cover Z_{-m}^{1}",
                         std::invalid_argument);

    bad = p;
    bad.A = Mat<Rational>(2, 3);
    CHECK_THROWS_AS(solve_closed_form(bad), std::invalid_argument);

    bad = p;
    bad.horizon = 10;
    bad.forcing = Forcing<Rational>::table({Vec<Rational>{Rational(1)}});  // needs 9 entries
    CHECK_THROWS_AS(solve_closed_form(bad), std::invalid_argument);

    bad = p;
    bad.forcing = Forcing<Rational>::geometric(Vec<Rational>{Rational(1)}, Rational(0));
    CHECK_THROWS_AS(solve_closed_form(bad), std::invalid_argument);
}

TEST_CASE("f64 solve follows the rational path closely") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Problem<Rational> p = random_problem(rng, 20, -2, 2);
        Problem<double> pf;
        pf.dim = p.dim;
        pf.delay = p.delay;
        pf.horizon = p.horizon;
        pf.A = Mat<double>(p.dim, p.dim);
        pf.B = Mat<double>(p.dim, p.dim);
        for (int i = 0; i < p.dim; ++i)
            for (int j = 0; j < p.dim; ++j) {
                pf.A(i, j) = p.A(i, j).get_d();
                pf.B(i, j) = p.B(i, j).get_d();
            }
        for (const auto& v : p.initial) {
            Vec<double> w(p.dim);
            for (int i = 0; i < p.dim; ++i) w[i] = v[i].get_d();
            pf.initial.push_back(w);
        }
        pf.forcing = Forcing<double>::zero_forcing();
        p.forcing = Forcing<Rational>::zero_forcing();

        Trajectory<Rational> exact = solve_closed_form(p);
        Trajectory<double> approx = solve_closed_form(pf);
        for (int t = 0; t <= p.horizon; ++t)
            for (int i = 0; i < p.dim; ++i) {
                const double ref = exact.at(t)[i].get_d();
                CHECK(std::abs(approx.at(t)[i] - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
            }
    }
}
