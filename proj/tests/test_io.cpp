#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delsolve/io.hpp"
#include "test_support.hpp"

using namespace delsolve;

namespace {

json minimal_scalar_doc() {
    return json::parse(R"({
        "d": 1, "m": 1,
        "A": [[0]], "B": [[1]],
        "phi": {"-1": [1], "0": [1], "1": [1]},
        "forcing": {"kind": "zero"},
        "horizon": 10,
        "mode": "rational"
    })");
}

}  // namespace

TEST_CASE("minimal scalar problem file parses") {
    ProblemFile file = parse_problem(minimal_scalar_doc(), "test");
    CHECK(file.mode == ScalarMode::rational);
    CHECK(file.exact.dim == 1);
    CHECK(file.exact.delay == 1);
    CHECK(file.exact.horizon == 10);
    CHECK(file.exact.A(0, 0) == 0);
    CHECK(file.exact.B(0, 0) == 1);
    CHECK(file.exact.phi(-1)[0] == 1);
    CHECK(file.exact.forcing.kind == Forcing<Rational>::Kind::zero);
}

TEST_CASE("phi must cover exactly Z_{-m}^{1}") {
    json doc = minimal_scalar_doc();
    doc["phi"].erase("0");
    CHECK_THROWS_WITH_AS(parse_problem(doc, "test"),
                         "test: initial data must cover Z_{-m}^{1}", ParseError);

    doc = minimal_scalar_doc();
    doc["phi"]["2"] = json::array({1});  // extra key
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);
}

TEST_CASE("non-square coefficient matrices are rejected") {
    json doc = minimal_scalar_doc();
    doc["A"] = json::parse("[[0, 1]]");  // 1x2
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);

    doc = minimal_scalar_doc();
    doc["d"] = 2;  // d mismatch against 1x1 matrices
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);
}

TEST_CASE("unknown forcing kinds and malformed rationals are rejected") {
    json doc = minimal_scalar_doc();
    doc["forcing"]["kind"] = "sinusoidal";
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);

    doc = minimal_scalar_doc();
    doc["A"][0][0] = "1/0";
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);

    doc = minimal_scalar_doc();
    doc["A"][0][0] = "not-a-number";
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);
}

TEST_CASE("mode gates which literal shapes are accepted") {
    json doc = minimal_scalar_doc();
    doc["A"][0][0] = 0.5;  // float literal in rational mode
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);

    doc["mode"] = "f64";
    ProblemFile file = parse_problem(doc, "test");
    CHECK(file.mode == ScalarMode::f64);
    CHECK(file.exact.A(0, 0) == test_support::frac(1, 2));  // lossless dyadic lift
    CHECK(to_f64(file.exact).A(0, 0) == 0.5);

    doc["B"][0][0] = "2/3";  // rational string in f64 mode
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);
}

TEST_CASE("problem JSON round-trips exactly") {
    json doc = minimal_scalar_doc();
    doc["A"][0][0] = "-7/3";
    doc["forcing"] = json::parse(R"({"kind": "geometric", "b1": ["1/2"], "b2": 2})");
    ProblemFile file = parse_problem(doc, "test");
    json emitted = problem_to_json(file);
    ProblemFile reparsed = parse_problem(emitted, "round-trip");
    CHECK(problem_to_json(reparsed) == emitted);
    CHECK(reparsed.exact.A(0, 0) == test_support::frac(-7, 3));
    CHECK(reparsed.exact.forcing.geometric_ratio == 2);
    CHECK(reparsed.mode == file.mode);

    // Deterministic: identical inputs yield byte-identical output.
    CHECK(emitted.dump(2) == problem_to_json(parse_problem(doc, "test")).dump(2));
}

TEST_CASE("table forcing parses and validates length") {
    json doc = minimal_scalar_doc();
    doc["forcing"] = json::parse(R"({"kind": "table", "values": [[1],[2],[3]]})");
    doc["horizon"] = 4;  // needs 3 entries
    ProblemFile file = parse_problem(doc, "test");
    CHECK(file.exact.forcing.table_values.size() == 3);

    doc["horizon"] = 12;
    CHECK_THROWS_AS(parse_problem(doc, "test"), ParseError);
}

TEST_CASE("fixed-point decimal rendering of rationals") {
    CHECK(format_rational_decimal(test_support::frac(1, 3), 4) == "0.3333");
    CHECK(format_rational_decimal(test_support::frac(-2, 3), 4) == "-0.6667");
    CHECK(format_rational_decimal(Rational(5), 4) == "5.0000");
    CHECK(format_rational_decimal(test_support::frac(3, 2), 0) == "2");    // ties away
    CHECK(format_rational_decimal(test_support::frac(-3, 2), 0) == "-2");
    CHECK(format_rational_decimal(test_support::frac(1, 4), 1) == "0.3");
    CHECK(format_rational_decimal(Rational(0), 2) == "0.00");
}

TEST_CASE("trajectory CSV layout") {
    Problem<Rational> p = test_support::scalar_example(4);
    Trajectory<Rational> y = simulate(p);
    const std::string csv = trajectory_to_csv(y);
    CHECK(csv ==
          "t,y1\n"
          "-1,1\n"
          "0,1\n"
          "1,1\n"
          "2,0\n"
          "3,-2\n"
          "4,-5\n");
    const std::string decimals = trajectory_to_csv(y, 2);
    CHECK(decimals.find("3,-2.00\n") != std::string::npos);
}

TEST_CASE("trajectory JSON carries the window and exact strings") {
    Problem<Rational> p = test_support::scalar_example(3);
    json doc = trajectory_to_json(simulate(p));
    CHECK(doc["t_min"] == -1);
    CHECK(doc["t_max"] == 3);
    CHECK(doc["values"].size() == 5);
    CHECK(doc["values"][4][0] == "-2");
}

TEST_CASE("verification report JSON shape") {
    VerificationReport<Rational> report = verify(test_support::scalar_example(8));
    json doc = report_to_json(report);
    CHECK(doc["mode"] == "rational");
    CHECK(doc["passed"] == true);
    CHECK(doc["exact_equal"] == true);
    CHECK(doc["max_abs_discrepancy"] == "0");
    CHECK(doc["first_divergence_t"].is_null());
    CHECK(doc["identity_checks"].size() == 4);
    CHECK(doc["bound_checks"].size() == 2);
    for (const auto& c : doc["identity_checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("missing file and bad JSON report context") {
    CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), ParseError);
    try {
        load_problem("/nonexistent/problem.json");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("/nonexistent/problem.json") != std::string::npos);
    }
}
