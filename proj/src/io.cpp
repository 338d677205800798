#include "delsolve/io.hpp"

#include <fstream>

namespace delsolve {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& message) {
    throw ParseError(context + ": " + message);
}

Rational scalar_from_json(const json& v, ScalarMode mode, const std::string& context,
                          const std::string& where) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<int64_t>()));
    if (v.is_string()) {
        if (mode != ScalarMode::rational)
            fail(context, where + ": rational literals are only valid in rational mode");
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(context, where + ": " + e.what());
        }
    }
    if (v.is_number_float()) {
        if (mode != ScalarMode::f64)
            fail(context, where + ": non-integer numbers are only valid in f64 mode");
        Rational r;
        mpq_set_d(r.get_mpq_t(), v.get<double>());  // exact binary lift
        return r;
    }
    fail(context, where + ": expected an integer, \"p/q\" string, or (f64 mode) number");
}

Vec<Rational> vector_from_json(const json& v, int dim, ScalarMode mode,
                               const std::string& context, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
        fail(context, where + ": expected an array of " + std::to_string(dim) + " entries");
    Vec<Rational> out(dim);
    for (int i = 0; i < dim; ++i)
        out[i] = scalar_from_json(v[static_cast<size_t>(i)], mode, context,
                                  where + "[" + std::to_string(i) + "]");
    return out;
}

Mat<Rational> matrix_from_json(const json& v, int dim, ScalarMode mode,
                               const std::string& context, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
        fail(context, where + ": expected " + std::to_string(dim) + " rows");
    Mat<Rational> out(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = v[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            fail(context, where + ": row " + std::to_string(i) + " must have " +
                              std::to_string(dim) + " entries");
        for (int j = 0; j < dim; ++j)
            out(i, j) = scalar_from_json(row[static_cast<size_t>(j)], mode, context,
                                         where + "[" + std::to_string(i) + "][" +
                                             std::to_string(j) + "]");
    }
    return out;
}

const json& require_key(const json& doc, const char* key, const std::string& context) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(context, std::string("missing required key \"") + key + "\"");
    return *it;
}

int int_from_json(const json& v, const std::string& context, const std::string& where) {
    if (!v.is_number_integer()) fail(context, where + ": expected an integer");
    return v.get<int>();
}

}  // namespace

ProblemFile parse_problem(const json& doc, const std::string& context) {
    if (!doc.is_object()) fail(context, "problem file must be a JSON object");

    ProblemFile file;
    if (auto it = doc.find("mode"); it != doc.end()) {
        const std::string mode = it->get<std::string>();
        if (mode == "rational")
            file.mode = ScalarMode::rational;
        else if (mode == "f64")
            file.mode = ScalarMode::f64;
        else
            fail(context, "unknown mode \"" + mode + "\" (expected \"rational\" or \"f64\")");
    }

    Problem<Rational>& p = file.exact;
    p.dim = int_from_json(require_key(doc, "d", context), context, "d");
    p.delay = int_from_json(require_key(doc, "m", context), context, "m");
    p.horizon = int_from_json(require_key(doc, "horizon", context), context, "horizon");
    if (p.dim < 1) fail(context, "d must be >= 1");
    if (p.delay < 1) fail(context, "m must be >= 1");
    if (p.horizon < 1) fail(context, "horizon must be >= 1");

    p.A = matrix_from_json(require_key(doc, "A", context), p.dim, file.mode, context, "A");
    p.B = matrix_from_json(require_key(doc, "B", context), p.dim, file.mode, context, "B");

    const json& phi = require_key(doc, "phi", context);
    if (!phi.is_object()) fail(context, "phi must map \"-m\"..\"1\" to vectors");
    if (static_cast<int>(phi.size()) != p.delay + 2)
        fail(context, "initial data must cover Z_{-m}^{1}");
    p.initial.clear();
    for (int t = -p.delay; t <= 1; ++t) {
        const std::string key = std::to_string(t);
        auto it = phi.find(key);
        if (it == phi.end()) fail(context, "initial data must cover Z_{-m}^{1}");
        p.initial.push_back(
            vector_from_json(*it, p.dim, file.mode, context, "phi[\"" + key + "\"]"));
    }

    if (auto it = doc.find("forcing"); it != doc.end()) {
        const json& f = *it;
        const std::string kind = require_key(f, "kind", context).get<std::string>();
        if (kind == "zero") {
            p.forcing = Forcing<Rational>::zero_forcing();
        } else if (kind == "constant") {
            p.forcing = Forcing<Rational>::constant(vector_from_json(
                require_key(f, "c", context), p.dim, file.mode, context, "forcing.c"));
        } else if (kind == "geometric") {
            Vec<Rational> scale = vector_from_json(require_key(f, "b1", context), p.dim,
                                                   file.mode, context, "forcing.b1");
            Rational ratio = scalar_from_json(require_key(f, "b2", context), file.mode,
                                              context, "forcing.b2");
            p.forcing = Forcing<Rational>::geometric(std::move(scale), std::move(ratio));
        } else if (kind == "table") {
            const json& values = require_key(f, "values", context);
            if (!values.is_array()) fail(context, "forcing.values must be an array of vectors");
            std::vector<Vec<Rational>> table;
            table.reserve(values.size());
            for (size_t i = 0; i < values.size(); ++i)
                table.push_back(vector_from_json(values[i], p.dim, file.mode, context,
                                                 "forcing.values[" + std::to_string(i) + "]"));
            p.forcing = Forcing<Rational>::table(std::move(table));
        } else {
            fail(context, "unknown forcing kind \"" + kind + "\"");
        }
    }

    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        fail(context, e.what());
    }
    return file;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_problem(doc, path);
}

json problem_to_json(const ProblemFile& file) {
    const bool exact_mode = file.mode == ScalarMode::rational;
    auto scalar = [&](const Rational& r) -> json {
        if (exact_mode) return format_rational(r);
        return r.get_d();
    };
    auto vector = [&](const Vec<Rational>& v) {
        json out = json::array();
        for (int i = 0; i < v.dim(); ++i) out.push_back(scalar(v[i]));
        return out;
    };
    auto matrix = [&](const Mat<Rational>& m) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(scalar(m(i, j)));
            rows.push_back(std::move(row));
        }
        return rows;
    };

    const Problem<Rational>& p = file.exact;
    json out;
    out["d"] = p.dim;
    out["m"] = p.delay;
    out["A"] = matrix(p.A);
    out["B"] = matrix(p.B);
    json phi;
    for (int t = -p.delay; t <= 1; ++t) phi[std::to_string(t)] = vector(p.phi(t));
    out["phi"] = std::move(phi);
    json forcing;
    switch (p.forcing.kind) {
        case Forcing<Rational>::Kind::zero:
            forcing["kind"] = "zero";
            break;
        case Forcing<Rational>::Kind::constant:
            forcing["kind"] = "constant";
            forcing["c"] = vector(p.forcing.constant_value);
            break;
        case Forcing<Rational>::Kind::geometric:
            forcing["kind"] = "geometric";
            forcing["b1"] = vector(p.forcing.geometric_scale);
            forcing["b2"] = scalar(p.forcing.geometric_ratio);
            break;
        case Forcing<Rational>::Kind::table: {
            forcing["kind"] = "table";
            json values = json::array();
            for (const auto& v : p.forcing.table_values) values.push_back(vector(v));
            forcing["values"] = std::move(values);
            break;
        }
    }
    out["forcing"] = std::move(forcing);
    out["horizon"] = p.horizon;
    out["mode"] = to_string(file.mode);
    return out;
}

Problem<double> to_f64(const Problem<Rational>& p) {
    Problem<double> out;
    out.dim = p.dim;
    out.delay = p.delay;
    out.horizon = p.horizon;
    out.A = Mat<double>(p.dim, p.dim);
    out.B = Mat<double>(p.dim, p.dim);
    for (int i = 0; i < p.dim; ++i)
        for (int j = 0; j < p.dim; ++j) {
            out.A(i, j) = p.A(i, j).get_d();
            out.B(i, j) = p.B(i, j).get_d();
        }
    auto vec = [](const Vec<Rational>& v) {
        Vec<double> r(v.dim());
        for (int i = 0; i < v.dim(); ++i) r[i] = v[i].get_d();
        return r;
    };
    for (const auto& v : p.initial) out.initial.push_back(vec(v));
    out.forcing.kind = static_cast<Forcing<double>::Kind>(p.forcing.kind);
    switch (p.forcing.kind) {
        case Forcing<Rational>::Kind::zero:
            break;
        case Forcing<Rational>::Kind::constant:
            out.forcing.constant_value = vec(p.forcing.constant_value);
            break;
        case Forcing<Rational>::Kind::geometric:
            out.forcing.geometric_scale = vec(p.forcing.geometric_scale);
            out.forcing.geometric_ratio = p.forcing.geometric_ratio.get_d();
            break;
        case Forcing<Rational>::Kind::table:
            for (const auto& v : p.forcing.table_values)
                out.forcing.table_values.push_back(vec(v));
            break;
    }
    return out;
}

std::string format_rational_decimal(const Rational& r, int digits) {
    detail::check(digits >= 0, "decimal digits must be nonnegative");
    BigInt num = r.get_num();
    const BigInt den = r.get_den();  // canonical: always positive
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled = num * scale, quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
                den.get_mpz_t());
    if (remainder * 2 >= den) quotient += 1;  // round to nearest, ties away from zero

    BigInt whole = quotient / scale, frac = quotient % scale;
    std::string out;
    if (negative && quotient != 0) out += "-";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

}  // namespace delsolve
