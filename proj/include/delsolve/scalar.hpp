#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delsolve {

/// Arbitrary-precision integer, used for binomial coefficients and as the
/// numerator/denominator type of Rational.
using BigInt = mpz_class;

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator after canonicalization; every arithmetic result stays canonical.
using Rational = mpq_class;

enum class ScalarMode { rational, f64 };

inline const char* to_string(ScalarMode m) {
    return m == ScalarMode::rational ? "rational" : "f64";
}

/// Parses "p/q" or "n" (optionally signed decimal integers). Throws on
/// malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    Rational r;
    if (r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

/// "p/q" when the denominator is not 1, plain "n" otherwise.
inline std::string format_rational(const Rational& r) { return r.get_str(); }

/// Uniform hooks the templated numerics use for either scalar mode.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_long(long v) { return Rational(v); }
    static Rational from_bigint(const BigInt& v) { return Rational(v); }
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
    static double to_double(const Rational& v) { return v.get_d(); }
    static std::string to_string(const Rational& v) { return format_rational(v); }
    static constexpr ScalarMode mode = ScalarMode::rational;
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_long(long v) { return static_cast<double>(v); }
    static double from_bigint(const BigInt& v) { return v.get_d(); }
    static double abs(double v) { return v < 0 ? -v : v; }
    static double to_double(double v) { return v; }
    static std::string to_string(double v) {
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, end);
    }
    static constexpr ScalarMode mode = ScalarMode::f64;
};

/// base^e by repeated multiplication, e >= 0. scalar_pow(x, 0) == 1 for any x.
template <typename S>
S scalar_pow(const S& base, int exponent) {
    S acc = scalar_traits<S>::one();
    for (int k = 0; k < exponent; ++k) acc *= base;
    return acc;
}

}  // namespace delsolve
