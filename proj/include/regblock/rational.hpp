#ifndef REGBLOCK_RATIONAL_HPP
#define REGBLOCK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace regblock {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline Rational rat_pow(Rational base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        base = Rational(den(base), num(base));
        e = -e;
    }
    Rational r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline int sign(const Rational& q) { return q.sign(); }

/// Parse "a/b", "a", "-a/b" with optional surrounding spaces.
inline Rational parse_rational(const std::string& s) {
    auto trim = [](std::string t) {
        const auto b = t.find_first_not_of(" \t");
        const auto e = t.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return t.substr(b, e - b + 1);
    };
    const std::string t = trim(s);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(t));
        Integer n(trim(t.substr(0, slash)));
        Integer d(trim(t.substr(slash + 1)));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

/// A real quantity that is exact when the source data allows it.
struct ExactReal {
    double approx = 0.0;
    std::optional<Rational> exact;

    ExactReal() = default;
    ExactReal(double a) : approx(a) {}                                   // NOLINT
    ExactReal(const Rational& q) : approx(to_double(q)), exact(q) {}     // NOLINT

    bool is_exact() const { return exact.has_value(); }
};

}  // namespace regblock

#endif
