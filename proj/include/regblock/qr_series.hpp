#ifndef REGBLOCK_QR_SERIES_HPP
#define REGBLOCK_QR_SERIES_HPP

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "regblock/errors.hpp"
#include "regblock/rational.hpp"

namespace regblock {

/// Truncated series sum c * x^e * (ln x)^l with rational exponents e > 0
/// strictly increasing and polynomial log parts; the common asymptotic
/// scale of Dulac maps and block maps near x = 0+.
class QuasiRegularSeries {
public:
    struct TermKey {
        Rational exp;
        int logdeg;
        bool operator<(const TermKey& o) const {
            if (exp != o.exp) return exp < o.exp;
            return logdeg < o.logdeg;
        }
    };

    QuasiRegularSeries() = default;
    explicit QuasiRegularSeries(Rational truncation) : trunc_(std::move(truncation)) {}

    static QuasiRegularSeries monomial(const Rational& e, double c, const Rational& trunc) {
        QuasiRegularSeries s(trunc);
        s.add(e, 0, c);
        return s;
    }
    static QuasiRegularSeries identity(const Rational& trunc) {
        return monomial(Rational(1), 1.0, trunc);
    }

    const Rational& truncation() const { return trunc_; }
    bool empty() const { return t_.empty(); }
    const std::map<TermKey, double>& terms() const { return t_; }

    void add(const Rational& e, int l, double c) {
        if (c == 0.0 || e > trunc_) return;
        auto key = TermKey{e, l};
        auto it = t_.find(key);
        if (it == t_.end())
            t_.emplace(key, c);
        else {
            it->second += c;
            if (it->second == 0.0) t_.erase(it);
        }
    }

    double coeff(const Rational& e, int l) const {
        auto it = t_.find({e, l});
        return it == t_.end() ? 0.0 : it->second;
    }

    /// Leading term (smallest exponent; among equal exponents the log-free
    /// entry must dominate for a quasi-regular homeomorphism).
    TermKey leading_key() const {
        if (t_.empty()) throw Error("empty series has no leading term");
        return t_.begin()->first;
    }
    double leading_coeff() const { return t_.begin()->second; }

    bool is_homeomorphism_germ() const {
        if (t_.empty()) return false;
        const auto& k = t_.begin()->first;
        return k.logdeg == 0 && t_.begin()->second > 0;
    }

    double eval(double x) const {
        double s = 0;
        const double lx = std::log(x);
        for (const auto& [k, c] : t_) s += c * std::pow(x, to_double(k.exp)) * std::pow(lx, k.logdeg);
        return s;
    }

    friend QuasiRegularSeries operator+(const QuasiRegularSeries& a, const QuasiRegularSeries& b) {
        QuasiRegularSeries r(std::min(a.trunc_, b.trunc_));
        for (const auto& [k, c] : a.t_) r.add(k.exp, k.logdeg, c);
        for (const auto& [k, c] : b.t_) r.add(k.exp, k.logdeg, c);
        return r;
    }
    friend QuasiRegularSeries operator*(const QuasiRegularSeries& a, const QuasiRegularSeries& b) {
        // truncation of a product of series with positive exponents: keep the
        // tighter window (valid since every term has exponent > 0)
        QuasiRegularSeries r(std::min(a.trunc_, b.trunc_));
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) r.add(ka.exp + kb.exp, ka.logdeg + kb.logdeg, ca * cb);
        return r;
    }
    friend QuasiRegularSeries operator*(double s, const QuasiRegularSeries& a) {
        QuasiRegularSeries r(a.trunc_);
        for (const auto& [k, c] : a.t_) r.add(k.exp, k.logdeg, s * c);
        return r;
    }

private:
    std::map<TermKey, double> t_;
    Rational trunc_ = Rational(0);
};

namespace detail {

/// Relative series: terms with exponent >= 0, constant term allowed; used for
/// (1 + s) manipulations inside composition. Represented with the same type.
inline QuasiRegularSeries qr_log1p(const QuasiRegularSeries& s, const Rational& trunc) {
    // log(1 + s) for a series s with strictly positive exponents
    QuasiRegularSeries out(trunc);
    QuasiRegularSeries pw = QuasiRegularSeries::monomial(Rational(0), 1.0, trunc);
    // max power needed: trunc / min exponent
    if (s.empty()) return out;
    const Rational emin = s.leading_key().exp;
    const long kmax = emin > 0 ? static_cast<long>(to_double(trunc / emin)) + 1 : 1;
    double sgn = 1.0;
    for (long k = 1; k <= kmax; ++k) {
        pw = pw * s;
        if (pw.empty()) break;
        out = out + (sgn / static_cast<double>(k)) * pw;
        sgn = -sgn;
    }
    return out;
}

inline QuasiRegularSeries qr_binom(const QuasiRegularSeries& s, double e, const Rational& trunc) {
    // (1 + s)^e for a series s with strictly positive exponents
    QuasiRegularSeries out = QuasiRegularSeries::monomial(Rational(0), 1.0, trunc);
    if (s.empty()) return out;
    QuasiRegularSeries pw = QuasiRegularSeries::monomial(Rational(0), 1.0, trunc);
    const Rational emin = s.leading_key().exp;
    const long kmax = emin > 0 ? static_cast<long>(to_double(trunc / emin)) + 1 : 1;
    double binom = 1.0;
    for (long k = 1; k <= kmax; ++k) {
        binom *= (e - static_cast<double>(k - 1)) / static_cast<double>(k);
        pw = pw * s;
        if (pw.empty()) break;
        out = out + binom * pw;
    }
    return out;
}

}  // namespace detail

/// Composition outer(inner) in the quasi-regular algebra. The inner series
/// must be a quasi-regular homeomorphism germ (positive constant leading
/// coefficient, no leading log).
inline QuasiRegularSeries qr_compose(const QuasiRegularSeries& outer,
                                     const QuasiRegularSeries& inner) {
    if (!inner.is_homeomorphism_germ())
        throw NotHomeomorphism("inner series is not a quasi-regular homeomorphism germ");
    const Rational e1 = inner.leading_key().exp;
    const double a = inner.leading_coeff();
    // valid output truncation: outer truncation maps to exponent trunc_out*e1;
    // inner truncation enters through relative corrections.
    const Rational trunc = std::min(inner.truncation(), outer.truncation() * e1);
    // relative correction s with inner = a x^{e1} (1 + s)
    QuasiRegularSeries s(trunc);
    bool first = true;
    for (const auto& [k, c] : inner.terms()) {
        if (first) {
            first = false;
            continue;
        }
        s.add(k.exp - e1, k.logdeg, c / a);
    }
    const QuasiRegularSeries ln1p = detail::qr_log1p(s, trunc);
    const double ln_a = std::log(a);
    QuasiRegularSeries out(trunc);
    for (const auto& [k, c] : outer.terms()) {
        const double e = to_double(k.exp);
        // inner^e = a^e x^{e*e1} (1+s)^e
        QuasiRegularSeries piece = detail::qr_binom(s, e, trunc);
        piece = (c * std::pow(a, e)) * piece;
        // (ln inner)^l = (ln a + e1 ln x + ln(1+s))^l
        for (int l = 0; l < k.logdeg; ++l) {
            QuasiRegularSeries lnin(trunc);
            lnin.add(Rational(0), 0, ln_a);
            lnin.add(Rational(0), 1, to_double(e1));
            lnin = lnin + ln1p;
            piece = piece * lnin;
        }
        // shift exponents by e * e1
        QuasiRegularSeries shifted(trunc);
        for (const auto& [kk, cc] : piece.terms()) shifted.add(kk.exp + k.exp * e1, kk.logdeg, cc);
        out = out + shifted;
    }
    return out;
}

inline QuasiRegularSeries qr_scale(const QuasiRegularSeries& f, double s) { return s * f; }

/// Compositional inverse of a homeomorphism germ f = a x^{e}(1 + ...):
/// iterative refinement g_{n+1} = g_n + (x - f(g_n)) / (a e x^{e-1}-ish);
/// here computed by fixed-point on the relative series.
inline QuasiRegularSeries qr_invert(const QuasiRegularSeries& f) {
    if (!f.is_homeomorphism_germ()) throw NotHomeomorphism("cannot invert a non-homeomorphism");
    const Rational e1 = f.leading_key().exp;
    const double a = f.leading_coeff();
    const Rational trunc = f.truncation() / e1;
    // ansatz g = (x/a)^{1/e1} (1 + t); iterate t by composing
    const double ie = 1.0 / to_double(e1);
    QuasiRegularSeries g =
        QuasiRegularSeries::monomial(Rational(1) / e1, std::pow(a, -ie), trunc);
    for (int it = 0; it < 40; ++it) {
        // residual r = f(g) - x
        QuasiRegularSeries fg = qr_compose(f, g);
        QuasiRegularSeries resid = fg + (-1.0) * QuasiRegularSeries::identity(fg.truncation());
        if (resid.empty()) break;
        // Newton-like: g -= resid(g-pulled-back) / f'(x)... first order with
        // the leading behaviour f ~ a x^{e1}: dg = -resid^{through g} * g-scale:
        // use g(x) correction: delta(x) = -(1/(a e1)) x^{1/e1 - 1} * resid-at-x
        // expressed via composition: delta = -(1/e1) * (g/x) * resid? simplest:
        // delta(x) = - resid(x) * (dg/dx approx) = - resid * d/dx[(x/a)^{1/e1}]
        QuasiRegularSeries delta(trunc);
        for (const auto& [k, c] : resid.terms()) {
            // multiply by ie * a^{-ie} x^{ie-1}
            delta.add(k.exp + Rational(1) / e1 - 1, k.logdeg, -c * ie * std::pow(a, -ie));
        }
        if (delta.empty()) break;
        g = g + delta;
    }
    return g;
}

}  // namespace regblock

#endif
