#ifndef REGBLOCK_UNIVAR_HPP
#define REGBLOCK_UNIVAR_HPP

#include <algorithm>
#include <cassert>
#include <complex>
#include <utility>
#include <vector>

#include "regblock/rational.hpp"

namespace regblock {

/// Dense univariate polynomial over T, coefficients by ascending degree.
/// Invariant: leading coefficient nonzero unless the polynomial is zero
/// (empty coefficient vector).
template <class T>
class UnivarPoly {
public:
    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<T> c) : c_(std::move(c)) { normalize(); }
    static UnivarPoly monomial(int deg, const T& coef) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = coef;
        return UnivarPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const T& leading() const { return c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : T(0); }

    void set_coeff(int k, const T& v) {
        if (k >= (int)c_.size()) c_.resize(k + 1, T(0));
        c_[k] = v;
        normalize();
    }

    template <class X>
    X eval(const X& x) const {
        X r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + X(*it);
        return r;
    }

    UnivarPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<int>(k));
        return UnivarPoly(std::move(d));
    }

    friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return UnivarPoly(std::move(c));
    }
    friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
        return UnivarPoly(std::move(c));
    }
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UnivarPoly(std::move(c));
    }
    friend UnivarPoly operator*(const T& s, const UnivarPoly& a) {
        std::vector<T> c(a.c_);
        for (auto& x : c) x *= s;
        return UnivarPoly(std::move(c));
    }
    friend UnivarPoly operator-(const UnivarPoly& a) { return T(-1) * a; }
    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; requires a field coefficient type.
    static std::pair<UnivarPoly, UnivarPoly> divrem(UnivarPoly a, const UnivarPoly& b) {
        assert(!b.is_zero());
        std::vector<T> q;
        if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, T(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const int k = a.degree() - b.degree();
            const T f = a.leading() / b.leading();
            q[k] = f;
            std::vector<T> r = a.c_;
            for (int i = 0; i <= b.degree(); ++i) r[i + k] -= f * b.c_[i];
            r.pop_back();
            a = UnivarPoly(std::move(r));
        }
        return {UnivarPoly(std::move(q)), a};
    }

    UnivarPoly monic() const {
        if (is_zero()) return {};
        return (T(1) / leading()) * *this;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using QPoly = UnivarPoly<Rational>;

inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = QPoly::divrem(a, b);
        a = b;
        b = r;
    }
    return a.monic().is_zero() ? a : a.monic();
}

/// Yun's squarefree decomposition: p = prod f_i^i with f_i squarefree,
/// pairwise coprime. Returns the f_i (index 0 holds multiplicity 1).
inline std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
    std::vector<QPoly> out;
    if (p.degree() <= 0) return out;
    QPoly a = p.monic();
    QPoly g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back(a);
        return out;
    }
    QPoly b = QPoly::divrem(a, g).first;
    QPoly c = QPoly::divrem(a.derivative(), g).first;
    QPoly d = c - b.derivative();
    while (!(b.degree() == 0)) {
        QPoly f = gcd(b, d);
        out.push_back(f.degree() > 0 ? f : QPoly::monomial(0, Rational(1)));
        b = QPoly::divrem(b, f.degree() > 0 ? f : QPoly::monomial(0, Rational(1))).first;
        c = QPoly::divrem(d, f.degree() > 0 ? f : QPoly::monomial(0, Rational(1))).first;
        d = c - b.derivative();
    }
    // trim trailing constant factors
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

/// Sturm chain of a squarefree polynomial.
inline std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> s;
    s.push_back(p);
    s.push_back(p.derivative());
    while (!s.back().is_zero()) {
        const auto& a = s[s.size() - 2];
        const auto& b = s.back();
        auto r = QPoly::divrem(a, b).second;
        s.push_back(-r);
    }
    s.pop_back();
    return s;
}

inline int sign_variations_at(const std::vector<QPoly>& chain, const Rational& x) {
    int var = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sign(p.eval(x));
        if (s != 0) {
            if (last != 0 && s != last) ++var;
            last = s;
        }
    }
    return var;
}

/// Number of distinct real roots of a squarefree p in (a, b].
inline int sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

/// Cauchy bound: all real roots lie in (-B, B).
inline Rational root_bound(const QPoly& p) {
    Rational m = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Rational a = boost::multiprecision::abs(p.coeff(k) / p.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

struct RootInterval {
    Rational lo, hi;  // lo < root <= hi, or lo == hi for an exact root
    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
};

/// Isolating intervals for the distinct real roots of a squarefree p,
/// sorted ascending. Intervals are (lo, hi] with exactly one root each.
inline std::vector<RootInterval> real_root_isolation(const QPoly& p) {
    std::vector<RootInterval> out;
    if (p.degree() <= 0) return out;
    const auto chain = sturm_chain(p);
    const Rational B = root_bound(p);
    struct Seg {
        Rational a, b;
        int n;
    };
    std::vector<Seg> stack{{-B, B, sturm_count(chain, -B, B)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        const Rational m = (s.a + s.b) / 2;
        if (p.eval(m) == 0) {
            out.push_back({m, m});
            // shrink around the exact root so the halves exclude it
            const Rational w = (s.b - s.a) / 4;
            Rational ml = m - w, mr = m + w;
            while (p.eval(ml) == 0) ml = (s.a + ml) / 2;
            while (p.eval(mr) == 0) mr = (mr + s.b) / 2;
            stack.push_back({s.a, ml, sturm_count(chain, s.a, ml)});
            stack.push_back({mr, s.b, sturm_count(chain, mr, s.b)});
        } else {
            stack.push_back({s.a, m, sturm_count(chain, s.a, m)});
            stack.push_back({m, s.b, sturm_count(chain, m, s.b)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

/// Bisect an isolating interval until its width is below `width`.
inline RootInterval refine_root(const QPoly& p, RootInterval iv, const Rational& width) {
    if (iv.exact()) return iv;
    const int slo = sign(p.eval(iv.lo));
    while (iv.hi - iv.lo > width) {
        const Rational m = iv.mid();
        const int sm = sign(p.eval(m));
        if (sm == 0) return {m, m};
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

/// Exact rational root of a squarefree p inside an isolating interval, if any.
inline std::optional<Rational> rational_root_in(const QPoly& p, const RootInterval& iv) {
    if (iv.exact()) return iv.lo;
    // clear denominators: integer polynomial, candidates num|a0, den|an
    Integer lcm = 1;
    for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, den(c));
    std::vector<Integer> ic;
    for (const auto& c : p.coeffs()) ic.push_back(num(c * Rational(lcm)));
    while (!ic.empty() && ic.front() == 0) {
        // root at 0 handled by candidate list below only if a0 != 0; check directly
        if (iv.lo < 0 && 0 <= iv.hi && p.eval(Rational(0)) == 0) return Rational(0);
        break;
    }
    auto divisors = [](Integer n) {
        n = boost::multiprecision::abs(n);
        std::vector<Integer> d;
        for (Integer i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                d.push_back(n / i);
            }
        return d;
    };
    if (ic.empty()) return std::nullopt;
    Integer a0 = ic.front(), an = ic.back();
    if (a0 == 0) {
        if (iv.lo < 0 && 0 <= iv.hi) return Rational(0);
        // divide out x and retry on the cofactor's constant term
        size_t k = 0;
        while (k < ic.size() && ic[k] == 0) ++k;
        a0 = ic[k];
    }
    if (boost::multiprecision::abs(a0) > Integer(1) << 64) return std::nullopt;  // not worth it
    for (const auto& nn : divisors(a0))
        for (const auto& dd : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s * nn, dd);
                if (iv.lo < cand && cand <= iv.hi && p.eval(cand) == 0) return cand;
            }
        }
    return std::nullopt;
}

}  // namespace regblock

#endif
