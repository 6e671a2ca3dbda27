#ifndef REGBLOCK_BIVAR_HPP
#define REGBLOCK_BIVAR_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "regblock/univar.hpp"

namespace regblock {

/// Sparse bivariate polynomial: (x-exponent, y-exponent) -> coefficient.
/// Zero coefficients are never stored.
template <class T>
class BivarPoly {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, T>;

    BivarPoly() = default;
    BivarPoly(std::initializer_list<std::pair<Key, T>> init) {
        for (const auto& [k, v] : init) add(k.first, k.second, v);
    }

    const Map& monomials() const { return m_; }
    bool is_zero() const { return m_.empty(); }

    void add(int i, int j, const T& v) {
        if (v == T(0)) return;
        auto it = m_.find({i, j});
        if (it == m_.end()) {
            m_.emplace(Key{i, j}, v);
        } else {
            it->second += v;
            if (it->second == T(0)) m_.erase(it);
        }
    }
    T coeff(int i, int j) const {
        auto it = m_.find({i, j});
        return it == m_.end() ? T(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [k, v] : m_) d = std::max(d, k.first + k.second);
        return d;
    }
    /// Lowest total degree of a nonzero monomial (-1 for the zero polynomial).
    int low_degree() const {
        int d = -1;
        for (const auto& [k, v] : m_) {
            const int t = k.first + k.second;
            if (d < 0 || t < d) d = t;
        }
        return d;
    }

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        for (const auto& [k, v] : b.m_) r.add(k.first, k.second, v);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        for (const auto& [k, v] : b.m_) r.add(k.first, k.second, -v);
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (const auto& [ka, va] : a.m_)
            for (const auto& [kb, vb] : b.m_)
                r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    friend BivarPoly operator*(const T& s, const BivarPoly& a) {
        BivarPoly r;
        for (const auto& [k, v] : a.m_) r.add(k.first, k.second, s * v);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& a) { return T(-1) * a; }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.m_ == b.m_; }

    template <class X>
    X eval(const X& x, const X& y) const {
        X r(0);
        for (const auto& [k, v] : m_) {
            X t(v);
            for (int i = 0; i < k.first; ++i) t *= x;
            for (int j = 0; j < k.second; ++j) t *= y;
            r += t;
        }
        return r;
    }

    BivarPoly dx() const {
        BivarPoly r;
        for (const auto& [k, v] : m_)
            if (k.first > 0) r.add(k.first - 1, k.second, v * T(k.first));
        return r;
    }
    BivarPoly dy() const {
        BivarPoly r;
        for (const auto& [k, v] : m_)
            if (k.second > 0) r.add(k.first, k.second - 1, v * T(k.second));
        return r;
    }

    /// P(1, t) (or P(t, 1) with on_x=false) as a univariate polynomial.
    UnivarPoly<T> restrict_line(bool x_is_one) const {
        std::vector<T> c;
        for (const auto& [k, v] : m_) {
            const int d = x_is_one ? k.second : k.first;
            if (d >= static_cast<int>(c.size())) c.resize(d + 1, T(0));
            c[d] += v;
        }
        return UnivarPoly<T>(std::move(c));
    }

    /// Substitute x -> a x + b y, y -> c x + d y.
    BivarPoly linear_substitute(const T& a, const T& b, const T& c, const T& d) const {
        BivarPoly r;
        BivarPoly lx, ly;
        lx.add(1, 0, a);
        lx.add(0, 1, b);
        ly.add(1, 0, c);
        ly.add(0, 1, d);
        for (const auto& [k, v] : m_) {
            BivarPoly t;
            t.add(0, 0, v);
            for (int i = 0; i < k.first; ++i) t = t * lx;
            for (int j = 0; j < k.second; ++j) t = t * ly;
            r = r + t;
        }
        return r;
    }

    /// Truncate to total degree <= n.
    BivarPoly truncate(int n) const {
        BivarPoly r;
        for (const auto& [k, v] : m_)
            if (k.first + k.second <= n) r.add(k.first, k.second, v);
        return r;
    }

private:
    Map m_;
};

using QBivar = BivarPoly<Rational>;
using DBivar = BivarPoly<double>;

template <class T>
inline BivarPoly<double> to_double_poly(const BivarPoly<T>& p) {
    BivarPoly<double> r;
    for (const auto& [k, v] : p.monomials()) r.add(k.first, k.second, to_double(v));
    return r;
}
inline const DBivar& to_double_poly(const DBivar& p) { return p; }

/// Split into homogeneous components, ascending by degree; zero input -> empty.
template <class T>
inline std::vector<std::pair<int, BivarPoly<T>>> homogeneous_components(const BivarPoly<T>& f) {
    std::map<int, BivarPoly<T>> by_deg;
    for (const auto& [k, v] : f.monomials()) by_deg[k.first + k.second].add(k.first, k.second, v);
    std::vector<std::pair<int, BivarPoly<T>>> out;
    for (auto& [d, p] : by_deg) out.emplace_back(d, std::move(p));
    return out;
}

}  // namespace regblock

#endif
