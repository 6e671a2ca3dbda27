#ifndef REGBLOCK_NORMAL_FORM_HPP
#define REGBLOCK_NORMAL_FORM_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "regblock/blowup.hpp"
#include "regblock/qr_series.hpp"

namespace regblock {

/// f(gx, gy) truncated at total degree N, exact arithmetic.
template <class T>
inline BivarPoly<T> compose_truncated(const BivarPoly<T>& f, const BivarPoly<T>& gx,
                                      const BivarPoly<T>& gy, int N) {
    std::map<int, BivarPoly<T>> px, py;
    BivarPoly<T> one;
    one.add(0, 0, T(1));
    px[0] = one;
    py[0] = one;
    auto pw = [&](std::map<int, BivarPoly<T>>& cache, const BivarPoly<T>& g, int n) {
        for (int k = static_cast<int>(cache.size()); k <= n; ++k)
            cache[k] = (cache[k - 1] * g).truncate(N);
        return cache[n];
    };
    BivarPoly<T> r;
    for (const auto& [k, v] : f.monomials()) {
        auto t = (pw(px, gx, k.first) * pw(py, gy, k.second)).truncate(N);
        r = r + v * t;
    }
    return r;
}

template <class T>
inline BivarPoly<T> jacobian_apply(const BivarPoly<T>& h, const BivarPoly<T>& Fx,
                                   const BivarPoly<T>& Fy, int N) {
    return (h.dx() * Fx + h.dy() * Fy).truncate(N);
}

struct ResonanceInfo {
    std::optional<int> m;  // order of the resonance (>= 2); nullopt: none up to N
    Rational alpha_m = 0;  // u-equation coefficient in the canonical orientation
    Rational alpha_leg_in = 0, alpha_leg_out = 0;  // the two saddle-passage values
    int order_checked = 0;
};

/// Poincare-Dulac data of a hyperbolic saddle sitting at the origin of a
/// blown-up chart field. phi_inv = id + h maps normal-form coordinates (w, v)
/// to chart coordinates; the resonant components of h are zero, which makes
/// the transformation unique. The normal form keeps the original eigenvalues:
///   w' = mu_w w + w sum_i A_i u^i,  v' = mu_v v + v sum_i B_i u^i,
/// with u = w^q v^p and r = -mu_w/mu_v = p/q > 0 in lowest terms.
struct NormalFormResult {
    Rational mu_w, mu_v;
    Rational r;  // ratio of hyperbolicity, exact
    long p = 1, q = 1;
    std::map<int, Rational> A, B;  // resonant coefficients by u-power
    QBivar hx, hy;                 // phi_inv = (w + hx, v + hy)
    QBivar fx, fy;                 // phi = (x + fx, y + fy), inverse series
    Rational shear = 0;            // preliminary shear y -> y + shear*x applied
    int N = 5;

    Rational gamma(int i) const {
        Rational g = 0;
        auto a = A.find(i);
        auto b = B.find(i);
        if (a != A.end()) g += Rational(q) * a->second;
        if (b != B.end()) g += Rational(p) * b->second;
        return g;
    }

    /// alpha_{i+1} of the u-equation in the orientation making the
    /// critical-manifold direction unstable: alpha_{i+1} = gamma_i / mu_v.
    Rational alpha(int i_plus_1) const { return gamma(i_plus_1 - 1) / mu_v; }

    ResonanceInfo resonance() const {
        ResonanceInfo out;
        out.order_checked = N;
        const int imax = (N - 1) / (static_cast<int>(p) + static_cast<int>(q));
        for (int i = 1; i <= imax; ++i) {
            if (gamma(i) != 0) {
                out.m = i + 1;
                out.alpha_m = gamma(i) / mu_v;
                out.alpha_leg_in = gamma(i) / mu_v;
                out.alpha_leg_out = gamma(i) / mu_w;
                break;
            }
        }
        return out;
    }
};

inline ResonanceInfo resonance_order(const NormalFormResult& nf) { return nf.resonance(); }

/// Degree-by-degree normalisation of a chart saddle, exact in rational
/// arithmetic. Requires a hyperbolic saddle (opposite-sign eigenvalues); a
/// lower-triangular linear part is diagonalised by an exact shear first.
inline NormalFormResult normalize_saddle(const ChartField& C, int N = 5) {
    NormalFormResult nf;
    nf.N = N;
    QBivar Afield = C.A, Bfield = C.B;
    nf.mu_w = Afield.coeff(1, 0);
    nf.mu_v = Bfield.coeff(0, 1);
    if (Afield.coeff(0, 1) != 0) throw NotHyperbolic("chart field linear part not triangular");
    if (nf.mu_w == 0 || nf.mu_v == 0) throw NotHyperbolic("zero eigenvalue on the critical manifold");
    if (sign(nf.mu_w) == sign(nf.mu_v))
        throw NotHyperbolic("eigenvalues of equal sign: not a saddle");
    const Rational bl = Bfield.coeff(1, 0);
    if (bl != 0) {
        // align the mu_w eigendirection with the axis: coordinates
        // (x, y) -> (x, y - shear*x) with shear = bl/(mu_w - mu_v)
        nf.shear = bl / (nf.mu_w - nf.mu_v);
        QBivar gx, gy;
        gx.add(1, 0, Rational(1));
        gy.add(0, 1, Rational(1));
        gy.add(1, 0, -nf.shear);  // S^{-1}: (x, y) -> (x, y - (-shear) x)... see below
        // S(z) = (x, y + shear x) maps old coords to new? Use pullback with
        // M = (1 0; -shear 1): X'(z) = M X(M^{-1} z), M^{-1} = (1 0; shear 1).
        QBivar mgx, mgy;
        mgx.add(1, 0, Rational(1));
        mgy.add(0, 1, Rational(1));
        mgy.add(1, 0, nf.shear);
        const int deg = std::max(Afield.total_degree(), Bfield.total_degree());
        QBivar Ai = compose_truncated(Afield, mgx, mgy, deg);
        QBivar Bi = compose_truncated(Bfield, mgx, mgy, deg);
        Afield = Ai;
        Bfield = Bi - nf.shear * Ai;
    }
    // r = -mu_w/mu_v = p/q in lowest terms, positive
    nf.r = -nf.mu_w / nf.mu_v;
    if (nf.r <= 0) throw NotHyperbolic("nonpositive hyperbolicity ratio");
    nf.p = static_cast<long>(num(nf.r));
    nf.q = static_cast<long>(den(nf.r));

    QBivar XNx, XNy;
    XNx.add(1, 0, nf.mu_w);
    XNy.add(0, 1, nf.mu_v);
    QBivar id_x, id_y;
    id_x.add(1, 0, Rational(1));
    id_y.add(0, 1, Rational(1));
    for (int d = 2; d <= N; ++d) {
        const QBivar gx = id_x + nf.hx;
        const QBivar gy = id_y + nf.hy;
        const QBivar lhsA = compose_truncated(Afield, gx, gy, d);
        const QBivar lhsB = compose_truncated(Bfield, gx, gy, d);
        const QBivar rhsA = XNx + jacobian_apply(nf.hx, XNx, XNy, d);
        const QBivar rhsB = XNy + jacobian_apply(nf.hy, XNx, XNy, d);
        const QBivar GA = (lhsA - rhsA).truncate(d);
        const QBivar GB = (lhsB - rhsB).truncate(d);
        for (const auto& [k, v] : GA.monomials()) {
            if (k.first + k.second != d) continue;
            const Rational div = k.first * nf.mu_w + k.second * nf.mu_v - nf.mu_w;
            if (div == 0)
                XNx.add(k.first, k.second, v);
            else
                nf.hx.add(k.first, k.second, v / div);
        }
        for (const auto& [k, v] : GB.monomials()) {
            if (k.first + k.second != d) continue;
            const Rational div = k.first * nf.mu_w + k.second * nf.mu_v - nf.mu_v;
            if (div == 0)
                XNy.add(k.first, k.second, v);
            else
                nf.hy.add(k.first, k.second, v / div);
        }
    }
    // collect resonant coefficients: XNx = mu_w w + w * sum A_i u^i etc.
    for (const auto& [k, v] : XNx.monomials()) {
        if (k == std::pair{1, 0}) continue;
        const int i = (k.first - 1) / static_cast<int>(nf.q);
        nf.A[i] = v;
    }
    for (const auto& [k, v] : XNy.monomials()) {
        if (k == std::pair{0, 1}) continue;
        const int i = k.first / static_cast<int>(nf.q);
        nf.B[i] = v;
    }
    // forward series phi = (id + h)^{-1} by fixed-point iteration, exact
    QBivar fx, fy;
    for (int it = 0; it < N; ++it) {
        const QBivar gx = id_x + fx;
        const QBivar gy = id_y + fy;
        fx = Rational(-1) * compose_truncated(nf.hx, gx, gy, N);
        fy = Rational(-1) * compose_truncated(nf.hy, gx, gy, N);
    }
    nf.fx = fx;
    nf.fy = fy;
    return nf;
}

/// Normal form vector field components (for reporting and checks).
inline std::pair<QBivar, QBivar> normal_form_field(const NormalFormResult& nf) {
    QBivar XNx, XNy;
    XNx.add(1, 0, nf.mu_w);
    XNy.add(0, 1, nf.mu_v);
    for (const auto& [i, a] : nf.A) XNx.add(i * nf.q + 1, i * nf.p, a);
    for (const auto& [i, b] : nf.B) XNy.add(i * nf.q, i * nf.p + 1, b);
    return {XNx, XNy};
}

/// Residual of the conjugacy X(phi_inv(z)) - D phi_inv(z) . XN(z), truncated
/// at degree N; identically zero certifies the normalisation.
inline std::pair<QBivar, QBivar> normal_form_residual(const ChartField& C,
                                                      const NormalFormResult& nf) {
    QBivar id_x, id_y;
    id_x.add(1, 0, Rational(1));
    id_y.add(0, 1, Rational(1));
    // re-apply the shear to the input field if one was used
    QBivar Afield = C.A, Bfield = C.B;
    if (nf.shear != 0) {
        QBivar mgx, mgy;
        mgx.add(1, 0, Rational(1));
        mgy.add(0, 1, Rational(1));
        mgy.add(1, 0, nf.shear);
        const int deg = std::max(Afield.total_degree(), Bfield.total_degree());
        QBivar Ai = compose_truncated(Afield, mgx, mgy, deg);
        QBivar Bi = compose_truncated(Bfield, mgx, mgy, deg);
        Afield = Ai;
        Bfield = Bi - nf.shear * Ai;
    }
    const QBivar gx = id_x + nf.hx;
    const QBivar gy = id_y + nf.hy;
    const auto [XNx, XNy] = normal_form_field(nf);
    const QBivar lhsA = compose_truncated(Afield, gx, gy, nf.N);
    const QBivar lhsB = compose_truncated(Bfield, gx, gy, nf.N);
    const QBivar rhsA = jacobian_apply(gx, XNx, XNy, nf.N);
    const QBivar rhsB = jacobian_apply(gy, XNx, XNy, nf.N);
    return {(lhsA - rhsA).truncate(nf.N), (lhsB - rhsB).truncate(nf.N)};
}

enum class DulacDirection { Forward, Inverse };

/// Ideal Dulac series at unit sections:
///   forward  D(x)   = x^r     (1 - (1/q) alpha_m x^{(m-1)p} ln x + ...)
///   inverse  D^-(y) = y^{1/r} (1 + (q/p^2) alpha_m y^{(m-1)q} ln y + ...)
/// For irrational r the series is the bare power.
inline QuasiRegularSeries dulac_series(const std::optional<Rational>& r_rational, double r_value,
                                       const ResonanceInfo& res, DulacDirection dir,
                                       const Rational& truncation) {
    QuasiRegularSeries s(truncation);
    if (!r_rational) {
        const Rational re(Integer(r_value * 1e15), Integer(1000000000000000LL));
        s.add(dir == DulacDirection::Forward ? re : Rational(1) / re, 0, 1.0);
        return s;
    }
    const Rational r = *r_rational;
    const long p = static_cast<long>(num(r)), q = static_cast<long>(den(r));
    if (dir == DulacDirection::Forward) {
        s.add(r, 0, 1.0);
        if (res.m) {
            const int m = *res.m;
            s.add(r + Rational((m - 1) * p), 1, -to_double(res.alpha_m) / static_cast<double>(q));
        }
    } else {
        s.add(Rational(1) / r, 0, 1.0);
        if (res.m) {
            const int m = *res.m;
            s.add(Rational(1) / r + Rational((m - 1) * q), 1,
                  to_double(res.alpha_m) * static_cast<double>(q) / static_cast<double>(p * p));
        }
    }
    return s;
}

}  // namespace regblock

#endif
