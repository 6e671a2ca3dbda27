#ifndef REGBLOCK_CANON_HPP
#define REGBLOCK_CANON_HPP

#include <array>
#include <cmath>
#include <complex>

#include "regblock/blowup.hpp"

namespace regblock {

/// Real Moebius transform v -> (c + d v)/(a + b v), ad - bc != 0.
/// Induced by the coordinate change T = (a b; c d) acting on v = y/x.
struct MobiusTransform {
    double a = 1, b = 0, c = 0, d = 1;

    double det() const { return a * d - b * c; }
    std::complex<double> operator()(std::complex<double> v) const {
        return (c + d * v) / (a + b * v);
    }
    MobiusTransform inverse() const {
        // inverse of v -> (c+dv)/(a+bv) is v -> (-c + a v)/(d - b v)
        return {d, -b, -c, a};
    }
    MobiusTransform normalized() const {
        double s = det();
        if (s == 0) throw DegenerateRoots("singular Moebius transform");
        const double f = 1.0 / std::sqrt(std::abs(s));
        MobiusTransform m{a * f, b * f, c * f, d * f};
        if (s < 0) m.c = -m.c, m.d = -m.d;  // keep determinant +1
        return m;
    }
};

enum class CubicCase { OneReal, ThreeReal };  // representatives (0,-i,i) / (0,inf,1)

struct MobiusReduction {
    CubicCase kind = CubicCase::OneReal;
    MobiusTransform S;  // sends the input roots to the representative triple
};

/// Reduce the root triple of a real cubic with distinct roots to the orbit
/// representative: one real root -> (0, -i, i); three real -> (0, inf, 1).
/// The one-real case is pinned by sending the real root to 0, the upper-half
/// root to +i, with determinant +1 and positive derivative at the real root.
inline MobiusReduction mobius_reduce_cubic(const RootSet& roots) {
    const int nreal =
        static_cast<int>(roots.real_roots.size()) + (roots.has_root_at_infinity() ? 1 : 0);
    auto near = [](double x, double y) { return std::abs(x - y) < 1e-9; };
    if (nreal == 1 && roots.complex_pairs.size() == 1) {
        const double rho = roots.has_root_at_infinity() ? 0.0 : roots.real_roots[0].value.approx;
        const std::complex<double> z = roots.complex_pairs[0].value;  // Im z > 0
        if (near(z.imag(), 0.0)) throw DegenerateRoots("complex pair collapsed onto the axis");
        MobiusTransform S;
        if (roots.has_root_at_infinity()) {
            // send infinity to 0 first with v -> 1/v, then recurse on images
            // 1/inf = 0; images of the pair: 1/z, conj
            const std::complex<double> zi = 1.0 / z;
            const std::complex<double> zz = zi.imag() > 0 ? zi : std::conj(zi);
            const double u = zz.real(), w = zz.imag();
            const double beta = -u / w, gamma = w + beta * u;  // as below with rho=0
            // compose (v -> (v)/(beta v + gamma)) after (v -> 1/v):
            // v -> (1/v) / (beta/v + gamma) = 1 / (beta + gamma v)
            S = MobiusTransform{beta, gamma, 1, 0};
        } else {
            // S(v) = (v - rho)/(beta v + gamma): S(rho)=0, S(z)=i
            // (z - rho) = i (beta z + gamma), z = u + i w:
            //   real: u - rho = -beta w      imag: w = beta u + gamma
            const double u = z.real(), w = z.imag();
            const double beta = (rho - u) / w;
            const double gamma = w - beta * u;
            S = MobiusTransform{gamma, beta, -rho, 1};
        }
        S = S.normalized();
        // positive derivative at the real root: S'(v) = det/(a + b v)^2 > 0
        // automatic with det = +1
        MobiusReduction out{CubicCase::OneReal, S};
        // verify
        const std::complex<double> img = S(z.imag() > 0 ? z : std::conj(z));
        const std::complex<double> img0 =
            roots.has_root_at_infinity()
                ? std::complex<double>(S.d / S.b, 0)  // S(inf) = d/b... (c+dv)/(a+bv) -> d/b
                : S(std::complex<double>(rho, 0));
        if (std::abs(img0) > 1e-9 || std::abs(img - std::complex<double>(0, 1)) > 1e-9)
            throw DegenerateRoots("reduction verification failed");
        return out;
    }
    if (nreal == 3) {
        std::array<double, 3> r{};
        bool use_inf = roots.has_root_at_infinity();
        size_t k = 0;
        for (const auto& rr : roots.real_roots) {
            if (rr.multiplicity != 1) throw DegenerateRoots("repeated root");
            r[k++] = rr.value.approx;
        }
        if (use_inf) {
            // send infinity to the "infinity" slot directly: (r0, inf, r2) -> (0, inf, 1)
            // v -> (v - r0)/(r2 - r0)
            const double r0 = r[0], r2 = r[1];
            MobiusTransform S{r2 - r0, 0, -r0, 1};
            return {CubicCase::ThreeReal, S};
        }
        // cross ratio: v -> (v - r0)(r2 - r1) / ((v - r1)(r2 - r0)): r0->0, r1->inf, r2->1
        const double r0 = r[0], r1 = r[1], r2 = r[2];
        if (near(r0, r1) || near(r1, r2) || near(r0, r2)) throw DegenerateRoots("repeated root");
        // (v - r0)(r2 - r1) / ((v - r1)(r2 - r0)) = (c + d v)/(a + b v)
        const double s1 = r2 - r1, s2 = r2 - r0;
        return {CubicCase::ThreeReal, MobiusTransform{-r1 * s2, s2, -r0 * s1, s1}};
    }
    throw DegenerateRoots("input is not the root set of a cubic with distinct roots");
}

struct QuadraticCanonical {
    double kappa1 = 0, kappa2 = 0;
    std::array<std::array<double, 2>, 2> transform{{{1, 0}, {0, 1}}};  // coordinate map z -> T z
    double scale = 1.0;                                                // positive time rescale
    bool time_reversed = false;
};

template <class T>
inline BivarPoly<double> apply_linear_d(const BivarPoly<T>& p,
                                        const std::array<std::array<double, 2>, 2>& M,
                                        bool first_component, const BivarPoly<T>& q) {
    // X'(z) = M X(M^{-1} z), components mixed by M
    const double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    const double ia = M[1][1] / det, ib = -M[0][1] / det, ic = -M[1][0] / det, id = M[0][0] / det;
    const auto Pi = to_double_poly(p).linear_substitute(ia, ib, ic, id);
    const auto Qi = to_double_poly(q).linear_substitute(ia, ib, ic, id);
    if (first_component) return M[0][0] * Pi + M[0][1] * Qi;
    return M[1][0] * Pi + M[1][1] * Qi;
}

/// Bring a homogeneous quadratic field with exactly one real characteristic
/// direction to (k1 x^2 + k2 x y - y^2, (k1+1) x y + k2 y^2) by a linear map
/// plus a positive time rescale. Time reversal is recorded, never silent.
inline QuadraticCanonical quadratic_canonicalize(const VectorField& X, double tol = 1e-10) {
    if (!(X.leading_degree == 2 && X.is_homogeneous()))
        throw NotQuadratic("input is not a homogeneous quadratic field");
    const CharacteristicData cd = characteristic_data(X);
    if (!cd.is_Vhom) throw NotInV("repeated characteristic direction");
    if (cd.directions.size() != 1)
        throw NotCanonicalizable("three real characteristic directions");
    const RootSet rs = [&] {
        RootSet r;
        for (const auto& d : cd.directions)
            if (d.at_infinity)
                r.infinity_multiplicity = d.multiplicity;
            else
                r.real_roots.push_back({d.direction, d.multiplicity});
        r.complex_pairs = cd.complex_pairs;
        return r;
    }();
    const MobiusReduction red = mobius_reduce_cubic(rs);
    // The directional roots transform by S^{-1} under T.X with S induced by T;
    // we need the new roots = representative = S(old), so the inducing T has
    // entries of red.S: S(v) = (c + d v)/(a + b v) <-> T = (a b; c d).
    QuadraticCanonical out;
    out.transform = {{{red.S.a, red.S.b}, {red.S.c, red.S.d}}};
    DBivar Pn = apply_linear_d(X.P, out.transform, true, X.Q);
    DBivar Qn = apply_linear_d(X.P, out.transform, false, X.Q);
    // pattern: P = k1 x^2 + k2 xy - y^2, Q = (k1+1) xy + k2 y^2 after a
    // positive rescale; the y^2 coefficient of P fixes the scale.
    const double a02 = Pn.coeff(0, 2);
    if (std::abs(a02) < tol) throw NotCanonicalizable("degenerate canonical pattern");
    double scale = -1.0 / a02;
    if (scale < 0) {
        out.time_reversed = true;  // the field matches the reversed pattern
        scale = -scale;
        Pn = (-1.0) * Pn;
        Qn = (-1.0) * Qn;
    }
    Pn = scale * Pn;
    Qn = scale * Qn;
    out.scale = scale;
    out.kappa1 = Pn.coeff(2, 0);
    out.kappa2 = Pn.coeff(1, 1);
    // coefficient-wise residual against the canonical pattern
    auto check = [&](double got, double want) {
        if (std::abs(got - want) > 1e-8 * (1 + std::abs(want)))
            throw NotCanonicalizable("canonical pattern residual too large");
    };
    check(Pn.coeff(0, 2), -1.0);
    check(Qn.coeff(2, 0), 0.0);
    check(Qn.coeff(1, 1), out.kappa1 + 1.0);
    check(Qn.coeff(0, 2), out.kappa2);
    return out;
}

enum class QuadraticClass { NotRegularisable, C01, CInf };

/// kappa1 >= 0: not regularisable; kappa1 < 0: smooth iff kappa2 = 0,
/// else Lipschitz-only.
inline QuadraticClass quadratic_classify(const QuadraticCanonical& c, double tol = 1e-10) {
    if (c.kappa1 >= -tol) return QuadraticClass::NotRegularisable;
    if (std::abs(c.kappa2) <= tol) return QuadraticClass::CInf;
    return QuadraticClass::C01;
}

inline std::string to_string(QuadraticClass q) {
    switch (q) {
        case QuadraticClass::NotRegularisable: return "not regularisable";
        case QuadraticClass::C01: return "C^{0,1}";
        case QuadraticClass::CInf: return "C^inf";
    }
    return "?";
}

}  // namespace regblock

#endif
