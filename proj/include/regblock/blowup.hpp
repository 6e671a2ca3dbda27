#ifndef REGBLOCK_BLOWUP_HPP
#define REGBLOCK_BLOWUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "regblock/field.hpp"
#include "regblock/roots.hpp"

namespace regblock {

enum class Chart { X, Y };

/// Field in a directional blow-up chart, desingularised: the common factor
/// (chart variable)^{s-1} has been divided out.
struct ChartField {
    Chart chart = Chart::X;
    QBivar A, B;  // d(chart pair)/dtau = (A, B)
    bool desingularised = true;
    int divided_power = 0;
};

/// x-chart blow-up (x, y) = (xh, xh*yh):
///   Xhat = ( sum_i xh^{i-s+1} P_i(1, yh),  sum_i xh^{i-s} p_i(yh) ),
///   p_i(yh) = Q_i(1, yh) - yh P_i(1, yh),
/// keeping homogeneous orders s .. s+truncation_order of X.
inline ChartField blowup_x(const VectorField& X, int truncation_order) {
    const int s = X.leading_degree;
    ChartField out;
    out.chart = Chart::X;
    out.divided_power = s - 1;
    for (const auto& [d, Pd] : homogeneous_components(X.P)) {
        if (d < s || d > s + truncation_order) continue;
        for (const auto& [k, v] : Pd.monomials()) {
            out.A.add(d - s + 1, k.second, v);   // xh^{d-s+1} * (yh^j coeff of P_d(1,yh))
            out.B.add(d - s, k.second + 1, -v);  // -yh * P_d(1,yh) part of p_d
        }
    }
    for (const auto& [d, Qd] : homogeneous_components(X.Q)) {
        if (d < s || d > s + truncation_order) continue;
        for (const auto& [k, v] : Qd.monomials()) out.B.add(d - s, k.second, v);
    }
    return out;
}

/// y-chart blow-up (x, y) = (xb*yb, yb):
///   Xbar = ( sum_i yb^{i-s} q_i(xb),  sum_i yb^{i-s+1} Q_i(xb, 1) ),
///   q_i(xb) = P_i(xb, 1) - xb Q_i(xb, 1).
inline ChartField blowup_y(const VectorField& X, int truncation_order) {
    const int s = X.leading_degree;
    ChartField out;
    out.chart = Chart::Y;
    out.divided_power = s - 1;
    for (const auto& [d, Pd] : homogeneous_components(X.P)) {
        if (d < s || d > s + truncation_order) continue;
        for (const auto& [k, v] : Pd.monomials()) out.A.add(k.first, d - s, v);
    }
    for (const auto& [d, Qd] : homogeneous_components(X.Q)) {
        if (d < s || d > s + truncation_order) continue;
        for (const auto& [k, v] : Qd.monomials()) {
            out.A.add(k.first + 1, d - s, -v);
            out.B.add(k.first, d - s + 1, v);
        }
    }
    return out;
}

/// Push an x-chart field back through (xh, yh) -> (x, y/x) and restore the
/// divided factor; used by the blow-down identity test.
inline VectorField blow_down_x(const ChartField& C, int s) {
    // X = xh^{s-1} * (A, (B*x + yh-part...)): invert the chart relations:
    // x = xh, y = xh yh  =>  P = xh^{s-1} A(x, y/x),  Q = y' = (xh yh)' =
    // xh' yh + xh yh' = xh^{s-1}(A yh + x B)(at (x, y/x)).
    // For polynomial output, multiply through by powers of x.
    QBivar P, Q;
    for (const auto& [k, v] : C.A.monomials()) {
        // xh^i yh^j -> x^{i-j} y^j; with the xh^{s-1} factor: x^{s-1+i-j} y^j
        P.add(s - 1 + k.first - k.second, k.second, v);
    }
    for (const auto& [k, v] : C.A.monomials())
        Q.add(s - 1 + k.first - k.second - 1, k.second + 1, v);
    for (const auto& [k, v] : C.B.monomials()) Q.add(s + k.first - k.second, k.second, v);
    return VectorField(P, Q);
}

struct DirectionInfo {
    ExactReal direction;        // yh* value; ignored when at_infinity
    bool at_infinity = false;
    int multiplicity = 1;
    ExactReal lambda_along;       // p'(yh*) (eigenvalue along the critical manifold)
    ExactReal lambda_transverse;  // P_s(1, yh*)
    ExactReal r_star;             // lambda_transverse / lambda_along (simple directions)
};

struct CharacteristicData {
    std::vector<DirectionInfo> directions;
    std::vector<ComplexPair> complex_pairs;
    bool is_Vhom = false;      // all multiplicities one, isolated leading singularity
    QPoly directional;         // p(yh) = Q_s(1,yh) - yh P_s(1,yh)
    int projective_degree = 0; // s + 1

    int real_count_with_multiplicity() const {
        int n = 0;
        for (const auto& d : directions) n += d.multiplicity;
        return n;
    }
};

inline QPoly directional_polynomial_x(const VectorField& Xs) {
    const QPoly p1 = Xs.P.restrict_line(true);
    const QPoly q1 = Xs.Q.restrict_line(true);
    return q1 - QPoly::monomial(1, Rational(1)) * p1;
}
inline QPoly directional_polynomial_y(const VectorField& Xs) {
    const QPoly p1 = Xs.P.restrict_line(false);
    const QPoly q1 = Xs.Q.restrict_line(false);
    return p1 - QPoly::monomial(1, Rational(1)) * q1;
}

/// Leading components share no nonconstant factor (isolated singularity of
/// the leading part). Homogeneous P_s, Q_s: common factors are x^k or common
/// roots of the dehomogenisations.
inline bool leading_isolated(const VectorField& Xs) {
    const QPoly p1 = Xs.P.restrict_line(true);
    const QPoly q1 = Xs.Q.restrict_line(true);
    if (p1.is_zero() || q1.is_zero()) return false;
    const int s = Xs.leading_degree;
    // common x-power: both P_s(1,t), Q_s(1,t) of degree < s means x | both
    if (p1.degree() < s && q1.degree() < s) return false;
    return gcd(p1, q1).degree() == 0;
}

/// Characteristic directions of the leading homogeneous component, with
/// multiplicities, the root at infinity, and the critical values r* of the
/// simple real directions.
inline CharacteristicData characteristic_data(const VectorField& X, double tol_root = 1e-12) {
    const VectorField Xs = X.leading();
    if (!leading_isolated(Xs))
        throw NotIsolated("leading homogeneous component has a nonisolated singularity");
    CharacteristicData cd;
    const int s = Xs.leading_degree;
    cd.projective_degree = s + 1;
    cd.directional = directional_polynomial_x(Xs);
    if (cd.directional.is_zero())
        throw ZeroDirectionalPolynomial("directional polynomial vanishes identically");
    const RootSet rs = find_roots(cd.directional, s + 1, tol_root);
    cd.complex_pairs = rs.complex_pairs;

    const QPoly p = cd.directional;
    const QPoly dp = p.derivative();
    const QPoly P1 = Xs.P.restrict_line(true);
    bool all_simple = true;
    for (const auto& rr : rs.real_roots) {
        DirectionInfo di;
        di.direction = rr.value;
        di.multiplicity = rr.multiplicity;
        if (rr.multiplicity > 1) all_simple = false;
        if (rr.multiplicity == 1) {
            if (rr.value.is_exact()) {
                const Rational y0 = *rr.value.exact;
                di.lambda_along = ExactReal(dp.eval(y0));
                di.lambda_transverse = ExactReal(P1.eval(y0));
                di.r_star = ExactReal(Rational(*di.lambda_transverse.exact /
                                               *di.lambda_along.exact));
            } else {
                const double y0 = rr.value.approx;
                di.lambda_along = dp.eval(y0);
                di.lambda_transverse = P1.eval(y0);
                di.r_star = di.lambda_transverse.approx / di.lambda_along.approx;
            }
        }
        cd.directions.push_back(di);
    }
    if (rs.infinity_multiplicity > 0) {
        DirectionInfo di;
        di.at_infinity = true;
        di.multiplicity = rs.infinity_multiplicity;
        if (rs.infinity_multiplicity > 1) all_simple = false;
        if (rs.infinity_multiplicity == 1) {
            // evaluate in the y-chart at xb = 0
            const QPoly q = directional_polynomial_y(Xs);
            const QPoly Q1 = Xs.Q.restrict_line(false);
            di.lambda_along = ExactReal(q.derivative().eval(Rational(0)));
            di.lambda_transverse = ExactReal(Q1.eval(Rational(0)));
            di.r_star = ExactReal(Rational(*di.lambda_transverse.exact / *di.lambda_along.exact));
        }
        cd.directions.push_back(di);
    }
    // only real characteristic directions (incl. infinity) bear on the class:
    // complex roots create no singular points on the critical manifold
    cd.is_Vhom = all_simple;
    return cd;
}

struct LinearTransform {
    // coordinates transform by z -> M z with rational entries
    Rational a = 1, b = 0, c = 0, d = 1;
    bool identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

/// Pull the field back through the inverse of z -> M z: X'(z) = M X(M^{-1} z).
inline VectorField apply_linear(const VectorField& X, const LinearTransform& M) {
    const Rational det = M.a * M.d - M.b * M.c;
    if (det == 0) throw Error("singular linear transform");
    // M^{-1} = (d, -b; -c, a)/det
    const Rational ia = M.d / det, ib = -M.b / det, ic = -M.c / det, id = M.a / det;
    const QBivar Pi = X.P.linear_substitute(ia, ib, ic, id);
    const QBivar Qi = X.Q.linear_substitute(ia, ib, ic, id);
    QBivar Pn = M.a * Pi + M.b * Qi;
    QBivar Qn = M.c * Pi + M.d * Qi;
    return VectorField(Pn, Qn);
}

struct RotationResult {
    VectorField field;
    LinearTransform transform;
    bool approximate = false;  // direction was irrational: rotated by a close rational
};

/// Rotate (scaled rotation, exact for rational directions) so the given
/// characteristic direction becomes yh* = 0, i.e. the asymptotic orbits are
/// tangent to the x-axis and infinity is not a direction.
inline RotationResult rotate_to_axis(const VectorField& X, const DirectionInfo& dir) {
    RotationResult out{X, {}, false};
    if (dir.at_infinity) {
        // quarter turn (x, y) -> (y, -x)
        out.transform = {0, 1, -1, 0};
        out.field = apply_linear(X, out.transform);
        return out;
    }
    Rational t;
    if (dir.direction.is_exact()) {
        t = *dir.direction.exact;
    } else {
        // irrational direction: align by a double-precision rational; the
        // residual misalignment is flagged and carried into the report
        t = Rational(Integer(dir.direction.approx * 1e18), Integer(1000000000000000000LL));
        out.approximate = true;
    }
    if (t == 0) return out;  // already aligned
    // scaled rotation sending (1, t) to the positive x-axis
    out.transform = {1, t, -t, 1};
    out.field = apply_linear(X, out.transform);
    return out;
}

enum class C0Reason {
    Regularisable,
    Parity,          // odd leading degree: an even-degree directional polynomial
    DirectionCount,  // more than one (or zero) real characteristic directions
    Sign,            // unique direction but r* >= 0
};

struct C0Decision {
    bool regularisable = false;
    C0Reason reason = C0Reason::Regularisable;
    std::optional<ExactReal> r_star;
    CharacteristicData data;
};

inline std::string to_string(C0Reason r) {
    switch (r) {
        case C0Reason::Regularisable: return "regularisable";
        case C0Reason::Parity: return "parity";
        case C0Reason::DirectionCount: return "direction count";
        case C0Reason::Sign: return "sign";
    }
    return "?";
}

/// Continuity decision on the leading homogeneous component: regularisable
/// iff there is exactly one real characteristic direction, it is simple, and
/// its critical value is negative.
inline C0Decision c0_test(const VectorField& X, double tol_root = 1e-12) {
    C0Decision out;
    out.data = characteristic_data(X, tol_root);
    if (!out.data.is_Vhom)
        throw NotInV("a characteristic direction has multiplicity > 1: outside supported class");
    if (X.leading_degree % 2 == 1) {
        out.reason = C0Reason::Parity;
        return out;
    }
    if (out.data.directions.size() != 1) {
        out.reason = C0Reason::DirectionCount;
        return out;
    }
    const auto& d = out.data.directions.front();
    out.r_star = d.r_star;
    const bool neg = d.r_star.is_exact() ? (*d.r_star.exact < 0) : (d.r_star.approx < 0);
    if (!neg) {
        out.reason = C0Reason::Sign;
        return out;
    }
    out.regularisable = true;
    return out;
}

}  // namespace regblock

#endif
