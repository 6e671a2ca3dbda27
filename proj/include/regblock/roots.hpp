#ifndef REGBLOCK_ROOTS_HPP
#define REGBLOCK_ROOTS_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "regblock/errors.hpp"
#include "regblock/univar.hpp"

namespace regblock {

struct RealRoot {
    ExactReal value;
    int multiplicity = 1;
};

struct ComplexPair {
    std::complex<double> value;  // the representative with positive imaginary part
    int multiplicity = 1;
};

/// Projective root collection of a univariate polynomial: real roots sorted
/// ascending, one representative per conjugate pair, and the deficiency at
/// infinity relative to a declared projective degree.
struct RootSet {
    std::vector<RealRoot> real_roots;
    std::vector<ComplexPair> complex_pairs;
    int infinity_multiplicity = 0;
    bool has_root_at_infinity() const { return infinity_multiplicity > 0; }

    int total_multiplicity() const {
        int n = infinity_multiplicity;
        for (const auto& r : real_roots) n += r.multiplicity;
        for (const auto& c : complex_pairs) n += 2 * c.multiplicity;
        return n;
    }
};

inline double one_norm(const QPoly& p) {
    double s = 0;
    for (const auto& c : p.coeffs()) s += std::abs(to_double(c));
    return s;
}

/// Durand-Kerner simultaneous iteration on a squarefree polynomial.
/// All roots at once; residual bounded by tol * (1 + |p|_1).
inline std::vector<std::complex<double>> durand_kerner(const QPoly& p, double tol = 1e-12,
                                                       int max_iter = 200) {
    const int n = p.degree();
    std::vector<std::complex<double>> z(n), pc(n + 1);
    for (int k = 0; k <= n; ++k) pc[k] = to_double(p.coeff(k));
    const std::complex<double> lead = pc[n];
    auto eval = [&](std::complex<double> x) {
        std::complex<double> r = 0;
        for (int k = n; k >= 0; --k) r = r * x + pc[k];
        return r;
    };
    // starting points on a slightly irrational spiral inside the root bound
    const double R = std::max(1.0, to_double(root_bound(p)));
    for (int k = 0; k < n; ++k)
        z[k] = std::polar(R * (0.5 + 0.3 * k / std::max(1, n - 1)), 0.7 + 1.9 * k);
    const double bound = tol * (1.0 + one_norm(p));
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> d = lead;
            for (int j = 0; j < n; ++j)
                if (j != k) d *= (z[k] - z[j]);
            const auto num = eval(z[k]);
            z[k] -= num / d;
            worst = std::max(worst, std::abs(eval(z[k])));
        }
        if (worst < bound) return z;
    }
    double worst = 0;
    for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(eval(z[k])));
    if (worst < bound) return z;
    throw NonConvergence("complex root iteration did not reach tolerance");
}

/// All projective roots of p with exact multiplicities. Multiplicity
/// structure comes from the squarefree decomposition (rational arithmetic);
/// values come from Sturm isolation (real) and simultaneous iteration
/// (complex), with conjugate symmetry enforced by construction.
/// `projective_degree` adds the root at infinity when deg p falls short.
inline RootSet find_roots(const QPoly& p, int projective_degree, double tol_root = 1e-12,
                          const Rational& real_width = Rational(1, Integer(1) << 120)) {
    if (p.is_zero()) throw ZeroDirectionalPolynomial("zero polynomial has no root set");
    RootSet rs;
    rs.infinity_multiplicity = projective_degree - p.degree();
    const auto factors = squarefree_decomposition(p);
    for (size_t i = 0; i < factors.size(); ++i) {
        const int mult = static_cast<int>(i) + 1;
        const QPoly& f = factors[i];
        if (f.degree() <= 0) continue;
        const auto intervals = real_root_isolation(f);
        for (const auto& iv : intervals) {
            RealRoot rr;
            rr.multiplicity = mult;
            if (auto q = rational_root_in(f, iv)) {
                rr.value = ExactReal(*q);
            } else {
                const auto tight = refine_root(f, iv, real_width);
                rr.value = ExactReal(to_double(tight.mid()));
            }
            rs.real_roots.push_back(rr);
        }
        const int n_complex = (f.degree() - static_cast<int>(intervals.size())) / 2;
        if (n_complex > 0) {
            auto zs = durand_kerner(f, tol_root);
            std::vector<std::complex<double>> upper;
            for (const auto& z : zs)
                if (z.imag() > 0) upper.push_back(z);
            // pair up by proximity is unnecessary: count must match
            if (static_cast<int>(upper.size()) != n_complex)
                throw NonConvergence("conjugate pairing mismatch in complex roots");
            // polish upper-half roots with a few Newton steps on f
            const QPoly fd = f.derivative();
            for (auto& z : upper)
                for (int it = 0; it < 4; ++it) z -= f.eval(z) / fd.eval(z);
            for (const auto& z : upper) rs.complex_pairs.push_back({z, mult});
        }
    }
    std::sort(rs.real_roots.begin(), rs.real_roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value.approx < b.value.approx; });
    std::sort(rs.complex_pairs.begin(), rs.complex_pairs.end(),
              [](const ComplexPair& a, const ComplexPair& b) {
                  return std::abs(a.value) < std::abs(b.value);
              });
    return rs;
}

/// Convenience wrappers matching the operation names.
inline RootSet square_free_multiplicities(const QPoly& p, int projective_degree) {
    return find_roots(p, projective_degree);
}
inline RootSet complex_roots(const QPoly& p, double tol_root = 1e-12) {
    return find_roots(p, p.degree(), tol_root);
}

}  // namespace regblock

#endif
