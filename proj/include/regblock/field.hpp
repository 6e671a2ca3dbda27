#ifndef REGBLOCK_FIELD_HPP
#define REGBLOCK_FIELD_HPP

#include <string>

#include "regblock/bivar.hpp"
#include "regblock/errors.hpp"

namespace regblock {

/// Planar polynomial vector field X = (P, Q) with a singularity at the origin.
struct VectorField {
    QBivar P, Q;
    int leading_degree = 0;  // lowest common homogeneous degree of (P, Q)

    VectorField() = default;
    VectorField(QBivar p, QBivar q) : P(std::move(p)), Q(std::move(q)) {
        if (P.is_zero() && Q.is_zero()) throw Error("vector field is identically zero");
        if (P.coeff(0, 0) != 0 || Q.coeff(0, 0) != 0)
            throw Error("origin is not a singular point");
        const int lp = P.low_degree(), lq = Q.low_degree();
        leading_degree = lp < 0 ? lq : (lq < 0 ? lp : std::min(lp, lq));
    }

    /// Leading homogeneous component (P_s, Q_s).
    VectorField leading() const {
        VectorField r;
        r.leading_degree = leading_degree;
        for (const auto& [k, v] : P.monomials())
            if (k.first + k.second == leading_degree) r.P.add(k.first, k.second, v);
        for (const auto& [k, v] : Q.monomials())
            if (k.first + k.second == leading_degree) r.Q.add(k.first, k.second, v);
        return r;
    }

    bool is_homogeneous() const {
        return P.total_degree() <= leading_degree && Q.total_degree() <= leading_degree;
    }

    /// Highest homogeneous order present.
    int max_degree() const { return std::max(P.total_degree(), Q.total_degree()); }
};

}  // namespace regblock

#endif
