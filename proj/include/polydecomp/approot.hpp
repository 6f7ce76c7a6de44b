#ifndef POLYDECOMP_APPROOT_HPP
#define POLYDECOMP_APPROOT_HPP

#include <polydecomp/poly.hpp>

#include <string>

namespace polydecomp {

/// Checks the standing hypotheses for an approximate root or decomposition
/// of P with respect to d, and returns 1/d in P's domain.
inline Element check_root_hypotheses(const Poly& P, unsigned d)
{
    if (d < 2) throw Error(ErrorCode::InvalidD, "d must be at least 2, got " + std::to_string(d));
    if (!P.is_monic()) throw Error(ErrorCode::NotMonic, "polynomial is not monic");
    const std::size_t n = P.degree().value();
    if (n == 0 || n % d != 0)
        throw Error(ErrorCode::DegreeNotDivisible,
                    "d = " + std::to_string(d) + " does not divide deg P = " + std::to_string(n));
    return invert_integer(P.domain(), d);
}

/**
 * Approximate d-th root: the unique monic Q with deg Q = deg P / d and
 * deg(P - Q^d) < deg P - deg P / d.
 *
 * Solves the triangular system for the coefficients b_1..b_m of
 * Q = x^m + b_1 x^(m-1) + ... + b_m one at a time. With Q_(k-1) the root
 * truncated after b_(k-1), appending b_k x^(m-k) moves the x^(n-k)
 * coefficient of the d-th power by exactly d*b_k and leaves higher ones
 * alone, so b_k = (a_k - [x^(n-k)] Q_(k-1)^d) / d.
 */
inline Poly approx_root(const Poly& P, unsigned d)
{
    const Element inv_d = check_root_hypotheses(P, d);
    const Domain& dom = P.domain();
    const std::size_t n = P.degree().value();
    const std::size_t m = n / d;

    Poly Q = Poly::monomial(dom, P.variable(), Element::one(dom), m);
    for (std::size_t k = 1; k <= m; ++k) {
        const Poly partial_power = power(Q, d);
        const Element b = (P.coeff(n - k) - partial_power.coeff(n - k)) * inv_d;
        if (!b.is_zero()) Q += Poly::monomial(dom, P.variable(), b, m - k);
    }
    return Q;
}

/// deg(P - Q^d), minus infinity when Q^d = P.
inline Degree root_defect(const Poly& P, const Poly& Q, unsigned d)
{
    return (P - power(Q, d)).degree();
}

} // namespace polydecomp

#endif // POLYDECOMP_APPROOT_HPP
