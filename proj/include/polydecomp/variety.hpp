#ifndef POLYDECOMP_VARIETY_HPP
#define POLYDECOMP_VARIETY_HPP

#include <polydecomp/decomp.hpp>

#include <string>
#include <vector>

namespace polydecomp {

/// r_index(a_1..a_n): the coefficient of x^index in R for the generic monic
/// polynomial x^n + a_1 x^(n-1) + ... + a_n.
struct VarietyEquation {
    std::size_t index = 0;
    Element polynomial;
};

/**
 * Equations cutting out the monic degree-n polynomials that are
 * d-decomposable over Q: P is d-decomposable iff every equation vanishes at
 * its coefficients (a_1, ..., a_n).
 */
struct VarietySystem {
    unsigned n = 0;
    unsigned d = 0;
    std::vector<std::string> indeterminates; ///< a1 .. an
    Domain ring;                             ///< Q[a1, ..., an], a1 outermost
    std::vector<VarietyEquation> equations;  ///< by descending index
};

/// Q[a1, ..., an] as a tower with a1 outermost.
inline Domain generic_coefficient_ring(unsigned n)
{
    Domain ring = Domain::rationals();
    for (unsigned k = n; k >= 1; --k) ring = Domain::poly_ring(ring, "a" + std::to_string(k));
    return ring;
}

/// x^n + a1 x^(n-1) + ... + an over generic_coefficient_ring(n).
inline Poly generic_monic(unsigned n, const std::string& var = "x")
{
    const Domain ring = generic_coefficient_ring(n);
    Element::Coefficients c(n + 1, Element::zero(ring));
    c[n] = Element::one(ring);
    for (unsigned k = 1; k <= n; ++k) c[n - k] = Element::generator(ring, "a" + std::to_string(k));
    return Poly(ring, var, std::move(c));
}

inline VarietySystem variety_equations(unsigned n, unsigned d)
{
    if (d < 2) throw Error(ErrorCode::InvalidD, "d must be at least 2, got " + std::to_string(d));
    if (n == 0 || n % d != 0)
        throw Error(ErrorCode::DegreeNotDivisible,
                    "d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));

    const Poly P = generic_monic(n);
    const Decomposition dec = decompose(P, d);
    const std::size_t m = n / d;

    VarietySystem system{n, d, {}, P.domain(), {}};
    for (unsigned k = 1; k <= n; ++k) system.indeterminates.push_back("a" + std::to_string(k));
    // Slots with m | i are forced to zero and carry no equation.
    for (std::size_t i = n - m; i-- > 1;)
        if (i % m != 0) system.equations.push_back(VarietyEquation{i, dec.R.coeff(i)});
    return system;
}

} // namespace polydecomp

#endif // POLYDECOMP_VARIETY_HPP
