#ifndef POLYDECOMP_DECOMP_HPP
#define POLYDECOMP_DECOMP_HPP

#include <polydecomp/approot.hpp>

#include <string>

namespace polydecomp {

/// P = h(Q) + R with h, Q monic, deg h = d, no t^(d-1) term in h,
/// deg R < deg P - deg P / d, and R free of monomials x^i with deg Q | i.
struct Decomposition {
    Poly h; ///< in a fresh variable (normally "t")
    Poly Q;
    Poly R;
    unsigned d = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Name for h's variable: "t" unless the name is taken by P or its tower.
inline std::string fresh_variable(const Poly& P)
{
    auto taken = [&](const std::string& v) { return v == P.variable() || P.domain().has_variable(v); };
    if (!taken("t")) return "t";
    for (unsigned k = 1;; ++k)
        if (std::string v = "t" + std::to_string(k); !taken(v)) return v;
}

/**
 * Computes the unique decomposition P = h(Q) + R.
 *
 * Q is the approximate d-th root; then the highest monomial a x^i of
 * E = P - h(Q) - R is repeatedly moved into h (as a t^(i/deg Q)) when
 * deg Q divides i and into R otherwise, until E vanishes. Each step cancels
 * the leading term of E, so deg E strictly decreases.
 */
inline Decomposition decompose(const Poly& P, unsigned d)
{
    Poly Q = approx_root(P, d);
    const Domain& dom = P.domain();
    const std::size_t m = Q.degree().value();

    Poly h = Poly::monomial(dom, fresh_variable(P), Element::one(dom), d);
    Poly R = Poly::zero(dom, P.variable());
    for (;;) {
        const Poly E = P - compose(h, Q) - R;
        if (E.is_zero()) break;
        const std::size_t i = E.degree().value();
        if (i % m == 0)
            h += Poly::monomial(dom, h.variable(), E.leading(), i / m);
        else
            R += Poly::monomial(dom, P.variable(), E.leading(), i);
    }
    return Decomposition{std::move(h), std::move(Q), std::move(R), d};
}

/// One flag per condition; failures are data, not exceptions.
struct VerifyReport {
    bool monic = false;           ///< h and Q monic
    bool degree_bound = false;    ///< deg h = d, [t^(d-1)] h = 0, deg R < n - n/d
    bool index_condition = false; ///< r_i != 0 implies deg Q does not divide i
    bool reconstruction = false;  ///< h(Q) + R = P

    bool all() const noexcept { return monic && degree_bound && index_condition && reconstruction; }
};

inline VerifyReport verify(const Poly& P, const Decomposition& dec)
{
    VerifyReport report;
    const auto& [h, Q, R, d] = dec;

    report.monic = h.is_monic() && Q.is_monic();

    if (!P.is_zero() && d >= 2) {
        const std::size_t n = P.degree().value();
        report.degree_bound = h.degree() == Degree(d) && h.coeff(d - 1).is_zero() &&
                              n % d == 0 && R.degree() < Degree(n - n / d);
    }

    if (!Q.is_zero() && Q.degree().value() >= 1) {
        const std::size_t m = Q.degree().value();
        report.index_condition = true;
        for (std::size_t i = 0; i < R.coefficients().size(); ++i)
            if (!R.coefficients()[i].is_zero() && i % m == 0) report.index_condition = false;
    }

    try {
        report.reconstruction = compose(h, Q) + R == P;
    } catch (const Error&) {
        report.reconstruction = false;
    }
    return report;
}

} // namespace polydecomp

#endif // POLYDECOMP_DECOMP_HPP
