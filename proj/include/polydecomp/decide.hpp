#ifndef POLYDECOMP_DECIDE_HPP
#define POLYDECOMP_DECIDE_HPP

#include <polydecomp/decomp.hpp>
#include <polydecomp/multivariate.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polydecomp {

/// A pair with h(Q) equal to the polynomial that was tested.
struct Witness {
    Poly h;
    Poly Q;
};

struct DecomposabilityVerdict {
    bool decomposable = false;
    std::optional<Witness> witness;
    /// R of the decomposition; the brute-force oracle has none to report.
    std::optional<Poly> residual;
    /// Leading coefficient divided out of a non-monic input.
    std::optional<Element> normalization;
    /// Multivariate case: whether every coefficient of h is a constant of K.
    bool h_in_ground_field = true;
    /// The full triple for the (normalized) input, when one was computed.
    std::optional<Decomposition> decomposition;
};

/**
 * Decides whether P = h(Q) for some h of degree d, over Q or GF(p) with the
 * characteristic not dividing d. A non-monic P is first divided by its
 * leading coefficient c; the returned witness h is scaled back by c so that
 * h(Q) reproduces the original P.
 */
inline DecomposabilityVerdict is_decomposable_uni(const Poly& P, unsigned d)
{
    if (!P.domain().is_field())
        throw Error(ErrorCode::NotAField, "univariate decomposability needs a field, got " + P.domain().to_string());
    if (d < 2) throw Error(ErrorCode::InvalidD, "d must be at least 2, got " + std::to_string(d));
    if (P.is_zero()) throw Error(ErrorCode::DegreeNotDivisible, "the zero polynomial has no degree");

    DecomposabilityVerdict verdict;
    Poly monic = P;
    const Element lead = P.leading();
    if (!lead.is_one()) {
        monic = inverse(lead) * P;
        verdict.normalization = lead;
    }

    Decomposition dec = decompose(monic, d);
    verdict.decomposable = dec.R.is_zero();
    if (verdict.decomposable) verdict.witness = Witness{lead * dec.h, dec.Q};
    verdict.residual = dec.R;
    verdict.decomposition = std::move(dec);
    return verdict;
}

/**
 * Multivariate decomposability: P in K[x1..xn] viewed as A[x1] with
 * A = K[x2..xn]. P is d-decomposable iff the decomposition over A has R = 0
 * and h in K[t]. P must be monic in `main_var`.
 */
inline DecomposabilityVerdict is_decomposable_multi(const Poly& P, unsigned d, const std::string& main_var)
{
    const Poly F = with_main_variable(P, main_var);
    if (d < 2) throw Error(ErrorCode::InvalidD, "d must be at least 2, got " + std::to_string(d));
    if (!F.is_monic())
        throw Error(ErrorCode::NotMonicInMainVar, "polynomial is not monic in '" + main_var + "'");

    Decomposition dec = decompose(F, d);
    DecomposabilityVerdict verdict;
    verdict.h_in_ground_field = std::all_of(dec.h.coefficients().begin(), dec.h.coefficients().end(),
                                            [](const Element& c) { return c.is_ground_constant(); });
    verdict.decomposable = dec.R.is_zero() && verdict.h_in_ground_field;
    if (verdict.decomposable) {
        Element::Coefficients ground;
        for (const auto& c : dec.h.coefficients()) ground.push_back(c.ground_value());
        verdict.witness = Witness{Poly(F.domain().ground(), dec.h.variable(), std::move(ground)), dec.Q};
    }
    verdict.residual = dec.R;
    verdict.decomposition = std::move(dec);
    return verdict;
}

/// Largest enumeration brute_force_decompose accepts: p^(n/d) * p^d.
inline constexpr std::uint64_t brute_force_limit = 1'000'000;

namespace detail {

// Advances a base-p counter whose last digit moves fastest, which walks the
// tuples in ascending lexicographic order. Returns false after the last one.
inline bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t p)
{
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < p) return true;
        digits[k] = 0;
    }
    return false;
}

// Monic polynomial whose lower coefficients (constant term first) are `digits`.
inline Poly monic_from_digits(const Domain& field, const std::string& var,
                              const std::vector<std::uint32_t>& digits)
{
    Element::Coefficients c;
    c.reserve(digits.size() + 1);
    for (auto v : digits) c.push_back(Element::from_integer(field, v));
    c.push_back(Element::one(field));
    return Poly(field, var, std::move(c));
}

} // namespace detail

/**
 * Exhaustive oracle over GF(p): tries every monic Q of degree deg P / d and
 * every monic h of degree d. Pairs are visited with Q in the outer loop,
 * each coefficient tuple (constant term first) in ascending lexicographic
 * order; the first hit is the witness.
 */
inline DecomposabilityVerdict brute_force_decompose(const Poly& P, unsigned d)
{
    const Domain& field = P.domain();
    if (!field.is_prime_field())
        throw Error(ErrorCode::InvalidArgument, "brute force needs a prime field, got " + field.to_string());
    if (d < 2) throw Error(ErrorCode::InvalidD, "d must be at least 2, got " + std::to_string(d));
    if (!P.is_monic()) throw Error(ErrorCode::NotMonic, "polynomial is not monic");
    const std::size_t n = P.degree().value();
    if (n == 0 || n % d != 0)
        throw Error(ErrorCode::DegreeNotDivisible,
                    "d = " + std::to_string(d) + " does not divide deg P = " + std::to_string(n));
    const std::size_t m = n / d;
    const std::uint32_t p = field.modulus();

    std::uint64_t count = 1;
    for (std::size_t k = 0; k < m + d; ++k) {
        count *= p;
        if (count > brute_force_limit)
            throw Error(ErrorCode::TooLarge, "enumeration exceeds " + std::to_string(brute_force_limit) + " pairs");
    }

    DecomposabilityVerdict verdict;
    std::vector<std::uint32_t> q_digits(m, 0);
    do {
        const Poly Q = detail::monic_from_digits(field, P.variable(), q_digits);
        std::vector<std::uint32_t> h_digits(d, 0);
        do {
            Poly h = detail::monic_from_digits(field, "t", h_digits);
            if (compose(h, Q) == P) {
                verdict.decomposable = true;
                verdict.witness = Witness{std::move(h), Q};
                return verdict;
            }
        } while (detail::next_tuple(h_digits, p));
    } while (detail::next_tuple(q_digits, p));
    return verdict;
}

} // namespace polydecomp

#endif // POLYDECOMP_DECIDE_HPP
