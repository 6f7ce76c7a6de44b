#ifndef POLYDECOMP_POLY_HPP
#define POLYDECOMP_POLY_HPP

#include <polydecomp/domain.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

namespace polydecomp {

/// Polynomial degree with the zero polynomial's degree ordered below every
/// natural number, so strict bounds like deg R < n - m hold for R = 0.
class Degree {
public:
    constexpr Degree() noexcept = default;
    constexpr Degree(std::size_t value) noexcept : finite_(true), value_(value) {}

    static constexpr Degree minus_infinity() noexcept { return Degree{}; }

    constexpr bool is_minus_infinity() const noexcept { return !finite_; }

    std::size_t value() const
    {
        if (!finite_) throw Error(ErrorCode::InvalidArgument, "degree of the zero polynomial");
        return value_;
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept
    {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept
    {
        if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
        return a.finite_ ? a.value_ <=> b.value_ : std::strong_ordering::equal;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    bool finite_ = false;
    std::size_t value_ = 0;
};

/**
 * Dense univariate polynomial in `variable` with coefficients in `domain`,
 * stored in ascending order with no trailing zeros.
 *
 * Poly over A in x is the same thing as an Element of the tower A[x]; the
 * two views convert freely with from_element() / to_element().
 */
class Poly {
public:
    Poly(Domain domain, std::string variable, Element::Coefficients coeffs = {})
        : domain_(std::move(domain)), variable_(std::move(variable)), coeffs_(std::move(coeffs))
    {
        if (!detail::valid_identifier(variable_))
            throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + variable_ + "'");
        if (domain_.has_variable(variable_))
            throw Error(ErrorCode::InvalidArgument,
                        "variable '" + variable_ + "' already occurs in " + domain_.to_string());
        for (const auto& c : coeffs_) require_same_domain(c.domain(), domain_);
        detail::trim(coeffs_);
    }

    static Poly zero(const Domain& d, const std::string& var) { return Poly(d, var); }
    static Poly one(const Domain& d, const std::string& var) { return constant(d, var, Element::one(d)); }
    static Poly constant(const Domain& d, const std::string& var, const Element& c)
    {
        return Poly(d, var, {c});
    }
    static Poly monomial(const Domain& d, const std::string& var, const Element& c, std::size_t exponent)
    {
        Element::Coefficients coeffs(exponent + 1, Element::zero(d));
        coeffs[exponent] = c;
        return Poly(d, var, std::move(coeffs));
    }
    /// The polynomial `var` itself.
    static Poly identity(const Domain& d, const std::string& var)
    {
        return monomial(d, var, Element::one(d), 1);
    }
    /// Builds a Poly from integer coefficients, ascending.
    static Poly from_integers(const Domain& d, const std::string& var, std::initializer_list<long> coeffs)
    {
        Element::Coefficients c;
        for (long v : coeffs) c.push_back(Element::from_integer(d, v));
        return Poly(d, var, std::move(c));
    }

    static Poly from_element(const Element& e)
    {
        const Domain& ring = e.domain();
        if (!ring.is_poly_ring())
            throw Error(ErrorCode::InvalidArgument, ring.to_string() + " is not a polynomial ring");
        return Poly(ring.base(), ring.variable(), e.coefficients());
    }

    Element to_element() const
    {
        return Element::from_coefficients(Domain::poly_ring(domain_, variable_), coeffs_);
    }

    const Domain& domain() const noexcept { return domain_; }
    const std::string& variable() const noexcept { return variable_; }
    const Element::Coefficients& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept
    {
        return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
    }

    /// Coefficient of variable^i; zero beyond the degree.
    Element coeff(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Element::zero(domain_);
    }

    Element leading() const { return coeffs_.empty() ? Element::zero(domain_) : coeffs_.back(); }

    /// Leading coefficient equals 1 of the domain; for towers that is the
    /// constant polynomial 1.
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    Poly with_variable(std::string var) const { return Poly(domain_, std::move(var), coeffs_); }

    Poly operator-() const { return Poly(domain_, variable_, detail::dense_neg(coeffs_)); }

    friend Poly operator+(const Poly& f, const Poly& g)
    {
        require_compatible(f, g);
        return Poly(f.domain_, f.variable_, detail::dense_add(f.coeffs_, g.coeffs_));
    }
    friend Poly operator-(const Poly& f, const Poly& g)
    {
        require_compatible(f, g);
        return Poly(f.domain_, f.variable_, detail::dense_sub(f.coeffs_, g.coeffs_));
    }
    friend Poly operator*(const Poly& f, const Poly& g)
    {
        require_compatible(f, g);
        return Poly(f.domain_, f.variable_, detail::dense_mul(f.coeffs_, g.coeffs_));
    }
    friend Poly operator*(const Element& s, const Poly& f)
    {
        require_same_domain(s.domain(), f.domain_);
        return Poly(f.domain_, f.variable_, detail::dense_scale(f.coeffs_, s));
    }
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    friend bool operator==(const Poly& f, const Poly& g)
    {
        return f.domain_ == g.domain_ && f.variable_ == g.variable_ && f.coeffs_ == g.coeffs_;
    }

private:
    static void require_compatible(const Poly& f, const Poly& g)
    {
        require_same_domain(f.domain_, g.domain_);
        if (f.variable_ != g.variable_)
            throw Error(ErrorCode::VariableMismatch,
                        "variable mismatch: " + f.variable_ + " vs " + g.variable_);
    }

    Domain domain_;
    std::string variable_;
    Element::Coefficients coeffs_;
};

inline Element coeff(const Poly& f, std::size_t i) { return f.coeff(i); }
inline bool is_monic(const Poly& f) { return f.is_monic(); }

/// f^e by repeated squaring; f^0 = 1.
inline Poly power(const Poly& f, unsigned e)
{
    Poly result = Poly::one(f.domain(), f.variable());
    Poly square = f;
    for (; e; e >>= 1) {
        if (e & 1) result *= square;
        if (e > 1) square *= square;
    }
    return result;
}

/// h(q) by Horner's scheme. The result lives in q's variable; h's variable
/// is only a formal name.
inline Poly compose(const Poly& h, const Poly& q)
{
    require_same_domain(h.domain(), q.domain());
    Poly result = Poly::zero(q.domain(), q.variable());
    const auto& c = h.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        result = result * q + Poly::constant(q.domain(), q.variable(), *it);
    return result;
}

} // namespace polydecomp

#endif // POLYDECOMP_POLY_HPP
