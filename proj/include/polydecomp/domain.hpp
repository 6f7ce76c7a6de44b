#ifndef POLYDECOMP_DOMAIN_HPP
#define POLYDECOMP_DOMAIN_HPP

#include <polydecomp/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polydecomp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * A coefficient ring: the rationals, a prime field GF(p), or a univariate
 * polynomial ring over another Domain. Multivariate rings are towers of
 * univariate ones; the outermost variable is the one named by variable().
 *
 * Domain is a cheap handle to an immutable node and compares structurally.
 */
class Domain {
public:
    enum class Kind { Rationals, PrimeField, PolyRing };

    static Domain rationals();
    static Domain prime_field(std::uint64_t p);
    static Domain poly_ring(const Domain& base, std::string variable);

    Kind kind() const noexcept;
    bool is_rationals() const noexcept { return kind() == Kind::Rationals; }
    bool is_prime_field() const noexcept { return kind() == Kind::PrimeField; }
    bool is_poly_ring() const noexcept { return kind() == Kind::PolyRing; }
    bool is_field() const noexcept { return !is_poly_ring(); }

    /// Prime modulus; only meaningful for PrimeField.
    std::uint32_t modulus() const;
    /// Coefficient ring of a PolyRing.
    const Domain& base() const;
    /// Variable of a PolyRing.
    const std::string& variable() const;

    /// The field at the bottom of the tower.
    const Domain& ground() const;
    /// Tower variables, outermost first. Empty for fields.
    std::vector<std::string> variables() const;
    bool has_variable(const std::string& name) const;

    std::uint64_t characteristic() const noexcept;

    /// "Q", "GF(7)", "Q[y][x]" (innermost variable first, like K[y][x]).
    std::string to_string() const;

    friend bool operator==(const Domain& a, const Domain& b) noexcept;

private:
    struct Node;
    explicit Domain(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct Domain::Node {
    Kind kind;
    std::uint32_t modulus = 0;
    std::optional<Domain> base;
    std::string variable;
};

namespace detail {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

inline bool valid_identifier(const std::string& s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

} // namespace detail

inline Domain Domain::rationals()
{
    static const Domain q{std::make_shared<const Node>(Node{Kind::Rationals, 0, std::nullopt, {}})};
    return q;
}

inline Domain Domain::prime_field(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31))
        throw Error(ErrorCode::InvalidArgument, "prime modulus must be below 2^31");
    if (!detail::is_prime(p))
        throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    return Domain{std::make_shared<const Node>(
        Node{Kind::PrimeField, static_cast<std::uint32_t>(p), std::nullopt, {}})};
}

inline Domain Domain::poly_ring(const Domain& base, std::string variable)
{
    if (!detail::valid_identifier(variable))
        throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + variable + "'");
    if (base.has_variable(variable))
        throw Error(ErrorCode::InvalidArgument,
                    "variable '" + variable + "' already occurs in " + base.to_string());
    return Domain{std::make_shared<const Node>(Node{Kind::PolyRing, 0, base, std::move(variable)})};
}

inline Domain::Kind Domain::kind() const noexcept { return node_->kind; }

inline std::uint32_t Domain::modulus() const
{
    if (!is_prime_field()) throw Error(ErrorCode::InvalidArgument, "not a prime field");
    return node_->modulus;
}

inline const Domain& Domain::base() const
{
    if (!is_poly_ring()) throw Error(ErrorCode::InvalidArgument, "not a polynomial ring");
    return *node_->base;
}

inline const std::string& Domain::variable() const
{
    if (!is_poly_ring()) throw Error(ErrorCode::InvalidArgument, "not a polynomial ring");
    return node_->variable;
}

inline const Domain& Domain::ground() const
{
    const Domain* d = this;
    while (d->is_poly_ring()) d = &d->base();
    return *d;
}

inline std::vector<std::string> Domain::variables() const
{
    std::vector<std::string> out;
    for (const Domain* d = this; d->is_poly_ring(); d = &d->base())
        out.push_back(d->variable());
    return out;
}

inline bool Domain::has_variable(const std::string& name) const
{
    for (const Domain* d = this; d->is_poly_ring(); d = &d->base())
        if (d->variable() == name) return true;
    return false;
}

inline std::uint64_t Domain::characteristic() const noexcept
{
    const Domain& g = ground();
    return g.is_prime_field() ? g.node_->modulus : 0;
}

inline std::string Domain::to_string() const
{
    switch (kind()) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "GF(" + std::to_string(node_->modulus) + ")";
    case Kind::PolyRing: return base().to_string() + "[" + variable() + "]";
    }
    return {};
}

inline bool operator==(const Domain& a, const Domain& b) noexcept
{
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Domain::Kind::Rationals: return true;
    case Domain::Kind::PrimeField: return a.node_->modulus == b.node_->modulus;
    case Domain::Kind::PolyRing:
        return a.node_->variable == b.node_->variable && *a.node_->base == *b.node_->base;
    }
    return false;
}

/**
 * One value of a Domain, always held in canonical form: reduced rationals
 * with positive denominator, residues in [0, p), and polynomial values with
 * no trailing (leading-degree) zero coefficients.
 */
class Element {
public:
    /// Ascending coefficients of a PolyRing value, each in the base domain.
    using Coefficients = std::vector<Element>;

    static Element zero(const Domain& d);
    static Element one(const Domain& d);
    static Element from_integer(const Domain& d, const Integer& n);
    static Element from_rational(const Domain& d, const Rational& r);
    /// Lifts a value of a coefficient ring somewhere below `d` into `d`.
    static Element constant(const Domain& d, const Element& inner);
    static Element from_coefficients(const Domain& ring, Coefficients coeffs);
    /// The tower variable `name` as an element of `d`.
    static Element generator(const Domain& d, const std::string& name);

    const Domain& domain() const noexcept { return domain_; }

    bool is_zero() const noexcept;
    bool is_one() const;

    const Rational& rational() const { return std::get<Rational>(value_); }
    std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
    const Coefficients& coefficients() const { return std::get<Coefficients>(value_); }

    /// True when the value lies in the ground field of the tower.
    bool is_ground_constant() const;
    /// The ground-field value of a ground constant.
    Element ground_value() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    Element& operator*=(const Element& b) { return *this = *this * b; }

    friend bool operator==(const Element& a, const Element& b);

private:
    using Value = std::variant<Rational, std::uint32_t, Coefficients>;
    Element(Domain d, Value v) : domain_(std::move(d)), value_(std::move(v)) {}

    Domain domain_;
    Value value_;
};

inline void require_same_domain(const Domain& a, const Domain& b)
{
    if (!(a == b))
        throw Error(ErrorCode::DomainMismatch,
                    "domain mismatch: " + a.to_string() + " vs " + b.to_string());
}

namespace detail {

inline std::uint32_t reduce(const Integer& n, std::uint32_t p)
{
    Integer r = n % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^(p-2)
    std::uint32_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
    }
    return result;
}

inline void trim(Element::Coefficients& c)
{
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Dense ascending-coefficient arithmetic shared by PolyRing elements and Poly.
// Callers guarantee that all coefficients live in one domain.

inline Element::Coefficients dense_add(const Element::Coefficients& a, const Element::Coefficients& b)
{
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    Element::Coefficients out = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = a[i] + b[i];
    trim(out);
    return out;
}

inline Element::Coefficients dense_neg(const Element::Coefficients& a)
{
    Element::Coefficients out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(-c);
    return out;
}

inline Element::Coefficients dense_sub(const Element::Coefficients& a, const Element::Coefficients& b)
{
    Element::Coefficients out = a;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i < out.size())
            out[i] = out[i] - b[i];
        else
            out.push_back(-b[i]);
    }
    trim(out);
    return out;
}

inline Element::Coefficients dense_mul(const Element::Coefficients& a, const Element::Coefficients& b)
{
    if (a.empty() || b.empty()) return {};
    Element::Coefficients out(a.size() + b.size() - 1, Element::zero(a.front().domain()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

inline Element::Coefficients dense_scale(const Element::Coefficients& a, const Element& s)
{
    Element::Coefficients out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(c * s);
    trim(out);
    return out;
}

} // namespace detail

inline Element Element::zero(const Domain& d)
{
    switch (d.kind()) {
    case Domain::Kind::Rationals: return Element(d, Rational(0));
    case Domain::Kind::PrimeField: return Element(d, std::uint32_t{0});
    case Domain::Kind::PolyRing: return Element(d, Coefficients{});
    }
    throw Error(ErrorCode::InvalidArgument, "unknown domain kind");
}

inline Element Element::one(const Domain& d) { return from_integer(d, 1); }

inline Element Element::from_integer(const Domain& d, const Integer& n)
{
    switch (d.kind()) {
    case Domain::Kind::Rationals: return Element(d, Rational(n));
    case Domain::Kind::PrimeField: return Element(d, detail::reduce(n, d.modulus()));
    case Domain::Kind::PolyRing: {
        Coefficients c{from_integer(d.base(), n)};
        detail::trim(c);
        return Element(d, std::move(c));
    }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown domain kind");
}

inline Element Element::from_rational(const Domain& d, const Rational& r)
{
    switch (d.kind()) {
    case Domain::Kind::Rationals: return Element(d, r);
    case Domain::Kind::PrimeField: {
        const std::uint32_t p = d.modulus();
        const std::uint32_t den = detail::reduce(denominator(r), p);
        if (den == 0)
            throw Error(ErrorCode::NotInvertible,
                        "denominator " + denominator(r).str() + " is zero in " + d.to_string());
        return Element(d, detail::mul_mod(detail::reduce(numerator(r), p), detail::inv_mod(den, p), p));
    }
    case Domain::Kind::PolyRing: {
        Coefficients c{from_rational(d.base(), r)};
        detail::trim(c);
        return Element(d, std::move(c));
    }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown domain kind");
}

inline Element Element::constant(const Domain& d, const Element& inner)
{
    if (inner.domain() == d) return inner;
    if (!d.is_poly_ring())
        throw Error(ErrorCode::DomainMismatch,
                    "cannot embed " + inner.domain().to_string() + " into " + d.to_string());
    Coefficients c{constant(d.base(), inner)};
    detail::trim(c);
    return Element(d, std::move(c));
}

inline Element Element::from_coefficients(const Domain& ring, Coefficients coeffs)
{
    if (!ring.is_poly_ring())
        throw Error(ErrorCode::InvalidArgument, ring.to_string() + " is not a polynomial ring");
    for (const auto& c : coeffs) require_same_domain(c.domain(), ring.base());
    detail::trim(coeffs);
    return Element(ring, std::move(coeffs));
}

inline Element Element::generator(const Domain& d, const std::string& name)
{
    if (!d.is_poly_ring())
        throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    if (d.variable() == name)
        return Element(d, Coefficients{zero(d.base()), one(d.base())});
    return Element(d, Coefficients{generator(d.base(), name)});
}

inline bool Element::is_zero() const noexcept
{
    switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return std::get<1>(value_) == 0;
    default: return std::get<2>(value_).empty();
    }
}

inline bool Element::is_one() const
{
    switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_) == 1;
    default: {
        const auto& c = std::get<2>(value_);
        return c.size() == 1 && c.front().is_one();
    }
    }
}

inline bool Element::is_ground_constant() const
{
    if (!domain_.is_poly_ring()) return true;
    const auto& c = coefficients();
    return c.empty() || (c.size() == 1 && c.front().is_ground_constant());
}

inline Element Element::ground_value() const
{
    if (!domain_.is_poly_ring()) return *this;
    if (!is_ground_constant())
        throw Error(ErrorCode::InvalidArgument, "element is not a constant of the ground field");
    const auto& c = coefficients();
    return c.empty() ? zero(domain_.ground()) : c.front().ground_value();
}

inline Element Element::operator-() const
{
    switch (value_.index()) {
    case 0: return Element(domain_, Rational(-std::get<0>(value_)));
    case 1: {
        const std::uint32_t r = std::get<1>(value_);
        return Element(domain_, r == 0 ? 0u : domain_.modulus() - r);
    }
    default: return Element(domain_, detail::dense_neg(std::get<2>(value_)));
    }
}

inline Element operator+(const Element& a, const Element& b)
{
    require_same_domain(a.domain_, b.domain_);
    switch (a.value_.index()) {
    case 0: return Element(a.domain_, Rational(a.rational() + b.rational()));
    case 1: {
        const std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
        return Element(a.domain_, static_cast<std::uint32_t>(s % a.domain_.modulus()));
    }
    default: return Element(a.domain_, detail::dense_add(a.coefficients(), b.coefficients()));
    }
}

inline Element operator-(const Element& a, const Element& b)
{
    require_same_domain(a.domain_, b.domain_);
    switch (a.value_.index()) {
    case 0: return Element(a.domain_, Rational(a.rational() - b.rational()));
    case 1: {
        const std::uint32_t p = a.domain_.modulus();
        return Element(a.domain_, static_cast<std::uint32_t>((std::uint64_t{a.residue()} + p - b.residue()) % p));
    }
    default: return Element(a.domain_, detail::dense_sub(a.coefficients(), b.coefficients()));
    }
}

inline Element operator*(const Element& a, const Element& b)
{
    require_same_domain(a.domain_, b.domain_);
    switch (a.value_.index()) {
    case 0: return Element(a.domain_, Rational(a.rational() * b.rational()));
    case 1: return Element(a.domain_, detail::mul_mod(a.residue(), b.residue(), a.domain_.modulus()));
    default: return Element(a.domain_, detail::dense_mul(a.coefficients(), b.coefficients()));
    }
}

inline bool operator==(const Element& a, const Element& b)
{
    return a.domain_ == b.domain_ && a.value_ == b.value_;
}

/// 1/(m·1) in `d`. Units of A[y] are the units of A, so towers delegate to
/// their base. Throws NotInvertible when the characteristic divides m.
inline Element invert_integer(const Domain& d, const Integer& m)
{
    if (m == 0) throw Error(ErrorCode::NotInvertible, "0 is not invertible");
    switch (d.kind()) {
    case Domain::Kind::Rationals: return Element::from_rational(d, Rational(1) / Rational(m));
    case Domain::Kind::PrimeField: {
        const std::uint32_t p = d.modulus();
        const std::uint32_t r = detail::reduce(m, p);
        if (r == 0)
            throw Error(ErrorCode::NotInvertible,
                        m.str() + " is not invertible in " + d.to_string() + " (characteristic divides it)");
        return Element::from_integer(d, detail::inv_mod(r, p));
    }
    case Domain::Kind::PolyRing: return Element::constant(d, invert_integer(d.base(), m));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown domain kind");
}

/// Multiplicative inverse of a unit.
inline Element inverse(const Element& e)
{
    const Domain& d = e.domain();
    if (e.is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
    switch (d.kind()) {
    case Domain::Kind::Rationals: return Element::from_rational(d, Rational(1) / e.rational());
    case Domain::Kind::PrimeField:
        return Element::from_integer(d, detail::inv_mod(e.residue(), d.modulus()));
    case Domain::Kind::PolyRing:
        if (e.coefficients().size() != 1)
            throw Error(ErrorCode::NotInvertible, "non-constant element of " + d.to_string() + " is not a unit");
        return Element::constant(d, inverse(e.coefficients().front()));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown domain kind");
}

inline Element pow(const Element& base, unsigned exponent)
{
    Element result = Element::one(base.domain());
    Element square = base;
    for (; exponent; exponent >>= 1) {
        if (exponent & 1) result *= square;
        if (exponent > 1) square *= square;
    }
    return result;
}

inline std::uint64_t characteristic(const Domain& d) noexcept { return d.characteristic(); }

} // namespace polydecomp

#endif // POLYDECOMP_DOMAIN_HPP
