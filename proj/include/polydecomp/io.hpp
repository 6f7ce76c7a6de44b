#ifndef POLYDECOMP_IO_HPP
#define POLYDECOMP_IO_HPP

#include <polydecomp/decide.hpp>
#include <polydecomp/decomp.hpp>
#include <polydecomp/multivariate.hpp>
#include <polydecomp/variety.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace polydecomp {

/// "Q" or "gf:<p>".
inline Domain parse_field(std::string_view spec)
{
    if (spec == "Q" || spec == "q") return Domain::rationals();
    if (spec.substr(0, 3) == "gf:" && spec.size() > 3) {
        const std::string digits(spec.substr(3));
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
            digits.size() <= 10)
            return Domain::prime_field(std::stoull(digits));
    }
    throw Error(ErrorCode::InvalidArgument, "bad field '" + std::string(spec) + "', expected Q or gf:<p>");
}

/// K[v_1][v_2]...: the coefficient ring for a polynomial in `main_var` whose
/// other variables, in the given order, form the tower outermost first.
inline Domain coefficient_tower(const Domain& field, const std::vector<std::string>& variables,
                                const std::string& main_var)
{
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!detail::valid_identifier(v)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, "variable '" + v + "' listed twice");
    }
    if (!seen.count(main_var))
        throw Error(ErrorCode::UnknownVariable, "main variable '" + main_var + "' is not among the variables");
    Domain tower = field;
    for (auto it = variables.rbegin(); it != variables.rend(); ++it)
        if (*it != main_var) tower = Domain::poly_ring(tower, *it);
    return tower;
}

namespace detail {

// Recursive descent over the grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | ident | '(' expr ')' | '-' factor
// evaluating directly in the target ring.
class PolyParser {
public:
    PolyParser(std::string_view text, Domain ring) : text_(text), ring_(std::move(ring)) {}

    Element parse()
    {
        skip_space();
        if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
        Element e = expr();
        skip_space();
        if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    static constexpr unsigned max_exponent = 100000;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Element expr()
    {
        Element acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Element term()
    {
        Element acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Element factor()
    {
        Element base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            const Integer e = uint();
            if (e > max_exponent) throw SyntaxError(at, "exponent too large");
            return pow(base, e.convert_to<unsigned>());
        }
        return base;
    }

    Element atom()
    {
        skip_space();
        if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (accept('(')) {
            Element inner = expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return inner;
        }
        if (accept('-')) return -factor();
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    Integer uint()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(pos_, "expected an unsigned integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Element rational()
    {
        const std::size_t start = pos_;
        const Integer num = uint();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_space();
            const Integer den = uint();
            if (den == 0) throw Error(ErrorCode::DivisionByZeroLiteral, "division by zero at position " + std::to_string(start));
            try {
                return Element::from_rational(ring_, Rational(num, den));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotInvertible) throw;
                throw Error(ErrorCode::DivisionByZeroLiteral,
                            "denominator vanishes in " + ring_.ground().to_string() + " at position " +
                                std::to_string(start));
            }
        }
        return Element::from_integer(ring_, num);
    }

    Element identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (!ring_.has_variable(name))
            throw Error(ErrorCode::UnknownVariable,
                        "unknown variable '" + name + "' at position " + std::to_string(start));
        return Element::generator(ring_, name);
    }

    std::string_view text_;
    Domain ring_;
    std::size_t pos_ = 0;
};

inline std::string rational_text(const Rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string ground_text(const Element& c)
{
    return c.domain().is_rationals() ? rational_text(c.rational()) : std::to_string(c.residue());
}

inline std::string format_terms(const std::vector<Term>& terms, const std::vector<std::string>& vars)
{
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& term : terms) {
        std::string monomial;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            const unsigned e = term.exponents[k];
            if (e == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += vars[k];
            if (e > 1) monomial += "^" + std::to_string(e);
        }

        bool negative = false;
        Element magnitude = term.coefficient;
        if (magnitude.domain().is_rationals() && magnitude.rational() < 0) {
            negative = true;
            magnitude = -magnitude;
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";

        if (monomial.empty())
            out += ground_text(magnitude);
        else if (magnitude.is_one())
            out += monomial;
        else
            out += ground_text(magnitude) + "*" + monomial;
    }
    return out;
}

inline Element parse_ground(const nlohmann::json& j, const Domain& field)
{
    if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "coefficient must be a string");
    const std::string s = j.get<std::string>();
    std::size_t i = 0;
    const bool negative = !s.empty() && s[0] == '-';
    if (negative) ++i;
    auto digits = [&](std::size_t from) {
        std::size_t k = from;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        return k;
    };
    const std::size_t num_end = digits(i);
    if (num_end == i) throw Error(ErrorCode::InvalidArgument, "bad coefficient '" + s + "'");
    Integer num(s.substr(i, num_end - i));
    Integer den = 1;
    if (num_end < s.size()) {
        if (s[num_end] != '/' || !field.is_rationals())
            throw Error(ErrorCode::InvalidArgument, "bad coefficient '" + s + "'");
        const std::size_t den_end = digits(num_end + 1);
        if (den_end != s.size() || den_end == num_end + 1)
            throw Error(ErrorCode::InvalidArgument, "bad coefficient '" + s + "'");
        den = Integer(s.substr(num_end + 1));
        if (den == 0) throw Error(ErrorCode::DivisionByZeroLiteral, "zero denominator in '" + s + "'");
    }
    if (field.is_prime_field() && (negative || num >= field.modulus()))
        throw Error(ErrorCode::InvalidArgument, "residue '" + s + "' outside [0, p)");
    return Element::from_rational(field, Rational(negative ? Integer(-num) : num, den));
}

} // namespace detail

/// Parses `text` as a polynomial in `main_var` over K[other variables].
inline Poly parse_poly(std::string_view text, const Domain& field, const std::vector<std::string>& variables,
                       const std::string& main_var)
{
    const Domain tower = coefficient_tower(field, variables, main_var);
    const Domain ring = Domain::poly_ring(tower, main_var);
    return Poly::from_element(detail::PolyParser(text, ring).parse());
}

inline Poly parse_poly(std::string_view text, const Domain& field, const std::vector<std::string>& variables)
{
    if (variables.empty()) throw Error(ErrorCode::InvalidArgument, "no variables given");
    return parse_poly(text, field, variables, variables.front());
}

/// Expanded text in descending lexicographic order, e.g. "x^3 + 3*x^2 - 9/2*x + 27/2".
inline std::string format_poly(const Poly& f) { return detail::format_terms(terms_of(f), variables_of(f)); }

inline std::string format_element(const Element& e)
{
    return detail::format_terms(terms_of(e), e.domain().variables());
}

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << format_poly(f); }
inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << format_element(e); }

inline nlohmann::json element_to_json(const Element& e)
{
    const Domain& d = e.domain();
    if (!d.is_poly_ring()) return detail::ground_text(e);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : e.coefficients()) coeffs.push_back(element_to_json(c));
    return {{"var", d.variable()}, {"coeffs", std::move(coeffs)}};
}

/// {"var": <name>, "coeffs": [...]}, ascending exponents.
inline nlohmann::json poly_to_json(const Poly& f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(element_to_json(c));
    return {{"var", f.variable()}, {"coeffs", std::move(coeffs)}};
}

namespace detail {

inline std::pair<std::string, Element::Coefficients> poly_parts_from_json(const nlohmann::json& j,
                                                                          const Domain& coefficient_domain);

inline Element element_from_json(const nlohmann::json& j, const Domain& d)
{
    if (!d.is_poly_ring()) return parse_ground(j, d);
    auto [var, coeffs] = poly_parts_from_json(j, d.base());
    if (var != d.variable())
        throw Error(ErrorCode::VariableMismatch, "expected variable '" + d.variable() + "', got '" + var + "'");
    return Element::from_coefficients(d, std::move(coeffs));
}

inline std::pair<std::string, Element::Coefficients> poly_parts_from_json(const nlohmann::json& j,
                                                                          const Domain& coefficient_domain)
{
    if (!j.is_object() || !j.contains("var") || !j.contains("coeffs") || !j["var"].is_string() ||
        !j["coeffs"].is_array())
        throw Error(ErrorCode::InvalidArgument, "polynomial JSON needs \"var\" and \"coeffs\"");
    Element::Coefficients coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(element_from_json(c, coefficient_domain));
    if (!coeffs.empty() && coeffs.back().is_zero())
        throw Error(ErrorCode::InvalidArgument, "polynomial JSON has a zero leading coefficient");
    return {j["var"].get<std::string>(), std::move(coeffs)};
}

} // namespace detail

/// Inverse of poly_to_json for a polynomial whose coefficients lie in
/// `coefficient_domain`.
inline Poly poly_from_json(const nlohmann::json& j, const Domain& coefficient_domain)
{
    auto [var, coeffs] = detail::poly_parts_from_json(j, coefficient_domain);
    return Poly(coefficient_domain, std::move(var), std::move(coeffs));
}

inline nlohmann::json report_to_json(const VerifyReport& r)
{
    return {{"monic", r.monic},
            {"degree_bound", r.degree_bound},
            {"index_condition", r.index_condition},
            {"reconstruction", r.reconstruction}};
}

inline nlohmann::json decomposition_to_json(const Poly& P, const Decomposition& dec)
{
    return {{"h", poly_to_json(dec.h)},
            {"Q", poly_to_json(dec.Q)},
            {"R", poly_to_json(dec.R)},
            {"d", dec.d},
            {"conditions", report_to_json(verify(P, dec))}};
}

inline nlohmann::json verdict_to_json(const DecomposabilityVerdict& v)
{
    nlohmann::json j{{"decomposable", v.decomposable}, {"h_in_ground_field", v.h_in_ground_field}};
    j["witness"] = v.witness ? nlohmann::json{{"h", poly_to_json(v.witness->h)}, {"Q", poly_to_json(v.witness->Q)}}
                             : nlohmann::json(nullptr);
    j["residual"] = v.residual ? poly_to_json(*v.residual) : nlohmann::json(nullptr);
    j["normalization"] = v.normalization ? element_to_json(*v.normalization) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json variety_to_json(const VarietySystem& s)
{
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& eq : s.equations)
        eqs.push_back({{"index", eq.index}, {"poly", element_to_json(eq.polynomial)}, {"text", format_element(eq.polynomial)}});
    return {{"n", s.n}, {"d", s.d}, {"indeterminates", s.indeterminates}, {"equations", std::move(eqs)}};
}

} // namespace polydecomp

#endif // POLYDECOMP_IO_HPP
