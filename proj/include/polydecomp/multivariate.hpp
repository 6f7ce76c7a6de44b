#ifndef POLYDECOMP_MULTIVARIATE_HPP
#define POLYDECOMP_MULTIVARIATE_HPP

#include <polydecomp/poly.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace polydecomp {

// Helpers for viewing tower elements as sparse multivariate polynomials
// over the ground field.

/// A ground-field coefficient times a monomial; exponents line up with a
/// variable list supplied alongside.
struct Term {
    std::vector<unsigned> exponents;
    Element coefficient;
};

/// Variables of f, main variable first, then the tower outermost first.
inline std::vector<std::string> variables_of(const Poly& f)
{
    std::vector<std::string> vars{f.variable()};
    for (auto& v : f.domain().variables()) vars.push_back(std::move(v));
    return vars;
}

namespace detail {

inline void collect_terms(const Element& e, std::vector<unsigned>& prefix, std::vector<Term>& out)
{
    if (!e.domain().is_poly_ring()) {
        if (!e.is_zero()) out.push_back(Term{prefix, e});
        return;
    }
    const auto& c = e.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        prefix.push_back(static_cast<unsigned>(i));
        collect_terms(c[i], prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Nonzero terms of a tower element in descending lexicographic order,
/// exponents indexed like e.domain().variables().
inline std::vector<Term> terms_of(const Element& e)
{
    std::vector<Term> out;
    std::vector<unsigned> prefix;
    detail::collect_terms(e, prefix, out);
    return out;
}

/// Terms of f, exponents indexed like variables_of(f).
inline std::vector<Term> terms_of(const Poly& f)
{
    std::vector<Term> out;
    std::vector<unsigned> prefix;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        prefix.assign(1, static_cast<unsigned>(i));
        detail::collect_terms(c[i], prefix, out);
    }
    return out;
}

/// Reassembles terms over `vars` into an element of `ring`, which must
/// contain every variable that carries a nonzero exponent.
inline Element element_from_terms(const Domain& ring, const std::vector<std::string>& vars,
                                  const std::vector<Term>& terms)
{
    Element sum = Element::zero(ring);
    for (const auto& term : terms) {
        Element monomial = Element::constant(ring, term.coefficient);
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (term.exponents[k] != 0) monomial *= pow(Element::generator(ring, vars[k]), term.exponents[k]);
        sum += monomial;
    }
    return sum;
}

/// Re-nests f so that `main_var` is the polynomial variable and the other
/// variables form the coefficient tower in their current order.
inline Poly with_main_variable(const Poly& f, const std::string& main_var)
{
    const auto vars = variables_of(f);
    if (std::find(vars.begin(), vars.end(), main_var) == vars.end())
        throw Error(ErrorCode::UnknownVariable, "unknown variable '" + main_var + "'");
    if (vars.front() == main_var) return f;

    Domain tower = f.domain().ground();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        if (*it != main_var) tower = Domain::poly_ring(tower, *it);
    const Domain ring = Domain::poly_ring(tower, main_var);
    return Poly::from_element(element_from_terms(ring, vars, terms_of(f)));
}

/// Lifts a polynomial over a coefficient ring into a larger tower.
inline Poly embed(const Poly& f, const Domain& target)
{
    Element::Coefficients c;
    c.reserve(f.coefficients().size());
    for (const auto& e : f.coefficients()) c.push_back(Element::constant(target, e));
    return Poly(target, f.variable(), std::move(c));
}

/// Evaluates a tower element at a point of the ground field.
inline Element evaluate(const Element& e, const std::map<std::string, Element>& point)
{
    if (!e.domain().is_poly_ring()) return e;
    const auto it = point.find(e.domain().variable());
    if (it == point.end())
        throw Error(ErrorCode::UnknownVariable, "no value for '" + e.domain().variable() + "'");
    Element acc = Element::zero(e.domain().ground());
    const auto& c = e.coefficients();
    for (auto ci = c.rbegin(); ci != c.rend(); ++ci) acc = acc * it->second + evaluate(*ci, point);
    return acc;
}

} // namespace polydecomp

#endif // POLYDECOMP_MULTIVARIATE_HPP
