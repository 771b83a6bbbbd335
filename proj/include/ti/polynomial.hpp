#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ti/gaussian.hpp"
#include "ti/variable.hpp"

namespace ti {

// Sparse multivariate polynomial over GaussianComplex. Invariants: no zero
// coefficients are stored, and terms iterate in the canonical graded-lex
// order of Monomial (ascending; matches the display order used throughout).
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianComplex>;

    Polynomial() = default; // zero
    static Polynomial constant(const GaussianComplex& c);
    static Polynomial variable(const Variable& v);
    static Polynomial term(const GaussianComplex& c, const Monomial& m);
    static Polynomial from_terms(TermMap terms); // drops zero coefficients

    const TermMap& terms() const { return _terms; }
    bool is_zero() const { return _terms.empty(); }
    std::size_t term_count() const { return _terms.size(); }
    int degree() const; // total degree; 0 for the zero polynomial
    std::vector<Variable> variables() const;
    bool has_template_variables() const;
    GaussianComplex coeff(const Monomial& m) const;

    // The normalization pivot: first term in canonical order. Throws
    // std::logic_error on the zero polynomial.
    const std::pair<const Monomial, GaussianComplex>& lead() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianComplex& c, const Polynomial& p);

    // Coefficient-wise complex conjugation (variables untouched).
    Polynomial conj() const;

    // Formal partial derivative.
    Polynomial diff(const Variable& v) const;

    // Replaces every mapped variable by its polynomial; unmapped variables
    // pass through.
    Polynomial subst(const std::map<Variable, Polynomial>& map) const;

    // Floating evaluation. Every variable of the polynomial must be
    // assigned; a missing one raises std::invalid_argument naming it.
    std::complex<double> eval(const std::map<Variable, std::complex<double>>& assignment) const;

    // Exact evaluation under the same coverage contract.
    GaussianComplex eval_exact(const std::map<Variable, GaussianComplex>& assignment) const;

    // Repaints the spelling flag of every moment variable (a_ <-> eta_).
    Polynomial rename_moment_spelling(bool eta) const;

    // Terms in canonical ascending order, e.g.
    // "a_0_0_2^2 - a_0_0_2*a_0_2_0 + 3*a_0_1_1^2".
    std::string str() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    TermMap _terms;

    void add_term(const Monomial& m, const GaussianComplex& c);
};

// The scalar lambda with p == lambda * q, if any. Conventions: both zero
// yields 1; exactly one zero yields nullopt.
std::optional<GaussianComplex> poly_proportional(const Polynomial& p, const Polynomial& q);

} // namespace ti
