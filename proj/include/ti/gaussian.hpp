#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ti {

// Arbitrary-precision rational. mpq_class keeps the canonical form we rely
// on everywhere: lowest terms, denominator > 0.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with arbitrary-precision decimal digits.
Rational rational_from_string(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

// Exact complex number with rational real and imaginary parts. All field
// operations stay exact; conversion to floating point happens only at
// evaluation boundaries.
class GaussianComplex {
public:
    GaussianComplex() : _re(0), _im(0) {}
    GaussianComplex(long value) : _re(value), _im(0) {}
    GaussianComplex(const Rational& re) : _re(re), _im(0) {}
    GaussianComplex(Rational re, Rational im) : _re(std::move(re)), _im(std::move(im)) {}

    static GaussianComplex i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return _re; }
    const Rational& im() const { return _im; }

    bool is_zero() const { return _re == 0 && _im == 0; }
    bool is_real() const { return _im == 0; }

    GaussianComplex conj() const { return {_re, -_im}; }

    // Throws std::domain_error on zero.
    GaussianComplex inverse() const;

    std::complex<double> to_complex() const { return {_re.get_d(), _im.get_d()}; }

    GaussianComplex& operator+=(const GaussianComplex& rhs);
    GaussianComplex& operator-=(const GaussianComplex& rhs);
    GaussianComplex& operator*=(const GaussianComplex& rhs);
    GaussianComplex& operator/=(const GaussianComplex& rhs);

    friend GaussianComplex operator+(GaussianComplex a, const GaussianComplex& b) { return a += b; }
    friend GaussianComplex operator-(GaussianComplex a, const GaussianComplex& b) { return a -= b; }
    friend GaussianComplex operator*(GaussianComplex a, const GaussianComplex& b) { return a *= b; }
    friend GaussianComplex operator/(GaussianComplex a, const GaussianComplex& b) { return a /= b; }
    friend GaussianComplex operator-(const GaussianComplex& a) { return {-a._re, -a._im}; }

    friend bool operator==(const GaussianComplex& a, const GaussianComplex& b) {
        return a._re == b._re && a._im == b._im;
    }
    friend bool operator!=(const GaussianComplex& a, const GaussianComplex& b) { return !(a == b); }

    // "0", "1/2", "i", "-3*i", "(1/2+2*i)"; unambiguous as a multiplicative
    // prefix of a monomial.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussianComplex& v);

private:
    Rational _re;
    Rational _im;
};

} // namespace ti
