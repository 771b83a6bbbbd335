#include "ti/gaussian.hpp"

#include <ostream>

#include "ti/errors.hpp"

namespace ti {

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational literal");
    std::string body = text;
    if (body.find('/') == std::string::npos)
        body += "/1";
    mpq_class q;
    if (q.set_str(body, 10) != 0)
        throw parse_error("malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw parse_error("zero denominator in rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

GaussianComplex GaussianComplex::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero GaussianComplex");
    Rational norm = _re * _re + _im * _im;
    return {_re / norm, -_im / norm};
}

GaussianComplex& GaussianComplex::operator+=(const GaussianComplex& rhs) {
    _re += rhs._re;
    _im += rhs._im;
    return *this;
}

GaussianComplex& GaussianComplex::operator-=(const GaussianComplex& rhs) {
    _re -= rhs._re;
    _im -= rhs._im;
    return *this;
}

GaussianComplex& GaussianComplex::operator*=(const GaussianComplex& rhs) {
    Rational re = _re * rhs._re - _im * rhs._im;
    _im = _re * rhs._im + _im * rhs._re;
    _re = std::move(re);
    return *this;
}

GaussianComplex& GaussianComplex::operator/=(const GaussianComplex& rhs) {
    return *this *= rhs.inverse();
}

std::string GaussianComplex::str() const {
    if (_im == 0)
        return to_string(_re);
    std::string im_part;
    if (_im == 1)
        im_part = "i";
    else if (_im == -1)
        im_part = "-i";
    else
        im_part = to_string(_im) + "*i";
    if (_re == 0)
        return im_part;
    std::string joined = to_string(_re);
    if (im_part[0] != '-')
        joined += "+";
    return "(" + joined + im_part + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianComplex& v) {
    return os << v.str();
}

} // namespace ti
