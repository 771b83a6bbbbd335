#include "ti/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ti {

Polynomial Polynomial::constant(const GaussianComplex& c) {
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(const Variable& v) {
    Polynomial p;
    p.add_term(Monomial(v), GaussianComplex(1));
    return p;
}

Polynomial Polynomial::term(const GaussianComplex& c, const Monomial& m) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::from_terms(TermMap terms) {
    Polynomial p;
    for (auto& [m, c] : terms)
        if (!c.is_zero())
            p._terms.emplace(m, c);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [m, c] : _terms)
        d = std::max(d, m.degree());
    return d;
}

std::vector<Variable> Polynomial::variables() const {
    std::vector<Variable> out;
    for (const auto& [m, c] : _terms)
        for (const auto& [v, e] : m.factors())
            out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Polynomial::has_template_variables() const {
    for (const auto& [m, c] : _terms)
        for (const auto& [v, e] : m.factors())
            if (!v.is_moment())
                return true;
    return false;
}

GaussianComplex Polynomial::coeff(const Monomial& m) const {
    auto it = _terms.find(m);
    return it == _terms.end() ? GaussianComplex() : it->second;
}

const std::pair<const Monomial, GaussianComplex>& Polynomial::lead() const {
    if (_terms.empty())
        throw std::logic_error("lead() of the zero polynomial");
    return *_terms.begin();
}

void Polynomial::add_term(const Monomial& m, const GaussianComplex& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = _terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            _terms.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs._terms)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs._terms)
        add_term(m, -c);
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out;
    for (const auto& [m, c] : a._terms)
        out._terms.emplace(m, -c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a._terms)
        for (const auto& [mb, cb] : b._terms)
            out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial operator*(const GaussianComplex& c, const Polynomial& p) {
    Polynomial out;
    if (c.is_zero())
        return out;
    for (const auto& [m, pc] : p._terms)
        out._terms.emplace(m, c * pc);
    return out;
}

Polynomial Polynomial::conj() const {
    Polynomial out;
    for (const auto& [m, c] : _terms)
        out._terms.emplace(m, c.conj());
    return out;
}

Polynomial Polynomial::diff(const Variable& v) const {
    Polynomial out;
    for (const auto& [m, c] : _terms) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        std::vector<std::pair<Variable, int>> factors;
        for (const auto& [w, we] : m.factors()) {
            int ne = (w == v) ? we - 1 : we;
            if (ne > 0)
                factors.emplace_back(w, ne);
        }
        out.add_term(Monomial(std::move(factors)), GaussianComplex(e) * c);
    }
    return out;
}

namespace {

Polynomial poly_pow(const Polynomial& base, int e) {
    Polynomial out = Polynomial::constant(GaussianComplex(1));
    for (int i = 0; i < e; ++i)
        out = out * base;
    return out;
}

} // namespace

Polynomial Polynomial::subst(const std::map<Variable, Polynomial>& map) const {
    Polynomial out;
    for (const auto& [m, c] : _terms) {
        Polynomial term = constant(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = map.find(v);
            if (it == map.end()) {
                Monomial pass = Monomial::from_factors({{v, e}});
                term = term * Polynomial::term(GaussianComplex(1), pass);
            } else {
                term = term * poly_pow(it->second, e);
            }
        }
        out += term;
    }
    return out;
}

std::complex<double> Polynomial::eval(const std::map<Variable, std::complex<double>>& assignment) const {
    std::complex<double> out = 0.0;
    for (const auto& [m, c] : _terms) {
        std::complex<double> term = c.to_complex();
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("unassigned variable " + v.name());
            for (int i = 0; i < e; ++i)
                term *= it->second;
        }
        out += term;
    }
    return out;
}

GaussianComplex Polynomial::eval_exact(const std::map<Variable, GaussianComplex>& assignment) const {
    GaussianComplex out;
    for (const auto& [m, c] : _terms) {
        GaussianComplex term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("unassigned variable " + v.name());
            for (int i = 0; i < e; ++i)
                term *= it->second;
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::rename_moment_spelling(bool eta) const {
    Polynomial out;
    for (const auto& [m, c] : _terms) {
        std::vector<std::pair<Variable, int>> factors;
        for (const auto& [v, e] : m.factors()) {
            Variable w = v.is_moment() ? Variable::moment(v.j(), v.k(), v.l(), eta) : v;
            factors.emplace_back(w, e);
        }
        out.add_term(Monomial::from_factors(std::move(factors)), c);
    }
    return out;
}

std::string Polynomial::str() const {
    if (_terms.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : _terms) {
        bool first = out.empty();
        bool negative = false;
        std::string body;
        if (c.is_real() || c.re() == 0) {
            Rational mag = c.is_real() ? c.re() : c.im();
            negative = mag < 0;
            if (negative)
                mag = -mag;
            std::string num;
            if (!(mag == 1) || (c.is_real() && m.is_constant()))
                num = to_string(mag);
            if (!c.is_real())
                num += num.empty() ? "i" : "*i";
            body = num;
            if (!m.is_constant()) {
                if (!body.empty())
                    body += "*";
                body += m.str();
            }
        } else {
            body = c.str();
            if (!m.is_constant())
                body += "*" + m.str();
        }
        if (first)
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

std::optional<GaussianComplex> poly_proportional(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero())
        return p.is_zero() ? std::optional<GaussianComplex>(GaussianComplex(1)) : std::nullopt;
    if (p.is_zero())
        return std::nullopt;
    if (p.term_count() != q.term_count())
        return std::nullopt;
    GaussianComplex pivot = q.coeff(p.lead().first);
    if (pivot.is_zero())
        return std::nullopt;
    GaussianComplex lambda = p.lead().second / pivot;
    auto ip = p.terms().begin();
    auto iq = q.terms().begin();
    for (; ip != p.terms().end(); ++ip, ++iq) {
        if (!(ip->first == iq->first) || ip->second != lambda * iq->second)
            return std::nullopt;
    }
    return lambda;
}

} // namespace ti
