#include "ti/variable.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "ti/errors.hpp"

namespace ti {

namespace {

const std::string kFamilies = "vxyuecba";

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_small_int(const std::string& s, const std::string& context) {
    if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw parse_error("malformed variable name '" + context + "'");
    return std::stoi(s);
}

} // namespace

Variable Variable::moment(int j, int k, int l, bool eta) {
    if (j < 0 || k < 0 || l < 0)
        throw std::invalid_argument("moment variable indices must be non-negative");
    Variable v;
    v._kind = Kind::moment;
    v._eta = eta;
    v._a = static_cast<std::int16_t>(j);
    v._b = static_cast<std::int16_t>(k);
    v._c = static_cast<std::int16_t>(l);
    return v;
}

Variable Variable::templ(char family, int index) {
    if (kFamilies.find(family) == std::string::npos)
        throw std::invalid_argument(std::string("unknown template family '") + family + "'");
    if (index < 0)
        throw std::invalid_argument("template variable index must be non-negative");
    Variable v;
    v._kind = Kind::templ;
    v._family = family;
    v._a = static_cast<std::int16_t>(index);
    return v;
}

int Variable::j() const {
    if (_kind != Kind::moment) throw std::logic_error("j() on a template variable");
    return _a;
}

int Variable::k() const {
    if (_kind != Kind::moment) throw std::logic_error("k() on a template variable");
    return _b;
}

int Variable::l() const {
    if (_kind != Kind::moment) throw std::logic_error("l() on a template variable");
    return _c;
}

bool Variable::eta() const {
    if (_kind != Kind::moment) throw std::logic_error("eta() on a template variable");
    return _eta;
}

int Variable::order() const {
    if (_kind != Kind::moment) throw std::logic_error("order() on a template variable");
    return _a + _b + _c;
}

char Variable::family() const {
    if (_kind != Kind::templ) throw std::logic_error("family() on a moment variable");
    return _family;
}

int Variable::index() const {
    if (_kind != Kind::templ) throw std::logic_error("index() on a moment variable");
    return _a;
}

std::string Variable::name() const {
    if (_kind == Kind::moment) {
        std::string head = _eta ? "eta" : "a";
        return head + "_" + std::to_string(_a) + "_" + std::to_string(_b) + "_" + std::to_string(_c);
    }
    return std::string(1, _family) + "_" + std::to_string(_a);
}

Variable Variable::from_name(const std::string& name) {
    auto parts = split(name, '_');
    if (parts.size() == 4 && (parts[0] == "a" || parts[0] == "eta")) {
        int j = parse_small_int(parts[1], name);
        int k = parse_small_int(parts[2], name);
        int l = parse_small_int(parts[3], name);
        return moment(j, k, l, parts[0] == "eta");
    }
    if (parts.size() == 2 && parts[0].size() == 1 && kFamilies.find(parts[0][0]) != std::string::npos)
        return templ(parts[0][0], parse_small_int(parts[1], name));
    throw parse_error("malformed variable name '" + name + "'");
}

std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (a._kind != b._kind)
        return a._kind == Variable::Kind::moment ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a._kind == Variable::Kind::moment)
        return std::tie(a._a, a._b, a._c, a._eta) <=> std::tie(b._a, b._b, b._c, b._eta);
    return std::tie(a._family, a._a) <=> std::tie(b._family, b._a);
}

Monomial::Monomial(std::vector<std::pair<Variable, int>> sorted_factors) : _factors(std::move(sorted_factors)) {
    for (std::size_t i = 0; i < _factors.size(); ++i) {
        if (_factors[i].second <= 0)
            throw std::invalid_argument("monomial exponents must be positive");
        if (i > 0 && !(_factors[i - 1].first < _factors[i].first))
            throw std::invalid_argument("monomial factors must be strictly sorted");
    }
}

Monomial Monomial::from_factors(std::vector<std::pair<Variable, int>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Variable, int>> merged;
    for (auto& [v, e] : factors) {
        if (e == 0)
            continue;
        if (e < 0)
            throw std::invalid_argument("monomial exponents must be positive");
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    return Monomial(std::move(merged));
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : _factors)
        d += e;
    return d;
}

int Monomial::exponent(const Variable& v) const {
    for (const auto& [w, e] : _factors)
        if (w == v)
            return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    std::vector<std::pair<Variable, int>> out;
    out.reserve(_factors.size() + rhs._factors.size());
    auto a = _factors.begin();
    auto b = rhs._factors.begin();
    while (a != _factors.end() && b != rhs._factors.end()) {
        if (a->first < b->first)
            out.push_back(*a++);
        else if (b->first < a->first)
            out.push_back(*b++);
        else {
            out.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, _factors.end());
    out.insert(out.end(), b, rhs._factors.end());
    return Monomial(std::move(out));
}

std::string Monomial::str() const {
    if (_factors.empty())
        return "1";
    std::string out;
    for (const auto& [v, e] : _factors) {
        if (!out.empty())
            out += "*";
        out += v.name();
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    // Lexicographic comparison of the expanded variable words; exponents act
    // as run lengths so the walk never materializes the words.
    auto ia = a._factors.begin();
    auto ib = b._factors.begin();
    int ra = ia == a._factors.end() ? 0 : ia->second;
    int rb = ib == b._factors.end() ? 0 : ib->second;
    while (ia != a._factors.end() && ib != b._factors.end()) {
        if (auto c = ia->first <=> ib->first; c != 0)
            return c;
        int step = std::min(ra, rb);
        ra -= step;
        rb -= step;
        if (ra == 0 && ++ia != a._factors.end())
            ra = ia->second;
        if (rb == 0 && ++ib != b._factors.end())
            rb = ib->second;
    }
    // Equal degree means the words end together.
    return std::strong_ordering::equal;
}

} // namespace ti
