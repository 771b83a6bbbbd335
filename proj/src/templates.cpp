#include "ti/templates.hpp"

#include <cctype>
#include <utility>

#include "ti/errors.hpp"

namespace ti {
namespace detail {
// Defined in the build-generated translation unit embedding data/templates.
const std::vector<std::pair<std::string, std::string>>& embedded_template_sources();
} // namespace detail

namespace {

constexpr const char* kFamilies = "vxyuecba";

struct Token {
    enum class Type { integer, variable, plus, minus, star, caret, end };
    Type type;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : _src(src) { advance(); }

    const Token& peek() const { return _tok; }

    Token take() {
        Token t = _tok;
        advance();
        return t;
    }

private:
    void advance() {
        while (_pos < _src.size()) {
            char c = _src[_pos];
            if (c == '#') {
                while (_pos < _src.size() && _src[_pos] != '\n') ++_pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++_pos;
            } else {
                break;
            }
        }
        if (_pos >= _src.size()) {
            _tok = {Token::Type::end, "", _pos};
            return;
        }
        const std::size_t start = _pos;
        char c = _src[_pos];
        if (c == '+' || c == '-' || c == '*' || c == '^') {
            ++_pos;
            auto type = c == '+'   ? Token::Type::plus
                        : c == '-' ? Token::Type::minus
                        : c == '*' ? Token::Type::star
                                   : Token::Type::caret;
            _tok = {type, std::string(1, c), start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos])))
                ++_pos;
            _tok = {Token::Type::integer, _src.substr(start, _pos - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++_pos;
            while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos])))
                ++_pos;
            _tok = {Token::Type::variable, _src.substr(start, _pos - start), start};
            return;
        }
        throw parse_error("template expression: unexpected character '" + std::string(1, c) +
                          "' at offset " + std::to_string(start));
    }

    const std::string& _src;
    std::size_t _pos = 0;
    Token _tok;
};

[[noreturn]] void fail(const Token& t, const std::string& expected) {
    std::string got = t.type == Token::Type::end ? "end of input" : "'" + t.text + "'";
    throw parse_error("template expression: expected " + expected + ", got " + got +
                      " at offset " + std::to_string(t.pos));
}

Variable variable_from_token(const Token& t) {
    const std::string& s = t.text;
    if (s.size() < 2 || std::string(kFamilies).find(s[0]) == std::string::npos)
        fail(t, "a template variable (family letter in {v,x,y,u,e,c,b,a} plus index)");
    return Variable::templ(s[0], std::stoi(s.substr(1)));
}

Polynomial parse_factor(Lexer& lex) {
    Token t = lex.take();
    Polynomial base;
    if (t.type == Token::Type::integer) {
        base = Polynomial::constant(GaussianComplex(rational_from_string(t.text)));
    } else if (t.type == Token::Type::variable) {
        base = Polynomial::variable(variable_from_token(t));
    } else {
        fail(t, "an integer or a variable");
    }
    if (lex.peek().type == Token::Type::caret) {
        lex.take();
        Token e = lex.take();
        if (e.type != Token::Type::integer) fail(e, "an exponent");
        int n = std::stoi(e.text);
        if (n < 1) fail(e, "a positive exponent");
        Polynomial power = base;
        for (int i = 1; i < n; ++i) power = power * base;
        return power;
    }
    return base;
}

Polynomial parse_term(Lexer& lex) {
    Polynomial product = parse_factor(lex);
    while (lex.peek().type == Token::Type::star) {
        lex.take();
        product = product * parse_factor(lex);
    }
    return product;
}

} // namespace

Polynomial parse_template_expression(const std::string& text) {
    Lexer lex(text);
    Polynomial sum;
    bool negate = false;
    if (lex.peek().type == Token::Type::plus || lex.peek().type == Token::Type::minus) {
        negate = lex.take().type == Token::Type::minus;
    }
    while (true) {
        Polynomial term = parse_term(lex);
        sum += negate ? -term : term;
        Token t = lex.take();
        if (t.type == Token::Type::end) return sum;
        if (t.type == Token::Type::plus)
            negate = false;
        else if (t.type == Token::Type::minus)
            negate = true;
        else
            fail(t, "'+', '-' or end of input");
    }
}

TemplateLibrary::TemplateLibrary(const std::map<std::string, std::string>& sources) {
    for (const auto& [name, text] : sources) {
        Polynomial body = parse_template_expression(text);
        if (body.is_zero())
            throw domain_error("template " + name + " is empty");
        mpz_class content = 0;
        for (const auto& [mono, coeff] : body.terms()) {
            if (!coeff.is_real() || coeff.re().get_den() != 1)
                throw domain_error("template " + name + " has a non-integer coefficient");
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                    coeff.re().get_num().get_mpz_t());
            for (const auto& [var, exp] : mono.factors()) {
                (void)exp;
                if (var.is_moment())
                    throw domain_error("template " + name + " uses a moment variable");
            }
        }
        // Primitivity pins the scale of every body, so even a pure rescaling
        // of a one-term template is rejected rather than silently accepted.
        if (content != 1)
            throw domain_error("template " + name + " is not primitive (integer content " +
                               content.get_str() + ")");
        _table.emplace(name, InvariantTemplate{name, std::move(body)});
    }
}

const TemplateLibrary& TemplateLibrary::builtin() {
    static const TemplateLibrary lib = [] {
        std::map<std::string, std::string> sources;
        for (const auto& [name, text] : detail::embedded_template_sources())
            sources.emplace(name, text);
        return TemplateLibrary(sources);
    }();
    return lib;
}

bool TemplateLibrary::contains(const std::string& name) const {
    return _table.count(name) != 0;
}

const InvariantTemplate& TemplateLibrary::get(const std::string& name) const {
    auto it = _table.find(name);
    if (it == _table.end())
        throw domain_error("unknown invariant template " + name);
    return it->second;
}

std::vector<std::string> TemplateLibrary::names() const {
    std::vector<std::string> out;
    out.reserve(_table.size());
    for (const auto& [name, tpl] : _table) out.push_back(name);
    return out;
}

TemplateLibrary TemplateLibrary::with_replacement(const std::string& name, Polynomial body) const {
    TemplateLibrary copy;
    copy._table = _table;
    auto it = copy._table.find(name);
    if (it == copy._table.end())
        throw domain_error("unknown invariant template " + name);
    it->second.body = std::move(body);
    return copy;
}

const std::vector<std::string>& TemplateLibrary::polynomial_names() {
    static const std::vector<std::string> names = {
        "B0", "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10", "B11", "B12"};
    return names;
}

const std::vector<std::string>& TemplateLibrary::rational_names() {
    static const std::vector<std::string> names = {
        "od", "dv1", "dv2", "dv3", "tr1", "tr2", "tr3", "tr4",
        "ch1", "ch2", "ch3", "ch4", "ch5"};
    return names;
}

const std::vector<std::string>& TemplateLibrary::binary_names() {
    static const std::vector<std::string> names = {"S1", "S2"};
    return names;
}

} // namespace ti
