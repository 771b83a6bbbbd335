#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ti {

// A polynomial indeterminate. Two kinds:
//   - moment variables a_{j,k,l} (j,k,l >= 0), optionally carrying the
//     normalized-moment spelling eta_{j,k,l} used for serialization; the
//     spelling participates in identity but both denote the same coordinate
//     to the differential operators and to evaluation,
//   - template variables fam_idx with fam in {v,x,y,u,e,c,b,a}, the abstract
//     coordinates that invariant templates are written in.
//
// Total order: moment variables first, lexicographic by (j,k,l) then
// spelling; template variables by family then index.
class Variable {
public:
    enum class Kind : std::uint8_t { moment, templ };

    static Variable moment(int j, int k, int l, bool eta = false);
    static Variable templ(char family, int index);

    Kind kind() const { return _kind; }
    bool is_moment() const { return _kind == Kind::moment; }

    // Moment accessors; contract-checked.
    int j() const;
    int k() const;
    int l() const;
    bool eta() const;
    int order() const; // j + k + l

    // Template accessors; contract-checked.
    char family() const;
    int index() const;

    // a_2_0_0 / eta_2_0_0 / u_3
    std::string name() const;
    // Inverse of name(); throws parse_error.
    static Variable from_name(const std::string& name);

    friend std::strong_ordering operator<=>(const Variable& a, const Variable& b);
    friend bool operator==(const Variable& a, const Variable& b) = default;

private:
    Kind _kind = Kind::moment;
    bool _eta = false;
    char _family = 0;
    std::int16_t _a = 0;
    std::int16_t _b = 0;
    std::int16_t _c = 0;
};

// Product of variables with positive exponents, kept sorted by variable.
// Ordered graded-lexicographically: by total degree, then by the expanded
// variable word (so a002^2 < a002*a020 < a011^2 within degree 2).
class Monomial {
public:
    Monomial() = default; // the constant monomial, degree 0
    explicit Monomial(const Variable& v) : _factors{{v, 1}} {}
    Monomial(std::vector<std::pair<Variable, int>> sorted_factors);

    static Monomial from_factors(std::vector<std::pair<Variable, int>> factors);

    const std::vector<std::pair<Variable, int>>& factors() const { return _factors; }
    bool is_constant() const { return _factors.empty(); }
    int degree() const;
    int exponent(const Variable& v) const;

    Monomial operator*(const Monomial& rhs) const;

    // a_0_0_2^2*a_0_1_1
    std::string str() const;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<std::pair<Variable, int>> _factors;
};

} // namespace ti
