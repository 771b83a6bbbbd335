#pragma once

#include <map>
#include <string>
#include <vector>

#include "ti/polynomial.hpp"

namespace ti {

// A named invariant template: a polynomial with integer coefficients in
// abstract template variables (standard-basis components v/x/y/u, the
// eigenvector coordinates e/c/b, or binary-form coefficients a0..a4).
// Realizing the template substitutes moment polynomials for the template
// variables and yields an invariant.
struct InvariantTemplate {
    std::string name;
    Polynomial body;

    std::vector<Variable> variables() const { return body.variables(); }
    int degree() const { return body.degree(); }
};

// Parses the template expression language:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' positive-integer]
//   atom   := integer | variable            variable := family letter + index
// '#' starts a comment running to end of line; whitespace is free.
// Throws parse_error with a byte offset on malformed input.
Polynomial parse_template_expression(const std::string& text);

// The built-in template tables plus any test-constructed variants. Lookup
// is by name; the fixed name lists below drive invariant generation.
class TemplateLibrary {
public:
    // Parses and validates every source: nonzero body, integer coefficients
    // with unit content (primitive), template variables only. Violations
    // raise domain_error naming the template.
    explicit TemplateLibrary(const std::map<std::string, std::string>& sources);

    // Parsed from the checked-in template data compiled into the library.
    static const TemplateLibrary& builtin();

    bool contains(const std::string& name) const;
    const InvariantTemplate& get(const std::string& name) const;
    std::vector<std::string> names() const;

    // Copy with one template body replaced; used to exercise detection of
    // corrupted tables. Unknown name throws domain_error.
    TemplateLibrary with_replacement(const std::string& name, Polynomial body) const;

    // Joint invariants of the order-3 decomposition, B0..B12, in degree order.
    static const std::vector<std::string>& polynomial_names();
    // Minimal generating set in eigenvector coordinates, od..ch5.
    static const std::vector<std::string>& rational_names();
    // Binary-form invariants S1 (apolar), S2 (catalecticant).
    static const std::vector<std::string>& binary_names();

private:
    TemplateLibrary() = default;
    std::map<std::string, InvariantTemplate> _table;
};

} // namespace ti
