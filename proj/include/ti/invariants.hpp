#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ti/polynomial.hpp"
#include "ti/templates.hpp"

namespace ti {

// An invariant of the rotation action: a polynomial in moment variables
// with real coefficients, exactly annihilated by E1, E2, E3.
struct NamedInvariant {
    std::string name;
    Polynomial polynomial; // a_{j,k,l} spelling; rename to eta for output
    int order = 0;         // max j+k+l over its variables
    int degree = 0;
};

// I_d for even d: the multinomial-weighted sum of even-index moment
// variables of total order d. Supported for 2 <= d <= 16; odd d raises
// domain_error("no degree-one invariant exists for odd order").
NamedInvariant degree_one_invariant(int d);

// Linear substitution of moment polynomials for template variables.
struct Realization {
    enum class Source { computed, tabulated };
    Source source = Source::computed;
    std::map<Variable, Polynomial> map;
};

// Solved from the operator algebra: lowest weight vectors of the order-2
// and order-3 blocks extended to standard bases. Covers v0 (order 2, s=0),
// y0..y4 (order 2, s=4), x0..x2 (order 3, s=2), u0..u6 (order 3, s=6), and
// a0..a4 as an alias of y0..y4 for the binary-form templates.
const Realization& standard_basis_realization();

// The fixed eigenvector coordinate lists e0..e5, c1..c3, b1..b7.
const Realization& eigenvector_realization();

// Substitutes r into t and expands. A template variable of t that r does
// not cover raises domain_error naming it.
Polynomial realize(const InvariantTemplate& t, const Realization& r);

// Divides p by the Gaussian-rational scalar that makes every coefficient
// real and the leading coefficient positive. Zero input or a genuinely
// complex p raises domain_error("not proportional to a real polynomial").
Polynomial normalize_real(const Polynomial& p);

// True iff E1(p) = E2(p) = E3(p) = 0 exactly.
bool verify_annihilated(const Polynomial& p);

enum class InvariantSet { polynomial, rational };

// order 2 -> {I1, I2, I3} (either set; the generating set is the same).
// order 3, polynomial -> B0..B12, the joint invariants of the isotypic
//   decomposition, each normalized via normalize_real.
// order 3, rational -> od..ch5 realized through the eigenvector
//   coordinates, kept verbatim (each is checked to pass normalize_real).
// Every output passes verify_annihilated; other orders raise domain_error.
std::vector<NamedInvariant> generate_invariants(
    int order, InvariantSet set, const TemplateLibrary& lib = TemplateLibrary::builtin());

// Exact rank over the rationals of the |invs| x |vars| matrix of partial
// derivatives evaluated at point. Every variable of every polynomial must
// be a key of point.
int jacobian_rank(const std::vector<Polynomial>& invs, const std::vector<Variable>& vars,
                  const std::map<Variable, Rational>& point);

// Fixed integer assignment of the 16 eigenvector coordinates at which the
// order-3 rational generators have Jacobian rank 13.
const std::map<Variable, Rational>& independence_test_point();

// Size of a minimal generating set for invariants of moments of order d:
// C(d+3,3) - 7.
mpz_class generator_count(int d);

// Dimensions of the spaces of order-3 invariants by polynomial degree,
// computed by weight counting over the 16 weighted basis vectors of the
// order-3 module (degree-n invariant count = #{weight-0 monomials} -
// #{weight-2 monomials}).
std::vector<mpz_class> poincare_coefficients(int max_degree);

// Serialization spelling: every a_{j,k,l} repainted as eta_{j,k,l}.
Polynomial to_eta_names(const Polynomial& p);

} // namespace ti
