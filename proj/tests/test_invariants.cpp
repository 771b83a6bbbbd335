#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "golden.hpp"
#include "ti/errors.hpp"
#include "ti/invariants.hpp"
#include "ti/linalg.hpp"
#include "ti/verify.hpp"

using namespace ti;

namespace {

GaussianComplex require_scalar(const Polynomial& p, const Polynomial& q) {
    auto lam = poly_proportional(p, q);
    REQUIRE(lam.has_value());
    REQUIRE_FALSE(lam->is_zero());
    return *lam;
}

std::map<std::string, NamedInvariant> by_name(const std::vector<NamedInvariant>& invs) {
    std::map<std::string, NamedInvariant> m;
    for (const auto& inv : invs)
        m.emplace(inv.name, inv);
    return m;
}

// exact rank of the coefficient matrix of the given polynomials
std::size_t coefficient_rank(const std::vector<Polynomial>& polys) {
    std::map<Monomial, std::size_t> columns;
    for (const Polynomial& p : polys)
        for (const auto& [mono, coeff] : p.terms()) {
            (void)coeff;
            columns.emplace(mono, columns.size());
        }
    Mat m(polys.size(), Vec(columns.size(), GaussianComplex()));
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [mono, coeff] : polys[r].terms())
            m[r][columns.at(mono)] = coeff;
    return rank(std::move(m));
}

} // namespace

TEST_CASE("degree-one invariants match the published displays") {
    for (int d : {2, 4, 6, 8}) {
        NamedInvariant inv = degree_one_invariant(d);
        CHECK(inv.polynomial == golden::degree_one_display(d));
        CHECK(inv.name == "I" + std::to_string(d));
        CHECK(inv.order == d);
        CHECK(inv.degree == 1);
    }
}

TEST_CASE("degree-one invariants are annihilated through order 16") {
    for (int d = 2; d <= 16; d += 2)
        CHECK(verify_annihilated(degree_one_invariant(d).polynomial));

    CHECK_THROWS_WITH_AS(degree_one_invariant(3), "no degree-one invariant exists for odd order",
                         domain_error);
    CHECK_THROWS_AS(degree_one_invariant(18), domain_error);
    CHECK_THROWS_AS(degree_one_invariant(0), domain_error);
}

TEST_CASE("standard basis realization spans all four blocks coherently") {
    const Realization& r = standard_basis_realization();
    CHECK(r.source == Realization::Source::computed);

    auto image = [&r](char family, int index) { return r.map.at(Variable::templ(family, index)); };

    CHECK(image('v', 0) == golden::v0());
    CHECK(image('x', 0) == golden::x0());
    CHECK(image('x', 1) == golden::x1());
    CHECK(image('x', 2) == golden::x2());
    CHECK(image('u', 0) == golden::u0());
    CHECK(image('u', 3) == golden::u3());
    CHECK(image('u', 6) == golden::u6());

    // the y block carries the solver's own normalization: one scalar, all five
    const GaussianComplex lam = require_scalar(image('y', 0), golden::y0());
    CHECK(require_scalar(image('y', 1), golden::y1()) == lam);
    CHECK(require_scalar(image('y', 2), golden::y2()) == lam);
    CHECK(require_scalar(image('y', 3), golden::y3()) == lam);
    CHECK(require_scalar(image('y', 4), golden::y4()) == lam);

    // binary-form coefficients alias the y block
    for (int k = 0; k <= 4; ++k)
        CHECK(image('a', k) == image('y', k));
}

TEST_CASE("eigenvector realization is the fixed coordinate table") {
    const Realization& r = eigenvector_realization();
    CHECK(r.source == Realization::Source::tabulated);
    REQUIRE(r.map.size() == 16);

    auto e = golden::e_list();
    auto c = golden::c_list();
    auto b = golden::b_list();
    for (int k = 0; k <= 5; ++k)
        CHECK(r.map.at(Variable::templ('e', k)) == e[static_cast<std::size_t>(k)]);
    for (int k = 1; k <= 3; ++k)
        CHECK(r.map.at(Variable::templ('c', k)) == c[static_cast<std::size_t>(k - 1)]);
    for (int k = 1; k <= 7; ++k)
        CHECK(r.map.at(Variable::templ('b', k)) == b[static_cast<std::size_t>(k - 1)]);
}

TEST_CASE("realized binary invariants land on the order-2 generators") {
    const TemplateLibrary& lib = TemplateLibrary::builtin();
    const Realization& r = standard_basis_realization();

    // the solver's y block is -i times the printed one; S1 is quadratic and
    // S2 cubic in it, so the printed -4/3 and 4i/27 pick up (-i)^2 and (-i)^3
    CHECK(require_scalar(realize(lib.get("S1"), r), golden::I2_display()) == golden::frac(4, 3));
    CHECK(require_scalar(realize(lib.get("S2"), r), golden::I3_display()) == golden::frac(-4, 27));
}

TEST_CASE("realized order-3 templates land on the closed forms") {
    const TemplateLibrary& lib = TemplateLibrary::builtin();
    const Realization& r = standard_basis_realization();

    CHECK(require_scalar(realize(lib.get("B1"), r), golden::B1_closed_form()) == golden::frac(4, 3));
    CHECK(require_scalar(realize(lib.get("B2"), r), golden::B2_closed_form()) == golden::frac(-1, 1));
    CHECK(require_scalar(realize(lib.get("B3"), r), golden::B3_closed_form()) == golden::frac(-8, 5));

    // renaming to the serialization spelling preserves the comparison
    Polynomial renamed = to_eta_names(realize(lib.get("B2"), r));
    CHECK(require_scalar(renamed, to_eta_names(golden::B2_closed_form())) == golden::frac(-1, 1));
}

TEST_CASE("realize rejects uncovered template variables") {
    const TemplateLibrary& lib = TemplateLibrary::builtin();
    try {
        realize(lib.get("od"), standard_basis_realization()); // e0 is not in the standard blocks
        FAIL("expected domain_error");
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("e_0") != std::string::npos);
    }
}

TEST_CASE("normalize_real") {
    Polynomial p = golden::i * (golden::a(2, 0, 0) + golden::a(0, 2, 0));
    CHECK(normalize_real(p) == golden::a(2, 0, 0) + golden::a(0, 2, 0));

    CHECK(normalize_real(GaussianComplex(-3) * golden::I2_display()) == golden::I2_display());

    CHECK_THROWS_WITH_AS(normalize_real(golden::a(2, 0, 0) + golden::i * golden::a(0, 2, 0)),
                         "not proportional to a real polynomial", domain_error);
    CHECK_THROWS_AS(normalize_real(Polynomial()), domain_error);
}

TEST_CASE("verify_annihilated") {
    CHECK(verify_annihilated(golden::I1_display()));
    CHECK(verify_annihilated(golden::I2_display()));
    CHECK(verify_annihilated(golden::I3_display()));
    CHECK_FALSE(verify_annihilated(golden::a(2, 0, 0)));
    CHECK_FALSE(verify_annihilated(golden::y0())); // weight vector, not invariant
}

TEST_CASE("order-2 generation reproduces the printed generators") {
    auto invs = generate_invariants(2, InvariantSet::polynomial);
    REQUIRE(invs.size() == 3);
    auto named = by_name(invs);

    CHECK(named.at("I1").polynomial == golden::I1_display());
    CHECK(named.at("I2").polynomial == golden::I2_display());
    CHECK(require_scalar(named.at("I3").polynomial, golden::I3_display()) == golden::frac(1, 2));

    std::vector<int> degrees;
    for (const auto& inv : invs)
        degrees.push_back(inv.degree);
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 2, 3});

    // both set flavours agree at order 2
    auto rational = generate_invariants(2, InvariantSet::rational);
    REQUIRE(rational.size() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(rational[k].polynomial == invs[k].polynomial);
}

TEST_CASE("order-3 polynomial generation") {
    auto invs = generate_invariants(3, InvariantSet::polynomial);
    REQUIRE(invs.size() == 13);

    std::vector<std::string> names;
    std::vector<int> degrees;
    for (const auto& inv : invs) {
        names.push_back(inv.name);
        degrees.push_back(inv.degree);
        CHECK(verify_annihilated(inv.polynomial));
        CHECK((inv.order == 2 || inv.order == 3));
        for (const auto& [mono, coeff] : inv.polynomial.terms()) {
            (void)mono;
            CHECK(coeff.is_real());
        }
    }
    CHECK(names == TemplateLibrary::polynomial_names());
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4});

    auto named = by_name(invs);
    CHECK(named.at("B0").polynomial == golden::I1_display());
    CHECK(named.at("B1").polynomial == golden::B1_closed_form());
    CHECK(named.at("B2").polynomial == golden::B2_closed_form());
    CHECK(named.at("B3").polynomial == golden::B3_closed_form());
}

TEST_CASE("order-3 rational generation keeps the realized bodies verbatim") {
    auto invs = generate_invariants(3, InvariantSet::rational);
    REQUIRE(invs.size() == 13);

    std::vector<std::string> names;
    for (const auto& inv : invs) {
        names.push_back(inv.name);
        CHECK(verify_annihilated(inv.polynomial));
    }
    CHECK(names == TemplateLibrary::rational_names());

    auto named = by_name(invs);
    CHECK(named.at("od").polynomial == golden::I1_display());
    CHECK(named.at("dv1").polynomial == golden::B2_closed_form());
    CHECK(named.at("dv2").polynomial == golden::B1_closed_form());
    CHECK(named.at("dv3").polynomial == golden::B3_closed_form());

    CHECK_THROWS_AS(generate_invariants(4, InvariantSet::polynomial), domain_error);
    CHECK_THROWS_AS(generate_invariants(1, InvariantSet::rational), domain_error);
}

TEST_CASE("jacobian rank of the rational set is 13 at the fixed point") {
    const TemplateLibrary& lib = TemplateLibrary::builtin();
    std::vector<Polynomial> bodies;
    for (const std::string& name : TemplateLibrary::rational_names())
        bodies.push_back(lib.get(name).body);
    const std::vector<Variable> vars = golden::rational_template_variables();

    CHECK(jacobian_rank(bodies, vars, independence_test_point()) == 13);
}

TEST_CASE("jacobian rank detects dependent rows") {
    Polynomial I1 = golden::I1_display();
    Polynomial I2 = golden::I2_display();
    std::vector<Variable> vars;
    std::map<Variable, Rational> point;
    for (const Variable& v : I2.variables()) { // superset of I1's variables
        vars.push_back(v);
        point.emplace(v, Rational(static_cast<long>(2 + vars.size())));
    }
    CHECK(jacobian_rank({I1}, vars, point) == 1);
    CHECK(jacobian_rank({I1, 2 * I1}, vars, point) == 1);
    CHECK(jacobian_rank({I1, I2}, vars, point) == 2);
}

TEST_CASE("frozen jacobian rows at the fixed point") {
    const TemplateLibrary& lib = TemplateLibrary::builtin();
    const std::vector<Variable> vars = golden::rational_template_variables();
    const auto& point = independence_test_point();

    std::map<Variable, GaussianComplex> assignment;
    for (const auto& [v, value] : point)
        assignment.emplace(v, GaussianComplex(value));

    auto row = [&](const std::string& name) {
        std::vector<GaussianComplex> out;
        for (const Variable& v : vars)
            out.push_back(lib.get(name).body.diff(v).eval_exact(assignment));
        return out;
    };

    auto od = row("od");
    auto od_want = golden::od_jacobian_row();
    REQUIRE(od.size() == od_want.size());
    for (std::size_t k = 0; k < od.size(); ++k)
        CHECK(od[k] == GaussianComplex(od_want[k]));

    auto ch3 = row("ch3");
    auto ch3_want = golden::ch3_jacobian_row();
    REQUIRE(ch3.size() == ch3_want.size());
    for (std::size_t k = 0; k < ch3.size(); ++k)
        CHECK(ch3[k] == GaussianComplex(ch3_want[k]));

    const GaussianComplex entry =
        lib.get("ch5").body.diff(Variable::templ('b', 7)).eval_exact(assignment);
    CHECK(entry.re() == Rational(mpz_class("294690615288")));
    CHECK(entry.im() == 0);
}

TEST_CASE("rank stays 13 at pseudorandom points") {
    const TemplateLibrary& lib = TemplateLibrary::builtin();
    std::vector<Polynomial> bodies;
    for (const std::string& name : TemplateLibrary::rational_names())
        bodies.push_back(lib.get(name).body);
    const std::vector<Variable> vars = golden::rational_template_variables();

    SplitMix64 rng(0x7a5ce);
    int full_rank = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::map<Variable, Rational> point;
        for (const Variable& v : vars)
            point.emplace(v, Rational(static_cast<long>(rng.next() % 999983) + 1));
        int r = jacobian_rank(bodies, vars, point);
        CHECK(r <= 13);
        if (r == 13)
            ++full_rank;
    }
    CHECK(full_rank == 20);
}

TEST_CASE("generator counts") {
    CHECK(generator_count(2) == 3);
    CHECK(generator_count(3) == 13);
    CHECK(generator_count(4) == 28);
    CHECK(generator_count(16) == 962);

    // dimension argument: 3 generators at order 2 plus one per new coordinate
    for (int d = 2; d <= 16; ++d) {
        mpz_class expected = 3;
        for (int k = 3; k <= d; ++k)
            expected += mpz_class((k + 2) * (k + 1) / 2);
        CHECK(generator_count(d) == expected);
    }
    CHECK_THROWS_AS(generator_count(1), domain_error);
}

TEST_CASE("series coefficients and low-degree cross-checks") {
    auto coeffs = poincare_coefficients(9);
    auto want = golden::poincare_head();
    REQUIRE(coeffs.size() == want.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        CHECK(coeffs[k] == want[k]);

    CHECK(poincare_coefficients(0) == std::vector<mpz_class>{1});

    // degree 2: the four products {B0^2, B1, B2, B3} are linearly independent
    auto named = by_name(generate_invariants(3, InvariantSet::polynomial));
    const Polynomial b0 = named.at("B0").polynomial;
    std::vector<Polynomial> degree2 = {b0 * b0, named.at("B1").polynomial,
                                       named.at("B2").polynomial, named.at("B3").polynomial};
    CHECK(coefficient_rank(degree2) == 4);
}

TEST_CASE("eta renaming is a pure respelling") {
    Polynomial p = golden::I2_display();
    Polynomial eta = to_eta_names(p);
    CHECK(eta.term_count() == p.term_count());
    for (const Variable& v : eta.variables())
        CHECK(v.eta());
    CHECK(to_eta_names(Polynomial()).is_zero());
    CHECK(eta.str().find("eta_0_0_2^2") == 0);

    // renaming round-trips through the moment spelling
    CHECK(eta.rename_moment_spelling(false) == p);
}
