#include "ti/invariants.hpp"

#include <stdexcept>
#include <utility>

#include "ti/errors.hpp"
#include "ti/linalg.hpp"
#include "ti/modules.hpp"
#include "ti/sl2.hpp"

namespace ti {

namespace {

Polynomial moment_poly(int j, int k, int l) {
    return Polynomial::variable(Variable::moment(j, k, l));
}

NamedInvariant make_named(std::string name, Polynomial p) {
    NamedInvariant inv;
    inv.name = std::move(name);
    inv.degree = p.degree();
    for (const Variable& v : p.variables())
        if (v.is_moment() && v.order() > inv.order) inv.order = v.order();
    inv.polynomial = std::move(p);
    return inv;
}

Polynomial unique_lowest_weight(const std::vector<int>& orders, int s) {
    auto basis = lowest_weight_vectors(orders, s);
    if (basis.size() != 1)
        throw std::logic_error("expected a unique lowest weight vector");
    return basis.front();
}

} // namespace

NamedInvariant degree_one_invariant(int d) {
    if (d % 2 != 0)
        throw domain_error("no degree-one invariant exists for odd order");
    if (d < 2 || d > 16)
        throw domain_error("degree-one invariants are provided for orders 2..16");
    const int m = d / 2;
    mpz_class m_fact;
    mpz_fac_ui(m_fact.get_mpz_t(), m);
    Polynomial::TermMap terms;
    for (int j = 0; j <= m; ++j) {
        for (int k = 0; j + k <= m; ++k) {
            const int l = m - j - k;
            mpz_class denom;
            mpz_fac_ui(denom.get_mpz_t(), j);
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), k);
            denom *= f;
            mpz_fac_ui(f.get_mpz_t(), l);
            denom *= f;
            Rational coeff(m_fact / denom);
            terms.emplace(Monomial(Variable::moment(2 * j, 2 * k, 2 * l)),
                          GaussianComplex(coeff));
        }
    }
    return make_named("I" + std::to_string(d), Polynomial::from_terms(std::move(terms)));
}

const Realization& standard_basis_realization() {
    static const Realization realization = [] {
        Realization r;
        r.source = Realization::Source::computed;
        r.map.emplace(Variable::templ('v', 0), unique_lowest_weight({2}, 0));
        auto span = [&r](char family, const Polynomial& z, int s) {
            auto basis = standard_basis(z, s);
            for (int k = 0; k <= s; ++k)
                r.map.emplace(Variable::templ(family, k), basis[static_cast<std::size_t>(k)]);
        };
        const Polynomial y0 = unique_lowest_weight({2}, 4);
        span('y', y0, 4);
        span('a', y0, 4); // binary-form coefficients a0..a4 = the order-2 basis
        span('x', unique_lowest_weight({3}, 2), 2);
        span('u', unique_lowest_weight({3}, 6), 6);
        return r;
    }();
    return realization;
}

const Realization& eigenvector_realization() {
    static const Realization realization = [] {
        Realization r;
        r.source = Realization::Source::tabulated;
        auto set = [&r](char family, int index, Polynomial p) {
            r.map.emplace(Variable::templ(family, index), std::move(p));
        };
        set('e', 0, moment_poly(0, 0, 2) + moment_poly(0, 2, 0) + moment_poly(2, 0, 0));
        set('e', 1, moment_poly(0, 1, 1));
        set('e', 2, moment_poly(0, 2, 0) - moment_poly(0, 0, 2));
        set('e', 3, moment_poly(1, 0, 1));
        set('e', 4, moment_poly(1, 1, 0));
        set('e', 5, moment_poly(2, 0, 0) - moment_poly(0, 0, 2));
        set('c', 1, moment_poly(0, 0, 3) + moment_poly(0, 2, 1) + moment_poly(2, 0, 1));
        set('c', 2, moment_poly(0, 1, 2) + moment_poly(0, 3, 0) + moment_poly(2, 1, 0));
        set('c', 3, moment_poly(1, 0, 2) + moment_poly(1, 2, 0) + moment_poly(3, 0, 0));
        set('b', 1, moment_poly(0, 0, 3) - GaussianComplex(3) * moment_poly(0, 2, 1));
        set('b', 2, moment_poly(0, 3, 0) - GaussianComplex(3) * moment_poly(0, 1, 2));
        set('b', 3, moment_poly(1, 1, 1));
        set('b', 4, moment_poly(1, 2, 0) - moment_poly(1, 0, 2));
        set('b', 5, moment_poly(2, 0, 1) - moment_poly(0, 2, 1));
        set('b', 6, moment_poly(2, 1, 0) - moment_poly(0, 1, 2));
        set('b', 7, moment_poly(3, 0, 0) - GaussianComplex(3) * moment_poly(1, 0, 2));
        return r;
    }();
    return realization;
}

Polynomial realize(const InvariantTemplate& t, const Realization& r) {
    for (const Variable& v : t.body.variables()) {
        if (!v.is_moment() && r.map.find(v) == r.map.end())
            throw domain_error("realization does not cover template variable " + v.name());
    }
    return t.body.subst(r.map);
}

Polynomial normalize_real(const Polynomial& p) {
    if (p.is_zero())
        throw domain_error("not proportional to a real polynomial");
    Polynomial q = p.lead().second.inverse() * p;
    for (const auto& [mono, coeff] : q.terms()) {
        (void)mono;
        if (!coeff.is_real())
            throw domain_error("not proportional to a real polynomial");
    }
    return q;
}

bool verify_annihilated(const Polynomial& p) {
    return apply_derivation(Derivation::E1, p).is_zero() &&
           apply_derivation(Derivation::E2, p).is_zero() &&
           apply_derivation(Derivation::E3, p).is_zero();
}

std::vector<NamedInvariant> generate_invariants(int order, InvariantSet set,
                                                const TemplateLibrary& lib) {
    std::vector<NamedInvariant> out;
    // Builds one invariant under a name so every failure (complex scalar,
    // annihilation miss from a corrupted template) identifies the culprit.
    auto build = [&out](const std::string& name, auto&& body_fn) {
        try {
            NamedInvariant inv = make_named(name, body_fn());
            if (!verify_annihilated(inv.polynomial))
                throw domain_error("not annihilated by E1,E2,E3");
            out.push_back(std::move(inv));
        } catch (const domain_error& e) {
            throw domain_error("generated invariant " + name + ": " + e.what());
        }
    };
    if (order == 2) {
        const Realization& r = standard_basis_realization();
        build("I1", [&] { return r.map.at(Variable::templ('v', 0)); });
        build("I2", [&] { return normalize_real(realize(lib.get("S1"), r)); });
        build("I3", [&] { return normalize_real(realize(lib.get("S2"), r)); });
        return out;
    }
    if (order != 3)
        throw domain_error("symbolic generation supported for orders 2 and 3");
    if (set == InvariantSet::polynomial) {
        const Realization& r = standard_basis_realization();
        for (const std::string& name : TemplateLibrary::polynomial_names())
            build(name, [&] { return normalize_real(realize(lib.get(name), r)); });
    } else {
        const Realization& r = eigenvector_realization();
        for (const std::string& name : TemplateLibrary::rational_names()) {
            build(name, [&] {
                Polynomial body = realize(lib.get(name), r);
                normalize_real(body); // must be real-proportional; body stays verbatim
                return body;
            });
        }
    }
    return out;
}

int jacobian_rank(const std::vector<Polynomial>& invs, const std::vector<Variable>& vars,
                  const std::map<Variable, Rational>& point) {
    std::map<Variable, GaussianComplex> assignment;
    for (const auto& [v, value] : point) assignment.emplace(v, GaussianComplex(value));
    Mat m;
    m.reserve(invs.size());
    for (const Polynomial& p : invs) {
        Vec row;
        row.reserve(vars.size());
        for (const Variable& v : vars) row.push_back(p.diff(v).eval_exact(assignment));
        m.push_back(std::move(row));
    }
    return static_cast<int>(rank(std::move(m)));
}

const std::map<Variable, Rational>& independence_test_point() {
    static const std::map<Variable, Rational> point = [] {
        std::map<Variable, Rational> p;
        const long evals[] = {1, 1, 23, 53, 97, 151};
        for (int i = 0; i < 6; ++i) p.emplace(Variable::templ('e', i), Rational(evals[i]));
        const long cvals[] = {0, 227, 311, 419};
        for (int i = 1; i <= 3; ++i) p.emplace(Variable::templ('c', i), Rational(cvals[i]));
        const long bvals[] = {0, 541, 661, 827, 1009, 1193, 1427, 1619};
        for (int i = 1; i <= 7; ++i) p.emplace(Variable::templ('b', i), Rational(bvals[i]));
        return p;
    }();
    return point;
}

mpz_class generator_count(int d) {
    if (d < 2)
        throw domain_error("generator counts are defined for orders >= 2");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d) + 3, 3);
    return binom - 7;
}

std::vector<mpz_class> poincare_coefficients(int max_degree) {
    if (max_degree < 0)
        throw domain_error("maximum degree must be non-negative");
    // Weighted basis of the order-3 module: one vector of weight 0, then
    // chains -s..s step 2 for s = 2, 4, 6 (16 vectors total).
    std::vector<int> weights{0};
    for (int s = 2; s <= 6; s += 2)
        for (int w = -s; w <= s; w += 2) weights.push_back(w);

    const int n = max_degree;
    const int shift = 6 * n; // weights range over [-6n, 6n]
    const std::size_t width = static_cast<std::size_t>(2 * shift + 1);
    // counts[deg][w + shift] = number of degree-deg monomials of weight w
    std::vector<std::vector<mpz_class>> counts(
        static_cast<std::size_t>(n) + 1, std::vector<mpz_class>(width));
    counts[0][static_cast<std::size_t>(shift)] = 1;
    for (int w : weights) {
        // unbounded-knapsack pass: admit any power of this basis vector
        for (int deg = 1; deg <= n; ++deg) {
            for (int col = 0; col < static_cast<int>(width); ++col) {
                const int prev = col - w;
                if (prev >= 0 && prev < static_cast<int>(width))
                    counts[static_cast<std::size_t>(deg)][static_cast<std::size_t>(col)] +=
                        counts[static_cast<std::size_t>(deg - 1)][static_cast<std::size_t>(prev)];
            }
        }
    }
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int deg = 0; deg <= n; ++deg) {
        const auto& row = counts[static_cast<std::size_t>(deg)];
        mpz_class weight0 = row[static_cast<std::size_t>(shift)];
        mpz_class weight2;
        if (shift + 2 < static_cast<int>(width))
            weight2 = row[static_cast<std::size_t>(shift + 2)];
        out.push_back(weight0 - weight2);
    }
    return out;
}

Polynomial to_eta_names(const Polynomial& p) { return p.rename_moment_spelling(true); }

} // namespace ti
