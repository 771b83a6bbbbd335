// Acceptance gate: one line per criterion, exit code = number of failures.
// Everything symbolic is compared exactly; the numeric criteria state their
// tolerances inline.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "golden.hpp"
#include "ti/errors.hpp"
#include "ti/invariants.hpp"
#include "ti/linalg.hpp"
#include "ti/modules.hpp"
#include "ti/moments.hpp"
#include "ti/sl2.hpp"
#include "ti/templates.hpp"
#include "ti/verify.hpp"

using namespace ti;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] criterion-" << n << " " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "[FAIL] criterion-" << n << " " << label << ": " << e.what() << "\n";
    }
}

void require(bool condition, const std::string& message) {
    if (!condition)
        throw std::runtime_error(message);
}

GaussianComplex proportionality(const Polynomial& p, const Polynomial& q,
                                const std::string& what) {
    auto lambda = poly_proportional(p, q);
    require(lambda.has_value(), what + ": not proportional");
    require(!lambda->is_zero(), what + ": zero scalar");
    return *lambda;
}

void real_proportionality(const Polynomial& p, const Polynomial& q, const std::string& what) {
    require(proportionality(p, q, what).is_real(),
            what + ": scalar is not a nonzero real rational");
}

std::map<std::string, Polynomial> generated(int order, InvariantSet set) {
    std::map<std::string, Polynomial> out;
    for (const NamedInvariant& inv : generate_invariants(order, set))
        out.emplace(inv.name, inv.polynomial);
    return out;
}

std::map<int, int> multiplicities(const ModuleDecomposition& d) {
    std::map<int, int> out;
    for (const IsotypicComponent& c : d.components)
        out[c.s] = c.multiplicity;
    return out;
}

Vec coordinates(const Polynomial& p, const std::vector<Variable>& basis) {
    Vec out;
    out.reserve(basis.size());
    for (const Variable& v : basis)
        out.push_back(p.coeff(Monomial(v)));
    return out;
}

void check_eigen_membership(const std::vector<int>& orders, long eigenvalue,
                            const std::vector<Polynomial>& vectors, const std::string& label) {
    const auto basis_vars = moment_basis(orders);
    const auto eigen = laplace_eigenbasis(orders);
    const auto it = eigen.find(eigenvalue);
    require(it != eigen.end(), label + ": eigenvalue missing");
    Mat span;
    for (const Polynomial& p : it->second)
        span.push_back(coordinates(p, basis_vars));
    for (const Polynomial& p : vectors)
        require(in_span(span, coordinates(p, basis_vars)),
                label + ": a tabulated vector falls outside the computed eigenspace");
}

PointCloud random_cloud(SplitMix64& rng, std::size_t n) {
    PointCloud cloud;
    for (std::size_t k = 0; k < n; ++k)
        cloud.points.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                rng.uniform(-2.0, 2.0), rng.uniform(0.1, 3.0)});
    return cloud;
}

MomentTensor central_by_traversal(const PointCloud& cloud, int max_order) {
    double w = 0, cx = 0, cy = 0, cz = 0;
    for (const Point& p : cloud.points) {
        w += p.w;
        cx += p.w * p.x;
        cy += p.w * p.y;
        cz += p.w * p.z;
    }
    cx /= w;
    cy /= w;
    cz /= w;
    MomentTensor out(MomentKind::central, max_order);
    for (int p = 0; p <= max_order; ++p)
        for (int q = 0; p + q <= max_order; ++q)
            for (int r = 0; p + q + r <= max_order; ++r) {
                double sum = 0;
                for (const Point& pt : cloud.points)
                    sum += pt.w * std::pow(pt.x - cx, p) * std::pow(pt.y - cy, q) *
                           std::pow(pt.z - cz, r);
                out.set(p, q, r, sum);
            }
    return out;
}

} // namespace

int main() {
    criterion(1, "order-2 generation reproduces the reference generators", [] {
        auto gen = generated(2, InvariantSet::polynomial);
        require(gen.size() == 3, "expected 3 generators");
        require(gen.at("I1") == golden::I1_display(), "I1 differs");
        real_proportionality(gen.at("I2"), golden::I2_display(), "I2");
        real_proportionality(gen.at("I3"), golden::I3_display(), "I3");
    });

    criterion(2, "degree-one invariants match their displays and are annihilated", [] {
        for (int d : {2, 4, 6, 8}) {
            const NamedInvariant inv = degree_one_invariant(d);
            require(inv.polynomial == golden::degree_one_display(d),
                    "I" + std::to_string(d) + " differs");
            require(verify_annihilated(inv.polynomial),
                    "I" + std::to_string(d) + " is not annihilated");
        }
    });

    criterion(3, "module decompositions and closed-form multiplicities", [] {
        require(multiplicities(decompose({2})) == std::map<int, int>{{0, 1}, {4, 1}},
                "order {2} multiplicities differ");
        require(multiplicities(decompose({3})) == std::map<int, int>{{2, 1}, {6, 1}},
                "order {3} multiplicities differ");
        require(multiplicities(decompose({4})) == std::map<int, int>{{0, 1}, {4, 1}, {8, 1}},
                "order {4} multiplicities differ");

        for (int d = 2; d <= 8; ++d) {
            std::vector<int> orders;
            for (int o = 2; o <= d; ++o)
                orders.push_back(o);
            const auto got = multiplicities(decompose(orders));
            for (int k = 0; k <= d; ++k) {
                const long want = closed_form_multiplicity(k, d);
                const auto it = got.find(2 * k);
                const long empirical = it == got.end() ? 0 : it->second;
                require(empirical == want, "multiplicity of the order-" + std::to_string(2 * k) +
                                               " block differs for d=" + std::to_string(d));
            }
        }

        const std::map<int, Polynomial> expected2 = {{0, golden::v0()}, {4, golden::y0()}};
        for (const IsotypicComponent& c : decompose({2}).components) {
            require(c.lowest_weight.size() == 1, "unexpected multiplicity");
            proportionality(c.lowest_weight[0], expected2.at(c.s),
                            "lowest weight of V" + std::to_string(c.s));
        }
        const std::map<int, Polynomial> expected23 = {
            {0, golden::v0()}, {2, golden::x0()}, {4, golden::y0()}, {6, golden::u0()}};
        for (const IsotypicComponent& c : decompose({2, 3}).components) {
            require(c.lowest_weight.size() == 1, "unexpected multiplicity");
            proportionality(c.lowest_weight[0], expected23.at(c.s),
                            "lowest weight of V" + std::to_string(c.s));
        }
    });

    criterion(4, "standard basis with factorial scaling and ladder relations", [] {
        const std::vector<Polynomial> want = {golden::y0(), golden::y1(), golden::y2(),
                                              golden::y3(), golden::y4()};
        const std::vector<Polynomial> got = standard_basis(golden::y0(), 4);
        require(got.size() == 5, "wrong length");
        for (std::size_t k = 0; k < 5; ++k)
            require(got[k] == want[k], "v" + std::to_string(k) + " differs");
        for (int k = 0; k <= 4; ++k) {
            const Polynomial down = apply_derivation(Derivation::Dminus, got[k]);
            const Polynomial expect =
                k == 0 ? Polynomial() : GaussianComplex(k) * got[k - 1];
            require(down == expect, "lowering relation fails at k=" + std::to_string(k));
        }
        Polynomial power = golden::y0();
        for (int k = 0; k < 5; ++k)
            power = apply_derivation(Derivation::Dplus, power);
        require(power.is_zero(), "raising operator is not nilpotent at order 4");
    });

    criterion(5, "Laplace eigenspaces with the tabulated coordinate vectors", [] {
        const auto eigen2 = laplace_eigenbasis({2});
        require(eigen2.size() == 2 && eigen2.count(0) && eigen2.count(12),
                "order {2} eigenvalues differ");
        require(eigen2.at(0).size() == 1 && eigen2.at(12).size() == 5,
                "order {2} eigenspace dimensions differ");
        const auto eigen3 = laplace_eigenbasis({3});
        require(eigen3.size() == 2 && eigen3.count(4) && eigen3.count(24),
                "order {3} eigenvalues differ");
        require(eigen3.at(4).size() == 3 && eigen3.at(24).size() == 7,
                "order {3} eigenspace dimensions differ");

        check_eigen_membership({2}, 0, {golden::e_list()[0]}, "e0");
        check_eigen_membership({2}, 12,
                               {golden::e_list()[1], golden::e_list()[2], golden::e_list()[3],
                                golden::e_list()[4], golden::e_list()[5]},
                               "e1..e5");
        check_eigen_membership({3}, 4, golden::c_list(), "c1..c3");
        check_eigen_membership({3}, 24, golden::b_list(), "b1..b7");
    });

    criterion(6, "rational generators are annihilated and independent", [] {
        const auto invs = generate_invariants(3, InvariantSet::rational);
        require(invs.size() == 13, "expected 13 rational generators");
        for (const NamedInvariant& inv : invs)
            require(verify_annihilated(inv.polynomial), inv.name + " is not annihilated");

        const TemplateLibrary& lib = TemplateLibrary::builtin();
        std::vector<Polynomial> bodies;
        for (const std::string& name : TemplateLibrary::rational_names())
            bodies.push_back(lib.get(name).body);
        require(jacobian_rank(bodies, golden::rational_template_variables(),
                              independence_test_point()) == 13,
                "Jacobian rank at the reference point is not 13");
    });

    criterion(7, "series coefficients for degrees 0..9", [] {
        const auto got = poincare_coefficients(9);
        const auto want = golden::poincare_head();
        require(got.size() == want.size(), "length differs");
        for (std::size_t k = 0; k < got.size(); ++k)
            require(got[k] == want[k], "coefficient " + std::to_string(k) + " differs");
    });

    criterion(8, "generating set sizes for orders 2, 3, 4", [] {
        require(generator_count(2) == 3, "order 2 differs");
        require(generator_count(3) == 13, "order 3 differs");
        require(generator_count(4) == 28, "order 4 differs");
    });

    criterion(9, "numeric invariance on the bundled cloud (100 transforms, <10s)", [] {
        const auto started = std::chrono::steady_clock::now();
        const PointCloud cloud =
            load_point_cloud_csv_file(std::string(TI_DATA_DIR) + "/sample_cloud.csv");
        require(cloud.points.size() == 50, "bundled cloud should have 50 points");

        std::vector<NamedInvariant> invs = generate_invariants(2, InvariantSet::polynomial);
        for (const InvariantSet set : {InvariantSet::polynomial, InvariantSet::rational})
            for (NamedInvariant& inv : generate_invariants(3, set))
                invs.push_back(std::move(inv));
        require(invs.size() == 29, "expected 29 invariants");

        const InvarianceReport report = invariance_report(cloud, invs, 100, 1e-8, 1);
        for (const InvariantDeviation& d : report.invariants)
            require(d.pass, d.name + " deviates by " + std::to_string(d.max_rel_dev));
        require(report.all_pass, "report not clean");

        const std::vector<NamedInvariant> control = {{"eta200", golden::a(2, 0, 0), 2, 1}};
        const InvarianceReport neg = invariance_report(cloud, control, 100, 1e-8, 1);
        require(std::max(neg.invariants[0].max_abs_dev, neg.invariants[0].max_rel_dev) > 1e-3,
                "negative control failed to deviate");
        require(!neg.all_pass, "negative control passed");

        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        require(elapsed < 10.0, "took " + std::to_string(elapsed) + "s");
    });

    criterion(10, "central moments: shift expansion equals direct recomputation", [] {
        SplitMix64 clouds(20260814);
        for (int trial = 0; trial < 100; ++trial) {
            const PointCloud cloud = random_cloud(clouds, 3 + trial % 18);
            const MomentTensor fast = central_moments(raw_moments(cloud, 5));

            // brute-force recomputation about the centroid of translated data
            PointCloud moved = cloud;
            for (Point& p : moved.points) {
                p.x += 7.5;
                p.y -= 4.25;
                p.z += 1.125;
            }
            const MomentTensor slow = central_by_traversal(moved, 5);
            for (const auto& [key, value] : fast.entries()) {
                const double want = slow.at(key[0], key[1], key[2]);
                require(std::abs(value - want) <= 1e-12 * (1.0 + std::abs(want)),
                        "entry deviates past 1e-12");
            }
        }
    });

    criterion(11, "symbolic self-check and single-coefficient mutation sweep", [] {
        const SelfCheckReport report = run_self_check();
        require(report.failures() == 0, "self-check reported failures");

        const TemplateLibrary& lib = TemplateLibrary::builtin();
        const auto& rational = TemplateLibrary::rational_names();
        int mutations = 0;
        std::vector<std::string> undetected;
        for (const std::string& name : lib.names()) {
            const InvariantTemplate& t = lib.get(name);
            const bool eigen =
                std::find(rational.begin(), rational.end(), name) != rational.end();
            const auto& map =
                (eigen ? eigenvector_realization() : standard_basis_realization()).map;
            const Polynomial realized = t.body.subst(map);
            require(verify_annihilated(realized), name + " does not realize to an invariant");

            for (const auto& [mono, coeff] : t.body.terms()) {
                (void)coeff;
                ++mutations;
                const Polynomial bump = Polynomial::term(GaussianComplex(1), mono);
                const Polynomial mutant = t.body + bump;

                // channel 1: the loader rejects non-primitive sources
                mpz_class content = 0;
                for (const auto& [m, c] : mutant.terms()) {
                    (void)m;
                    mpz_class numerator(c.re().get_num());
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), numerator.get_mpz_t());
                }
                if (content != 1)
                    continue;

                // channel 2: the realized mutant is no longer an invariant
                if (verify_annihilated(realized + bump.subst(map)))
                    undetected.push_back(name + ":" + mono.str());
            }
        }
        require(mutations > 400, "sweep unexpectedly small");
        if (!undetected.empty()) {
            std::ostringstream detail;
            detail << undetected.size() << " mutations slipped through (first: "
                   << undetected.front() << ")";
            require(false, detail.str());
        }
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
