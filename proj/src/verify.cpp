#include "ti/verify.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "ti/errors.hpp"
#include "ti/invariants.hpp"
#include "ti/linalg.hpp"
#include "ti/modules.hpp"
#include "ti/sl2.hpp"

namespace ti {

std::uint64_t SplitMix64::next() {
    _state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = _state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SplitMix64::gaussian() {
    if (_have_spare) {
        _have_spare = false;
        return _spare;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    _spare = radius * std::sin(angle);
    _have_spare = true;
    return radius * std::cos(angle);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rotation Rotation::identity() {
    Rotation r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
    return r;
}

std::array<double, 3> Rotation::apply(const std::array<double, 3>& v) const {
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i)
        out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

Rotation random_rotation(SplitMix64& rng) {
    double w, x, y, z, norm2;
    do {
        w = rng.gaussian();
        x = rng.gaussian();
        y = rng.gaussian();
        z = rng.gaussian();
        norm2 = w * w + x * x + y * y + z * z;
    } while (norm2 < 1e-24);
    const double inv = 1.0 / std::sqrt(norm2);
    w *= inv;
    x *= inv;
    y *= inv;
    z *= inv;
    Rotation r;
    r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
            {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
            {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
    return r;
}

Rotation random_rotation(std::uint64_t seed, std::uint64_t draw) {
    SplitMix64 rng(stream_seed(seed, draw));
    return random_rotation(rng);
}

Rotation euler_rotation(double psi, double theta, double phi) {
    const double c1 = std::cos(psi), s1 = std::sin(psi);
    const double c2 = std::cos(theta), s2 = std::sin(theta);
    const double c3 = std::cos(phi), s3 = std::sin(phi);
    Rotation r;
    // Rz(psi) * Rx(theta) * Rz(phi)
    r.m = {{{c1 * c3 - s1 * c2 * s3, -c1 * s3 - s1 * c2 * c3, s1 * s2},
            {s1 * c3 + c1 * c2 * s3, -s1 * s3 + c1 * c2 * c3, -c1 * s2},
            {s2 * s3, s2 * c3, c2}}};
    return r;
}

PointCloud transform_cloud(const PointCloud& cloud, const Rotation& r,
                           const std::array<double, 3>& t, double scale) {
    if (!(scale > 0)) throw domain_error("scale must be positive");
    // The cloud samples a density, so the similarity acts as a pushforward
    // of the measure: weights pick up the volume factor scale^3. This is
    // what makes the mass-power normalization cancel uniform scaling.
    const double volume = scale * scale * scale;
    PointCloud out;
    out.points.reserve(cloud.points.size());
    for (const Point& p : cloud.points) {
        const auto v = r.apply({p.x, p.y, p.z});
        out.points.push_back({scale * v[0] + t[0], scale * v[1] + t[1],
                              scale * v[2] + t[2], volume * p.w});
    }
    return out;
}

namespace {

std::array<double, 3> diff3(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace

bool is_degenerate_cloud(const PointCloud& cloud) {
    if (cloud.points.size() < 4) return true;
    const Point& p0 = cloud.points[0];
    // farthest point from p0 sets the scale
    double best = 0;
    std::size_t ia = 0;
    for (std::size_t i = 1; i < cloud.points.size(); ++i) {
        const auto d = diff3(cloud.points[i], p0);
        const double n2 = dot3(d, d);
        if (n2 > best) {
            best = n2;
            ia = i;
        }
    }
    const double diameter = std::sqrt(best);
    if (!(diameter > 0)) return true; // all points coincide
    const auto ea = diff3(cloud.points[ia], p0);
    double best_area = 0;
    std::size_t ib = 0;
    for (std::size_t i = 1; i < cloud.points.size(); ++i) {
        const auto c = cross3(ea, diff3(cloud.points[i], p0));
        const double n2 = dot3(c, c);
        if (n2 > best_area) {
            best_area = n2;
            ib = i;
        }
    }
    if (std::sqrt(best_area) <= 1e-12 * diameter * diameter) return true; // collinear
    const auto normal = cross3(ea, diff3(cloud.points[ib], p0));
    const double nlen = std::sqrt(dot3(normal, normal));
    double best_vol = 0;
    for (std::size_t i = 1; i < cloud.points.size(); ++i)
        best_vol = std::max(best_vol, std::abs(dot3(normal, diff3(cloud.points[i], p0))) / nlen);
    return best_vol <= 1e-12 * diameter; // coplanar
}

InvarianceReport invariance_report(const PointCloud& cloud,
                                   const std::vector<NamedInvariant>& invs, int trials,
                                   double tolerance, std::uint64_t seed) {
    if (trials < 1) throw domain_error("at least one trial is required");
    InvarianceReport report;
    report.seed = seed;
    report.trials = trials;
    report.tolerance = tolerance;
    report.degenerate = is_degenerate_cloud(cloud);

    int max_order = 2;
    for (const NamedInvariant& inv : invs) max_order = std::max(max_order, inv.order);

    const MomentTensor base_eta =
        normalized_moments(central_moments(raw_moments(cloud, max_order)));
    report.invariants.reserve(invs.size());
    for (const NamedInvariant& inv : invs) {
        InvariantDeviation d;
        d.name = inv.name;
        d.baseline = evaluate_invariant(inv, base_eta);
        report.invariants.push_back(d);
    }

    for (int trial = 1; trial <= trials; ++trial) {
        SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(trial)));
        const Rotation r = random_rotation(rng);
        const std::array<double, 3> t{rng.uniform(-10, 10), rng.uniform(-10, 10),
                                      rng.uniform(-10, 10)};
        const double scale = rng.uniform(0.1, 10.0);
        const PointCloud moved = transform_cloud(cloud, r, t, scale);
        const MomentTensor eta =
            normalized_moments(central_moments(raw_moments(moved, max_order)));
        for (std::size_t i = 0; i < invs.size(); ++i) {
            const double value = evaluate_invariant(invs[i], eta);
            InvariantDeviation& d = report.invariants[i];
            const double dev = std::abs(value - d.baseline);
            d.max_abs_dev = std::max(d.max_abs_dev, dev);
            if (std::abs(d.baseline) >= 1e-9)
                d.max_rel_dev = std::max(d.max_rel_dev, dev / std::abs(d.baseline));
        }
    }

    for (InvariantDeviation& d : report.invariants) {
        d.pass = std::abs(d.baseline) < 1e-9 ? d.max_abs_dev <= 1e-12
                                             : d.max_rel_dev <= tolerance;
        report.all_pass = report.all_pass && d.pass;
    }
    return report;
}

int SelfCheckReport::failures() const {
    int n = 0;
    for (const SelfCheckEntry& e : checks)
        if (!e.pass) ++n;
    return n;
}

namespace {

[[noreturn]] void check_failed(const std::string& message) {
    throw std::runtime_error(message);
}

void require(bool condition, const std::string& message) {
    if (!condition) check_failed(message);
}

void run_entry(SelfCheckReport& report, const std::string& name,
               const std::function<void()>& body) {
    SelfCheckEntry entry;
    entry.name = name;
    try {
        body();
    } catch (const std::exception& e) {
        entry.pass = false;
        entry.detail = e.what();
    }
    report.all_pass = report.all_pass && entry.pass;
    report.checks.push_back(std::move(entry));
}

Polynomial scale_poly(long c, const Polynomial& p) { return GaussianComplex(c) * p; }

// Coordinates of a linear form over the moment basis of the given orders.
Vec coordinates(const Polynomial& p, const std::vector<Variable>& basis) {
    Vec out;
    out.reserve(basis.size());
    for (const Variable& v : basis) out.push_back(p.coeff(Monomial(v)));
    return out;
}

void check_decomposition(const std::vector<int>& orders,
                         const std::map<int, int>& expected) {
    const ModuleDecomposition dec = decompose(orders);
    std::map<int, int> got;
    for (const IsotypicComponent& c : dec.components) got[c.s] = c.multiplicity;
    require(got == expected, "unexpected multiplicities");
}

void check_eigen_membership(const std::vector<int>& orders, long eigenvalue,
                            const std::vector<Polynomial>& vectors,
                            const std::string& label) {
    const auto basis_vars = moment_basis(orders);
    const auto eigen = laplace_eigenbasis(orders);
    const auto it = eigen.find(eigenvalue);
    require(it != eigen.end(), label + ": eigenvalue missing");
    Mat span;
    for (const Polynomial& p : it->second) span.push_back(coordinates(p, basis_vars));
    for (const Polynomial& p : vectors)
        require(in_span(span, coordinates(p, basis_vars)),
                label + ": vector outside the eigenspace");
}

} // namespace

SelfCheckReport run_self_check(const TemplateLibrary& lib) {
    SelfCheckReport report;

    for (const std::vector<int>& orders :
         {std::vector<int>{2}, std::vector<int>{2, 3}, std::vector<int>{2, 3, 4}}) {
        std::string label = "commutators on orders {";
        for (std::size_t i = 0; i < orders.size(); ++i)
            label += (i ? "," : "") + std::to_string(orders[i]);
        label += "}";
        run_entry(report, label, [&orders] {
            const CommutatorReport c = check_commutators(orders);
            for (const RelationCheck& r : c.relations)
                require(r.pass, r.relation + " fails on " + r.counterexample);
        });
    }

    run_entry(report, "standard basis relations", [] {
        const Realization& r = standard_basis_realization();
        const int sign = lowest_weight_sign();
        const std::pair<char, int> families[] = {{'x', 2}, {'y', 4}, {'u', 6}};
        for (const auto& [family, s] : families) {
            std::vector<Polynomial> v;
            for (int k = 0; k <= s; ++k) v.push_back(r.map.at(Variable::templ(family, k)));
            for (int k = 0; k <= s; ++k) {
                const Polynomial down = apply_derivation(Derivation::Dminus, v[k]);
                const Polynomial expected_down =
                    k == 0 ? Polynomial() : scale_poly(k, v[k - 1]);
                require(down == expected_down, "Dminus relation fails");
                const Polynomial up = apply_derivation(Derivation::Dplus, v[k]);
                const Polynomial expected_up =
                    k == s ? Polynomial() : scale_poly(s - k, v[k + 1]);
                require(up == expected_up, "Dplus relation fails");
                const Polynomial h = apply_derivation(Derivation::H, v[k]);
                require(h == scale_poly(sign * (s - 2 * k), v[k]), "H eigenvalue fails");
            }
        }
    });

    run_entry(report, "decomposition of order {2}",
              [] { check_decomposition({2}, {{0, 1}, {4, 1}}); });
    run_entry(report, "decomposition of order {3}",
              [] { check_decomposition({3}, {{2, 1}, {6, 1}}); });
    run_entry(report, "decomposition of order {4}",
              [] { check_decomposition({4}, {{0, 1}, {4, 1}, {8, 1}}); });
    run_entry(report, "decomposition of orders {2,3}",
              [] { check_decomposition({2, 3}, {{0, 1}, {2, 1}, {4, 1}, {6, 1}}); });
    run_entry(report, "decomposition of orders {2,3,4}", [] {
        check_decomposition({2, 3, 4}, {{0, 2}, {2, 1}, {4, 2}, {6, 1}, {8, 1}});
    });
    run_entry(report, "closed-form multiplicities through order 8", [] {
        std::vector<int> orders;
        for (int d = 2; d <= 8; ++d) {
            orders.push_back(d);
            decompose(orders); // cross-checks multiplicities internally
        }
    });

    run_entry(report, "Laplace eigenspaces on order {2}", [] {
        const auto eigen = laplace_eigenbasis({2});
        require(eigen.size() == 2 && eigen.count(0) && eigen.count(12),
                "expected eigenvalues {0, 12}");
        require(eigen.at(0).size() == 1 && eigen.at(12).size() == 5,
                "expected dimensions 1 and 5");
    });
    run_entry(report, "Laplace eigenspaces on order {3}", [] {
        const auto eigen = laplace_eigenbasis({3});
        require(eigen.size() == 2 && eigen.count(4) && eigen.count(24),
                "expected eigenvalues {4, 24}");
        require(eigen.at(4).size() == 3 && eigen.at(24).size() == 7,
                "expected dimensions 3 and 7");
    });
    run_entry(report, "eigenvector coordinates lie in the eigenspaces", [] {
        const Realization& r = eigenvector_realization();
        auto family = [&r](char f, int lo, int hi) {
            std::vector<Polynomial> out;
            for (int i = lo; i <= hi; ++i) out.push_back(r.map.at(Variable::templ(f, i)));
            return out;
        };
        check_eigen_membership({2}, 0, {r.map.at(Variable::templ('e', 0))}, "e0");
        check_eigen_membership({2}, 12, family('e', 1, 5), "e1..e5");
        check_eigen_membership({3}, 4, family('c', 1, 3), "c1..c3");
        check_eigen_membership({3}, 24, family('b', 1, 7), "b1..b7");
    });

    run_entry(report, "degree-one invariants annihilated (orders 2..16)", [] {
        for (int d = 2; d <= 16; d += 2)
            require(verify_annihilated(degree_one_invariant(d).polynomial),
                    "I" + std::to_string(d) + " not annihilated");
        bool threw = false;
        try {
            degree_one_invariant(3);
        } catch (const domain_error&) {
            threw = true;
        }
        require(threw, "odd order must be rejected");
    });

    run_entry(report, "order-2 generation", [&lib] {
        const auto invs = generate_invariants(2, InvariantSet::polynomial, lib);
        require(invs.size() == 3, "expected 3 invariants");
        require(invs[0].degree == 1 && invs[1].degree == 2 && invs[2].degree == 3,
                "expected degrees 1,2,3");
    });
    run_entry(report, "order-3 polynomial set", [&lib] {
        const auto invs = generate_invariants(3, InvariantSet::polynomial, lib);
        require(invs.size() == 13, "expected 13 invariants");
        std::multiset<int> degrees;
        for (const NamedInvariant& inv : invs) degrees.insert(inv.degree);
        require(degrees == std::multiset<int>({1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4}),
                "unexpected degree multiset");
    });
    run_entry(report, "order-3 rational set", [&lib] {
        const auto invs = generate_invariants(3, InvariantSet::rational, lib);
        require(invs.size() == 13, "expected 13 invariants");
        for (const NamedInvariant& inv : invs)
            require(inv.order == 2 || inv.order == 3, "unexpected moment order");
    });
    run_entry(report, "cross-set proportionality (B0..B3 vs od,dv*)", [&lib] {
        const auto poly = generate_invariants(3, InvariantSet::polynomial, lib);
        const auto rat = generate_invariants(3, InvariantSet::rational, lib);
        auto find = [](const std::vector<NamedInvariant>& set, const std::string& name)
            -> const Polynomial& {
            for (const NamedInvariant& inv : set)
                if (inv.name == name) return inv.polynomial;
            check_failed("missing invariant " + name);
        };
        const std::pair<const char*, const char*> pairs[] = {
            {"B0", "od"}, {"B1", "dv2"}, {"B2", "dv1"}, {"B3", "dv3"}};
        for (const auto& [lhs, rhs] : pairs)
            require(poly_proportional(find(poly, lhs), find(rat, rhs)).has_value(),
                    std::string(lhs) + " is not proportional to " + rhs);
    });

    run_entry(report, "Jacobian rank 13 at the reference point", [&lib] {
        std::vector<Polynomial> bodies;
        for (const std::string& name : TemplateLibrary::rational_names())
            bodies.push_back(lib.get(name).body);
        std::vector<Variable> vars;
        for (const auto& [v, value] : independence_test_point()) vars.push_back(v);
        require(jacobian_rank(bodies, vars, independence_test_point()) == 13,
                "rank is not 13");
    });

    run_entry(report, "series coefficients for degrees 0..9", [&lib] {
        const std::vector<mpz_class> expected = {1, 1, 4, 8, 26, 53, 146, 305, 704, 1417};
        require(poincare_coefficients(9) == expected, "coefficient mismatch");
        // degree-2 cross-check: the dimension equals the independent span of
        // {B0^2, B1, B2, B3} over monomial coefficients
        const auto poly = generate_invariants(3, InvariantSet::polynomial, lib);
        std::vector<Polynomial> degree2 = {poly[0].polynomial * poly[0].polynomial,
                                           poly[1].polynomial, poly[2].polynomial,
                                           poly[3].polynomial};
        std::set<Monomial> monomials;
        for (const Polynomial& p : degree2)
            for (const auto& [m, c] : p.terms()) monomials.insert(m);
        Mat rows;
        for (const Polynomial& p : degree2) {
            Vec row;
            for (const Monomial& m : monomials) row.push_back(p.coeff(m));
            rows.push_back(std::move(row));
        }
        require(rank(rows) == 4, "degree-2 invariants are not independent");
    });

    run_entry(report, "generator counts", [] {
        require(generator_count(2) == 3 && generator_count(3) == 13 &&
                    generator_count(4) == 28 && generator_count(16) == 962,
                "count mismatch");
        // dimension argument: 3 + sum_{k=3}^{d} C(k+2,2) telescopes to C(d+3,3)-7
        mpz_class sum = 3;
        for (int d = 3; d <= 16; ++d) {
            mpz_class layer;
            mpz_bin_uiui(layer.get_mpz_t(), static_cast<unsigned long>(d) + 2, 2);
            sum += layer;
            require(generator_count(d) == sum, "telescoping identity fails at order " +
                                                   std::to_string(d));
        }
    });

    return report;
}

} // namespace ti
