#include "ti/modules.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ti/errors.hpp"
#include "ti/linalg.hpp"

namespace ti {

namespace {

// Columns of the matrix of a linear operator on the span of vars.
Mat operator_matrix(Derivation d, const std::vector<Variable>& vars) {
    std::map<Variable, std::size_t> index;
    for (std::size_t i = 0; i < vars.size(); ++i)
        index.emplace(vars[i], i);
    Mat m(vars.size(), Vec(vars.size(), GaussianComplex()));
    for (std::size_t c = 0; c < vars.size(); ++c) {
        Polynomial image = apply_derivation(d, Polynomial::variable(vars[c]));
        for (const auto& [mono, coeff] : image.terms()) {
            auto it = index.find(mono.factors().front().first);
            if (it == index.end())
                throw std::logic_error("operator image leaves the span of the given orders");
            m[it->second][c] = coeff;
        }
    }
    return m;
}

Polynomial from_coords(const Vec& coords, const std::vector<Variable>& vars) {
    Polynomial out;
    for (std::size_t i = 0; i < coords.size(); ++i)
        out += coords[i] * Polynomial::variable(vars[i]);
    return out;
}

Polynomial normalize_lead(const Polynomial& p) {
    return p.lead().second.inverse() * p;
}

// Solutions of Dminus z = 0, H z = lambda z within one order block.
std::vector<Polynomial> block_weight_solutions(int order, int s, int sign) {
    std::vector<Variable> vars = moment_basis({order});
    Mat dm = operator_matrix(Derivation::Dminus, vars);
    Mat h = operator_matrix(Derivation::H, vars);
    GaussianComplex lambda(sign * s);
    Mat system;
    system.reserve(2 * vars.size());
    for (std::size_t r = 0; r < vars.size(); ++r)
        system.push_back(dm[r]);
    for (std::size_t r = 0; r < vars.size(); ++r) {
        Vec row = h[r];
        row[r] -= lambda;
        system.push_back(std::move(row));
    }
    std::vector<Polynomial> out;
    for (const Vec& coords : nullspace(system, vars.size()))
        out.push_back(normalize_lead(from_coords(coords, vars)));
    return out;
}

int probe_sign() {
    for (int sign : {-1, +1}) {
        auto sol = block_weight_solutions(2, 4, sign);
        if (sol.size() != 1)
            continue;
        Polynomial v0 = GaussianComplex(2) * Polynomial::variable(Variable::moment(0, 1, 1)) +
                        GaussianComplex::i() * (Polynomial::variable(Variable::moment(0, 0, 2)) -
                                                Polynomial::variable(Variable::moment(0, 2, 0)));
        if (poly_proportional(sol.front(), v0).has_value())
            return sign;
    }
    throw std::logic_error("lowest weight sign probe failed for both conventions");
}

std::vector<int> normalized_orders(const std::vector<int>& orders) {
    if (orders.empty())
        throw std::invalid_argument("order set must be non-empty");
    std::vector<int> sorted = orders;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 2)
        throw std::invalid_argument("order set entries must be >= 2");
    return sorted;
}

Polynomial dplus_pow(const Polynomial& z, int times) {
    Polynomial cur = z;
    for (int i = 0; i < times; ++i)
        cur = apply_derivation(Derivation::Dplus, cur);
    return cur;
}

} // namespace

int lowest_weight_sign() {
    static const int sign = probe_sign();
    return sign;
}

std::vector<Polynomial> lowest_weight_vectors(const std::vector<int>& orders, int s) {
    if (s < 0)
        throw std::invalid_argument("module order s must be non-negative");
    std::vector<Polynomial> out;
    for (int order : normalized_orders(orders)) {
        for (Polynomial& z : block_weight_solutions(order, s, lowest_weight_sign())) {
            // Dminus-killed vectors at weight -s generate order exactly s;
            // assert rather than trust.
            if (!dplus_pow(z, s).is_zero() && dplus_pow(z, s + 1).is_zero())
                out.push_back(std::move(z));
            else
                throw std::logic_error("weight solution violates the Dplus order contract");
        }
    }
    return out;
}

std::vector<Polynomial> standard_basis(const Polynomial& z, int s) {
    if (s < 0)
        throw std::invalid_argument("module order s must be non-negative");
    if (z.is_zero() || !apply_derivation(Derivation::Dminus, z).is_zero())
        throw domain_error("not a lowest weight vector of order " + std::to_string(s));
    std::vector<Polynomial> basis{z};
    Rational scale(1);
    Polynomial cur = z;
    for (int k = 1; k <= s; ++k) {
        cur = apply_derivation(Derivation::Dplus, cur);
        if (cur.is_zero())
            throw domain_error("not a lowest weight vector of order " + std::to_string(s));
        scale /= (s - k + 1); // accumulates (s-k)!/s!
        basis.push_back(GaussianComplex(scale) * cur);
    }
    if (!apply_derivation(Derivation::Dplus, cur).is_zero())
        throw domain_error("not a lowest weight vector of order " + std::to_string(s));
    return basis;
}

int ModuleDecomposition::total_dimension() const {
    int dim = 0;
    for (const auto& c : components)
        dim += c.multiplicity * (c.s + 1);
    return dim;
}

long closed_form_multiplicity(int k, int d) {
    if (k < 0 || d < 2)
        throw std::invalid_argument("closed_form_multiplicity: k >= 0, d >= 2");
    if (k > d)
        return 0;
    if (k <= 1)
        return (d - k) / 2;
    return (d - k) / 2 + 1;
}

ModuleDecomposition decompose(const std::vector<int>& orders) {
    ModuleDecomposition result;
    result.orders = normalized_orders(orders);
    int max_s = 2 * result.orders.back();
    for (int s = 0; s <= max_s; ++s) {
        auto vectors = lowest_weight_vectors(result.orders, s);
        if (vectors.empty())
            continue;
        IsotypicComponent comp;
        comp.s = s;
        comp.multiplicity = static_cast<int>(vectors.size());
        comp.lowest_weight = std::move(vectors);
        result.components.push_back(std::move(comp));
    }
    int dim = 0;
    for (int order : result.orders)
        dim += (order + 1) * (order + 2) / 2;
    if (result.total_dimension() != dim)
        throw std::logic_error("module decomposition does not fill the space");

    bool contiguous_from_2 = result.orders.front() == 2 &&
                             result.orders.back() - 2 + 1 == static_cast<int>(result.orders.size());
    if (contiguous_from_2) {
        int d = result.orders.back();
        for (int k = 0; k <= d; ++k) {
            long expected = closed_form_multiplicity(k, d);
            long found = 0;
            for (const auto& comp : result.components)
                if (comp.s == 2 * k)
                    found = comp.multiplicity;
            if (expected != found)
                throw std::logic_error("empirical multiplicity disagrees with the closed form at s = " +
                                       std::to_string(2 * k));
        }
        // Odd s never occurs; total_dimension() above already pins the rest.
    }
    return result;
}

std::map<long, std::vector<Polynomial>> laplace_eigenbasis(const std::vector<int>& orders) {
    std::map<long, std::vector<Polynomial>> out;
    for (int order : normalized_orders(orders)) {
        std::vector<Variable> vars = moment_basis({order});
        Mat lap = operator_matrix(Derivation::Laplace, vars);
        std::size_t block_dim = 0;
        for (int s = 2 * order; s >= 0; s -= 4) {
            long eigenvalue = static_cast<long>(s) * (s + 2) / 2;
            Mat shifted = lap;
            for (std::size_t r = 0; r < vars.size(); ++r)
                shifted[r][r] -= GaussianComplex(eigenvalue);
            for (const Vec& coords : nullspace(shifted, vars.size())) {
                out[eigenvalue].push_back(normalize_lead(from_coords(coords, vars)));
                ++block_dim;
            }
        }
        if (block_dim != vars.size())
            throw std::logic_error("Laplace eigenspaces do not fill the order-" + std::to_string(order) +
                                   " block");
    }
    return out;
}

} // namespace ti
