#include "ti/sl2.hpp"

#include <algorithm>
#include <stdexcept>

namespace ti {

namespace {

Polynomial mono(int j, int k, int l, bool eta, const GaussianComplex& c) {
    return c * Polynomial::variable(Variable::moment(j, k, l, eta));
}

// Generator actions on a single moment variable. Index drops below zero
// only with a vanishing coefficient, so those terms are simply omitted.
Polynomial e1_var(const Variable& v) {
    Polynomial out;
    if (v.k() > 0) out += mono(v.j() + 1, v.k() - 1, v.l(), v.eta(), GaussianComplex(v.k()));
    if (v.j() > 0) out -= mono(v.j() - 1, v.k() + 1, v.l(), v.eta(), GaussianComplex(v.j()));
    return out;
}

Polynomial e2_var(const Variable& v) {
    Polynomial out;
    if (v.l() > 0) out += mono(v.j() + 1, v.k(), v.l() - 1, v.eta(), GaussianComplex(v.l()));
    if (v.j() > 0) out -= mono(v.j() - 1, v.k(), v.l() + 1, v.eta(), GaussianComplex(v.j()));
    return out;
}

Polynomial e3_var(const Variable& v) {
    Polynomial out;
    if (v.l() > 0) out += mono(v.j(), v.k() + 1, v.l() - 1, v.eta(), GaussianComplex(v.l()));
    if (v.k() > 0) out -= mono(v.j(), v.k() - 1, v.l() + 1, v.eta(), GaussianComplex(v.k()));
    return out;
}

Polynomial action_on_variable(Derivation d, const Variable& v) {
    const GaussianComplex i = GaussianComplex::i();
    switch (d) {
    case Derivation::E1: return e1_var(v);
    case Derivation::E2: return e2_var(v);
    case Derivation::E3: return e3_var(v);
    case Derivation::Dplus: return i * e1_var(v) + e2_var(v);
    case Derivation::Dminus: return i * e1_var(v) - e2_var(v);
    case Derivation::H: return (GaussianComplex(2) * i) * e3_var(v);
    case Derivation::Laplace: break;
    }
    throw std::logic_error("action_on_variable: not a first-order derivation");
}

Polynomial apply_first_order(Derivation d, const Polynomial& p) {
    Polynomial out;
    for (const Variable& v : p.variables()) {
        if (!v.is_moment())
            throw std::invalid_argument(std::string(derivation_name(d)) +
                                        " is defined on moment variables only; found " + v.name());
        out += p.diff(v) * action_on_variable(d, v);
    }
    return out;
}

} // namespace

const char* derivation_name(Derivation d) {
    switch (d) {
    case Derivation::E1: return "E1";
    case Derivation::E2: return "E2";
    case Derivation::E3: return "E3";
    case Derivation::Dplus: return "Dplus";
    case Derivation::Dminus: return "Dminus";
    case Derivation::H: return "H";
    case Derivation::Laplace: return "Laplace";
    }
    return "?";
}

Polynomial apply_derivation(Derivation d, const Polynomial& p) {
    if (d != Derivation::Laplace)
        return apply_first_order(d, p);
    Polynomial dp = apply_first_order(Derivation::Dplus, p);
    Polynomial dm = apply_first_order(Derivation::Dminus, p);
    Polynomial h = apply_first_order(Derivation::H, p);
    Polynomial out = apply_first_order(Derivation::Dminus, dp);
    out += apply_first_order(Derivation::Dplus, dm);
    Rational half(1, 2);
    out += GaussianComplex(half) * apply_first_order(Derivation::H, h);
    return out;
}

std::vector<Variable> moment_basis(const std::vector<int>& orders) {
    std::vector<int> sorted = orders;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Variable> out;
    for (int d : sorted) {
        if (d < 0)
            throw std::invalid_argument("moment order must be non-negative");
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k + j <= d; ++k)
                out.push_back(Variable::moment(j, k, d - j - k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using Unary = Polynomial (*)(const Polynomial&);

Polynomial op(Derivation d, const Polynomial& p) { return apply_derivation(d, p); }

struct Relation {
    std::string name;
    // lhs(v) - rhs(v), zero for every v when the relation holds
    Polynomial (*residual)(const Polynomial&);
};

const GaussianComplex kI = GaussianComplex::i();

const Relation kRelations[] = {
    {"[H,Dplus] = 2*Dplus",
     [](const Polynomial& v) {
         return op(Derivation::H, op(Derivation::Dplus, v)) - op(Derivation::Dplus, op(Derivation::H, v)) -
                GaussianComplex(2) * op(Derivation::Dplus, v);
     }},
    {"[H,Dminus] = -2*Dminus",
     [](const Polynomial& v) {
         return op(Derivation::H, op(Derivation::Dminus, v)) - op(Derivation::Dminus, op(Derivation::H, v)) +
                GaussianComplex(2) * op(Derivation::Dminus, v);
     }},
    {"[Dplus,Dminus] = H",
     [](const Polynomial& v) {
         return op(Derivation::Dplus, op(Derivation::Dminus, v)) -
                op(Derivation::Dminus, op(Derivation::Dplus, v)) - op(Derivation::H, v);
     }},
    {"[E1,E2] = -E3",
     [](const Polynomial& v) {
         return op(Derivation::E1, op(Derivation::E2, v)) - op(Derivation::E2, op(Derivation::E1, v)) +
                op(Derivation::E3, v);
     }},
    {"[E1,E3] = E2",
     [](const Polynomial& v) {
         return op(Derivation::E1, op(Derivation::E3, v)) - op(Derivation::E3, op(Derivation::E1, v)) -
                op(Derivation::E2, v);
     }},
    {"[E2,E3] = -E1",
     [](const Polynomial& v) {
         return op(Derivation::E2, op(Derivation::E3, v)) - op(Derivation::E3, op(Derivation::E2, v)) +
                op(Derivation::E1, v);
     }},
    {"Dplus = i*E1 + E2",
     [](const Polynomial& v) {
         return op(Derivation::Dplus, v) - kI * op(Derivation::E1, v) - op(Derivation::E2, v);
     }},
    {"Dminus = i*E1 - E2",
     [](const Polynomial& v) {
         return op(Derivation::Dminus, v) - kI * op(Derivation::E1, v) + op(Derivation::E2, v);
     }},
    {"H = 2i*E3",
     [](const Polynomial& v) {
         return op(Derivation::H, v) - (GaussianComplex(2) * kI) * op(Derivation::E3, v);
     }},
    {"Laplace = Dplus*Dminus + Dminus*Dplus + H^2/2",
     [](const Polynomial& v) {
         Polynomial composite = op(Derivation::Dplus, op(Derivation::Dminus, v)) +
                                op(Derivation::Dminus, op(Derivation::Dplus, v)) +
                                GaussianComplex(Rational(1, 2)) * op(Derivation::H, op(Derivation::H, v));
         return op(Derivation::Laplace, v) - composite;
     }},
    {"Laplace = -2*(E1^2 + E2^2 + E3^2)",
     [](const Polynomial& v) {
         Polynomial sq = op(Derivation::E1, op(Derivation::E1, v)) + op(Derivation::E2, op(Derivation::E2, v)) +
                         op(Derivation::E3, op(Derivation::E3, v));
         return op(Derivation::Laplace, v) + GaussianComplex(2) * sq;
     }},
    {"[Laplace,E1] = 0",
     [](const Polynomial& v) {
         return op(Derivation::Laplace, op(Derivation::E1, v)) - op(Derivation::E1, op(Derivation::Laplace, v));
     }},
    {"[Laplace,E2] = 0",
     [](const Polynomial& v) {
         return op(Derivation::Laplace, op(Derivation::E2, v)) - op(Derivation::E2, op(Derivation::Laplace, v));
     }},
    {"[Laplace,E3] = 0",
     [](const Polynomial& v) {
         return op(Derivation::Laplace, op(Derivation::E3, v)) - op(Derivation::E3, op(Derivation::Laplace, v));
     }},
    {"[Laplace,Dplus] = 0",
     [](const Polynomial& v) {
         return op(Derivation::Laplace, op(Derivation::Dplus, v)) -
                op(Derivation::Dplus, op(Derivation::Laplace, v));
     }},
    {"[Laplace,Dminus] = 0",
     [](const Polynomial& v) {
         return op(Derivation::Laplace, op(Derivation::Dminus, v)) -
                op(Derivation::Dminus, op(Derivation::Laplace, v));
     }},
    {"[Laplace,H] = 0",
     [](const Polynomial& v) {
         return op(Derivation::Laplace, op(Derivation::H, v)) - op(Derivation::H, op(Derivation::Laplace, v));
     }},
};

} // namespace

CommutatorReport check_commutators(const std::vector<int>& orders) {
    CommutatorReport report;
    std::vector<Variable> basis = moment_basis(orders);
    for (const Relation& rel : kRelations) {
        RelationCheck check;
        check.relation = rel.name;
        check.pass = true;
        for (const Variable& v : basis) {
            if (!rel.residual(Polynomial::variable(v)).is_zero()) {
                check.pass = false;
                check.counterexample = v.name();
                break;
            }
        }
        report.all_pass = report.all_pass && check.pass;
        report.relations.push_back(std::move(check));
    }
    return report;
}

} // namespace ti
