#pragma once

#include <string>
#include <vector>

#include "ti/polynomial.hpp"

namespace ti {

// Derivations of the moment-variable polynomial ring. E1, E2, E3 generate
// the rotation action; the complex combinations
//   Dplus = i*E1 + E2, Dminus = i*E1 - E2, H = 2i*E3
// satisfy [H, Dplus] = 2 Dplus, [H, Dminus] = -2 Dminus,
// [Dplus, Dminus] = H. Laplace is the second-order Casimir
//   Laplace = Dplus Dminus + Dminus Dplus + H^2 / 2 = -2 (E1^2 + E2^2 + E3^2),
// the scaling under which its eigenvalue on an s-module is s(s+2)/2.
enum class Derivation { E1, E2, E3, Dplus, Dminus, H, Laplace };

const char* derivation_name(Derivation d);

// Applies the operator, extended from variables by the Leibniz rule
// (Laplace as the composite above). The polynomial must contain moment
// variables only; a template variable raises std::invalid_argument.
Polynomial apply_derivation(Derivation d, const Polynomial& p);

// All moment variables a_{j,k,l} with j+k+l in orders, in variable order.
std::vector<Variable> moment_basis(const std::vector<int>& orders);

struct RelationCheck {
    std::string relation;
    bool pass = false;
    std::string counterexample; // variable name when pass == false
};

struct CommutatorReport {
    std::vector<RelationCheck> relations;
    bool all_pass = true;
};

// Verifies, exactly and on every basis variable of the given orders: the
// sl2 brackets, the so3 brackets with their empirically fixed signs
// ([E1,E2] = -E3, [E1,E3] = E2, [E2,E3] = -E1), the defining combinations
// of Dplus/Dminus/H, both Laplace identities, and that Laplace commutes
// with all six operators.
CommutatorReport check_commutators(const std::vector<int>& orders);

} // namespace ti
