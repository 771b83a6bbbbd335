#pragma once

#include <map>
#include <vector>

#include "ti/sl2.hpp"

namespace ti {

// Sign of the H-eigenvalue on lowest weight vectors (+1 or -1 times s).
// Fixed once per process by probing the order-2, s=4 solution against
// v0 = 2*a011 + i*(a002 - a020); with the operator conventions in use the
// probe resolves to -1.
int lowest_weight_sign();

// Basis of the space of linear forms z over the given moment orders with
// Dminus(z) = 0 and H(z) = sign*s*z, normalized to leading coefficient 1.
// Every returned z satisfies Dplus^s(z) != 0 and Dplus^(s+1)(z) = 0, which
// is re-verified before returning. Deterministic: blocks ascend by order,
// reduced-echelon vectors within each block.
std::vector<Polynomial> lowest_weight_vectors(const std::vector<int>& orders, int s);

// v_k = (s-k)!/s! * Dplus^k(z) for k = 0..s. Requires z to generate an
// irreducible of order exactly s: throws domain_error("not a lowest weight
// vector of order s") when Dplus^s(z) = 0 or Dplus^(s+1)(z) != 0 (or when
// Dminus(z) != 0).
std::vector<Polynomial> standard_basis(const Polynomial& z, int s);

struct IsotypicComponent {
    int s = 0;
    int multiplicity = 0;
    std::vector<Polynomial> lowest_weight;
};

struct ModuleDecomposition {
    std::vector<int> orders;
    std::vector<IsotypicComponent> components; // ascending s, only multiplicity > 0
    int total_dimension() const;
};

// Multiplicity of the order-k irreducible in the span of moment variables
// of orders 2..d (closed form).
long closed_form_multiplicity(int k, int d);

// Empirical decomposition of the span of the given moment orders into
// irreducibles. When orders is exactly {2,...,d} the multiplicities are
// cross-checked against the closed form; any mismatch (or a dimension
// mismatch in all cases) raises std::logic_error.
ModuleDecomposition decompose(const std::vector<int>& orders);

// Exact eigenbasis of the Laplace operator on the span of the given moment
// orders, keyed by eigenvalue s(s+2)/2. Basis vectors are normalized to
// leading coefficient 1.
std::map<long, std::vector<Polynomial>> laplace_eigenbasis(const std::vector<int>& orders);

} // namespace ti
