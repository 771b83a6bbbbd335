#pragma once

#include <string>
#include <vector>

#include "ti/invariants.hpp"
#include "ti/moments.hpp"
#include "ti/verify.hpp"

namespace ti {

// Polynomial JSON: {"terms":[{"coeff":{"re":"p/q","im":"p/q"},
// "monomial":{"a_2_0_0":1,...}}]} with terms in canonical order. Rationals
// travel as decimal strings ("p" or "p/q") so round-trips are exact.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text); // throws parse_error

// Invariant lists serialize with eta spelling.
std::string invariants_to_json(const std::vector<NamedInvariant>& invs);
std::string invariants_to_text(const std::vector<NamedInvariant>& invs);

// {"kind":"normalized","max_order":3,"entries":{"2_0_0":v,...}}
std::string moment_tensor_to_json(const MomentTensor& t);
MomentTensor moment_tensor_from_json(const std::string& text);

// {"dims":[nx,ny,nz],"spacing":[dx,dy,dz],"origin":[x,y,z],"values":[...]},
// values in x-fastest order.
VoxelGrid voxel_grid_from_json(const std::string& text);
VoxelGrid voxel_grid_from_json_file(const std::string& path);

std::string invariance_report_to_json(const InvarianceReport& r);

// One line per check: "[PASS]/[FAIL] name: detail".
std::string self_check_to_text(const SelfCheckReport& r);

} // namespace ti
