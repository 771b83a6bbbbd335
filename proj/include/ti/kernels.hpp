#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace ti {

// Exponent triples (p,q,r) with p+q+r <= max_order, ascending by total
// order then lexicographically. This is the output layout of the moment
// kernels and the canonical iteration order of MomentTensor.
std::vector<std::array<int, 3>> moment_index_set(int max_order);

// A moment-summation kernel: writes sum_i w_i * x_i^p * y_i^q * z_i^r into
// out[k] for every index k of moment_index_set(max_order). Summation is
// pairwise (blocks of 64 points combined as a balanced tree) so the float
// error stays bounded on large clouds; all kernels share the same tree
// shape and agree to within rounding of the block sums.
struct MomentKernel {
    const char* name;
    void (*accumulate)(const double* xs, const double* ys, const double* zs,
                       const double* ws, std::size_t count, int max_order, double* out);
};

// Portable reference kernel.
const MomentKernel& scalar_kernel();

// 4-lane vector kernel; nullptr when the CPU or build lacks AVX2.
const MomentKernel* avx2_kernel();

// The widest kernel available at runtime.
const MomentKernel& select_kernel();

} // namespace ti
