#pragma once

#include <cstddef>
#include <vector>

#include "ti/gaussian.hpp"

namespace ti {

using Vec = std::vector<GaussianComplex>;
using Mat = std::vector<Vec>; // row major, rows of equal length

// In-place reduced row echelon form (exact Gauss-Jordan over the Gaussian
// rationals; pivot = first nonzero entry of the first eligible column).
// Returns the pivot columns in increasing order.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Basis of { x : m x = 0 }, one vector per free column in increasing column
// order, with entry 1 at the free column (reduced echelon convention).
std::vector<Vec> nullspace(const Mat& m, std::size_t cols);

// Whether v lies in the row span of basis.
bool in_span(const Mat& basis, const Vec& v);

} // namespace ti
