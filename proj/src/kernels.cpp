#include "ti/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace ti {

std::vector<std::array<int, 3>> moment_index_set(int max_order) {
    if (max_order < 0 || max_order > 16)
        throw std::logic_error("moment order out of kernel range");
    std::vector<std::array<int, 3>> out;
    for (int o = 0; o <= max_order; ++o)
        for (int p = 0; p <= o; ++p)
            for (int q = 0; q <= o - p; ++q) out.push_back({p, q, o - p - q});
    return out;
}

namespace kernel_detail {

// Shared pairwise tree: blocks of up to kBlock points are summed
// sequentially (or vectorized), then combined as a balanced binary tree.
constexpr std::size_t kBlock = 64;
constexpr int kMaxOrder = 16;

void pairwise(void (*block)(const double*, const double*, const double*, const double*,
                            std::size_t, std::size_t, const std::array<int, 3>*, std::size_t,
                            double*),
              const double* xs, const double* ys, const double* zs, const double* ws,
              std::size_t lo, std::size_t hi, const std::array<int, 3>* idx, std::size_t nidx,
              double* out) {
    if (hi - lo <= kBlock) {
        block(xs, ys, zs, ws, lo, hi, idx, nidx, out);
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    pairwise(block, xs, ys, zs, ws, lo, mid, idx, nidx, out);
    std::vector<double> right(nidx);
    pairwise(block, xs, ys, zs, ws, mid, hi, idx, nidx, right.data());
    for (std::size_t k = 0; k < nidx; ++k) out[k] += right[k];
}

} // namespace kernel_detail

namespace {

using kernel_detail::kMaxOrder;

void scalar_block(const double* xs, const double* ys, const double* zs, const double* ws,
                  std::size_t lo, std::size_t hi, const std::array<int, 3>* idx,
                  std::size_t nidx, double* out) {
    std::fill(out, out + nidx, 0.0);
    double px[kMaxOrder + 1], py[kMaxOrder + 1], pz[kMaxOrder + 1];
    px[0] = py[0] = pz[0] = 1.0;
    for (std::size_t i = lo; i < hi; ++i) {
        for (int t = 1; t <= kMaxOrder; ++t) {
            px[t] = px[t - 1] * xs[i];
            py[t] = py[t - 1] * ys[i];
            pz[t] = pz[t - 1] * zs[i];
        }
        const double w = ws[i];
        for (std::size_t k = 0; k < nidx; ++k)
            out[k] += w * px[idx[k][0]] * py[idx[k][1]] * pz[idx[k][2]];
    }
}

void scalar_accumulate(const double* xs, const double* ys, const double* zs, const double* ws,
                       std::size_t count, int max_order, double* out) {
    const auto idx = moment_index_set(max_order);
    if (count == 0) {
        std::fill(out, out + idx.size(), 0.0);
        return;
    }
    kernel_detail::pairwise(scalar_block, xs, ys, zs, ws, 0, count, idx.data(), idx.size(), out);
}

} // namespace

const MomentKernel& scalar_kernel() {
    static const MomentKernel k{"scalar", scalar_accumulate};
    return k;
}

const MomentKernel& select_kernel() {
    if (const MomentKernel* v = avx2_kernel()) return *v;
    return scalar_kernel();
}

} // namespace ti
