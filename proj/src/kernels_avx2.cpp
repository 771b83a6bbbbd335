#include "ti/kernels.hpp"

// Built with -mavx2 -mfma when the toolchain supports them; selected at
// runtime only if the CPU reports both.

#if defined(__AVX2__) && defined(__FMA__) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace ti {

namespace kernel_detail {
void pairwise(void (*block)(const double*, const double*, const double*, const double*,
                            std::size_t, std::size_t, const std::array<int, 3>*, std::size_t,
                            double*),
              const double* xs, const double* ys, const double* zs, const double* ws,
              std::size_t lo, std::size_t hi, const std::array<int, 3>* idx, std::size_t nidx,
              double* out);
constexpr int kMaxOrder = 16;
constexpr std::size_t kMaxIndices = 969; // moment_index_set(16).size()
} // namespace kernel_detail

namespace {

using kernel_detail::kMaxIndices;
using kernel_detail::kMaxOrder;

void avx2_block(const double* xs, const double* ys, const double* zs, const double* ws,
                std::size_t lo, std::size_t hi, const std::array<int, 3>* idx,
                std::size_t nidx, double* out) {
    __m256d acc[kMaxIndices];
    for (std::size_t k = 0; k < nidx; ++k) acc[k] = _mm256_setzero_pd();

    __m256d px[kMaxOrder + 1], py[kMaxOrder + 1], pz[kMaxOrder + 1];
    px[0] = py[0] = pz[0] = _mm256_set1_pd(1.0);

    std::size_t i = lo;
    for (; i + 4 <= hi; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        const __m256d y = _mm256_loadu_pd(ys + i);
        const __m256d z = _mm256_loadu_pd(zs + i);
        const __m256d w = _mm256_loadu_pd(ws + i);
        for (int t = 1; t <= kMaxOrder; ++t) {
            px[t] = _mm256_mul_pd(px[t - 1], x);
            py[t] = _mm256_mul_pd(py[t - 1], y);
            pz[t] = _mm256_mul_pd(pz[t - 1], z);
        }
        for (std::size_t k = 0; k < nidx; ++k) {
            const __m256d m = _mm256_mul_pd(
                _mm256_mul_pd(px[idx[k][0]], py[idx[k][1]]), pz[idx[k][2]]);
            acc[k] = _mm256_fmadd_pd(w, m, acc[k]);
        }
    }

    double sx[kMaxOrder + 1], sy[kMaxOrder + 1], sz[kMaxOrder + 1];
    sx[0] = sy[0] = sz[0] = 1.0;
    std::vector<double> tail(nidx, 0.0);
    for (; i < hi; ++i) {
        for (int t = 1; t <= kMaxOrder; ++t) {
            sx[t] = sx[t - 1] * xs[i];
            sy[t] = sy[t - 1] * ys[i];
            sz[t] = sz[t - 1] * zs[i];
        }
        for (std::size_t k = 0; k < nidx; ++k)
            tail[k] += ws[i] * sx[idx[k][0]] * sy[idx[k][1]] * sz[idx[k][2]];
    }

    for (std::size_t k = 0; k < nidx; ++k) {
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc[k]);
        out[k] = ((lanes[0] + lanes[2]) + (lanes[1] + lanes[3])) + tail[k];
    }
}

void avx2_accumulate(const double* xs, const double* ys, const double* zs, const double* ws,
                     std::size_t count, int max_order, double* out) {
    const auto idx = moment_index_set(max_order);
    if (count == 0) {
        std::fill(out, out + idx.size(), 0.0);
        return;
    }
    kernel_detail::pairwise(avx2_block, xs, ys, zs, ws, 0, count, idx.data(), idx.size(), out);
}

} // namespace

const MomentKernel* avx2_kernel() {
    static const MomentKernel k{"avx2", avx2_accumulate};
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &k : nullptr;
}

} // namespace ti

#else

namespace ti {
const MomentKernel* avx2_kernel() { return nullptr; }
} // namespace ti

#endif
