#include "ti/linalg.hpp"

#include <stdexcept>

namespace ti {

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    std::size_t rows = m.size();
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col].is_zero())
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[row]);
        GaussianComplex inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c)
            m[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            GaussianComplex factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Mat m) {
    return rref(m).size();
}

std::vector<Vec> nullspace(const Mat& m, std::size_t cols) {
    Mat work = m;
    for (const auto& r : work)
        if (r.size() != cols)
            throw std::logic_error("nullspace: ragged matrix");
    auto pivots = rref(work);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(cols, GaussianComplex());
        v[free] = GaussianComplex(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -work[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const Mat& basis, const Vec& v) {
    Mat m = basis;
    std::size_t r0 = rank(m);
    m.push_back(v);
    return rank(std::move(m)) == r0;
}

} // namespace ti
