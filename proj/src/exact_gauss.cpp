#include "pcalg/exact_gauss.hpp"

#include <stdexcept>

namespace pcalg {

namespace {

// Forward elimination to row echelon form; returns the pivot column of each
// pivot row (in order).
std::vector<size_t> echelonize(RatMatrix& m) {
    std::vector<size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat factor = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) {
                Rat delta = factor * m[row][j];
                m[i][j] -= delta;
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

int rank(RatMatrix m) {
    return static_cast<int>(echelonize(m).size());
}

std::optional<std::vector<Rat>> solve_exact(RatMatrix m, std::vector<Rat> rhs) {
    const size_t rows = m.size();
    if (rhs.size() != rows) throw std::invalid_argument("solve_exact: rhs size mismatch");
    const size_t cols = rows == 0 ? 0 : m[0].size();
    for (size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
    if (rows == 0) return std::vector<Rat>(cols, Rat(0));

    auto pivots = echelonize(m);
    // A pivot in the augmented column means the system is inconsistent.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (size_t p = pivots.size(); p-- > 0;) {
        size_t col = pivots[p];
        Rat acc = m[p][cols];
        for (size_t j = col + 1; j < cols; ++j) {
            if (m[p][j] == 0 || x[j] == 0) continue;
            Rat prod = m[p][j] * x[j];
            acc -= prod;
        }
        x[col] = acc / m[p][col];
    }
    return x;
}

} // namespace pcalg
