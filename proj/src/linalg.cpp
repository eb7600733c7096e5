#include "qlie/linalg.hpp"

#include <cassert>

namespace qlie {

KMatrix exact_inverse(const KMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    KMatrix a = m;
    KMatrix inv = KMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw DivisionByZero("singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        CoeffElem piv_inv = a.at(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            a.at(col, c) = a.at(col, c) * piv_inv;
            inv.at(col, c) = inv.at(col, c) * piv_inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            CoeffElem f = a.at(r, col);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) = a.at(r, c) - f * a.at(col, c);
                inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::optional<std::vector<CoeffElem>> solve_exact(const KMatrix& a, const std::vector<CoeffElem>& b) {
    int rows = a.rows();
    int cols = a.cols();
    assert(static_cast<int>(b.size()) == rows);
    KMatrix aug(rows, cols + 1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, cols) = b[static_cast<size_t>(r)];
    }
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!aug.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c <= cols; ++c) std::swap(aug.at(pivot, c), aug.at(rank, c));
        CoeffElem piv_inv = aug.at(rank, col).inverse();
        for (int c = 0; c <= cols; ++c) aug.at(rank, c) = aug.at(rank, c) * piv_inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || aug.at(r, col).is_zero()) continue;
            CoeffElem f = aug.at(r, col);
            for (int c = 0; c <= cols; ++c) aug.at(r, c) = aug.at(r, c) - f * aug.at(rank, c);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Inconsistent when a zero row has nonzero right side.
    for (int r = rank; r < rows; ++r)
        if (!aug.at(r, cols).is_zero()) return std::nullopt;
    assert(rank == cols); // full column rank expected by all callers
    std::vector<CoeffElem> x(static_cast<size_t>(cols));
    for (int i = 0; i < rank; ++i) x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = aug.at(i, cols);
    return x;
}

} // namespace qlie
