#pragma once

#include "qlie/coeff.hpp"
#include "qlie/errors.hpp"

#include <vector>

namespace qlie {

/// Dense matrix over the coefficient field. Rows carry the lower index of
/// the transcribed tables, columns the upper one, so substituting these
/// matrices into algebra relations uses the ordinary matrix product.
class KMatrix {
  public:
    KMatrix() = default;
    KMatrix(int rows, int cols);

    static KMatrix identity(int n);
    static KMatrix zero(int n) { return KMatrix(n, n); }
    /// Elementary matrix with a single 1 at (row, col).
    static KMatrix unit(int n, int row, int col);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CoeffElem& at(int r, int c) { return entries_[static_cast<size_t>(r * cols_ + c)]; }
    const CoeffElem& at(int r, int c) const { return entries_[static_cast<size_t>(r * cols_ + c)]; }

    bool operator==(const KMatrix& other) const = default;
    bool is_zero() const;

    KMatrix operator-() const;
    KMatrix operator+(const KMatrix& other) const;
    KMatrix operator-(const KMatrix& other) const;
    KMatrix operator*(const KMatrix& other) const; // matmul
    KMatrix scaled(const CoeffElem& by) const;
    KMatrix transposed() const;

    /// True when the matrix equals scalar * identity; the scalar is stored
    /// into `scalar` in that case.
    bool is_scalar_multiple_of_identity(CoeffElem& scalar) const;

    double max_abs_eval(double qval) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<CoeffElem> entries_;
};

/// Kronecker product with index convention (i*dim + j).
KMatrix kron(const KMatrix& a, const KMatrix& b);

inline KMatrix operator*(const CoeffElem& c, const KMatrix& m) { return m.scaled(c); }

} // namespace qlie
