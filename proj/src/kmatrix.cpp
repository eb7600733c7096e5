#include "qlie/kmatrix.hpp"

#include <cmath>

namespace qlie {

KMatrix::KMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
}

KMatrix KMatrix::identity(int n) {
    KMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CoeffElem::one();
    return m;
}

KMatrix KMatrix::unit(int n, int row, int col) {
    KMatrix m(n, n);
    m.at(row, col) = CoeffElem::one();
    return m;
}

bool KMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

KMatrix KMatrix::operator-() const {
    KMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

KMatrix KMatrix::operator+(const KMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix add");
    KMatrix r = *this;
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += other.entries_[i];
    return r;
}

KMatrix KMatrix::operator-(const KMatrix& other) const { return *this + (-other); }

KMatrix KMatrix::operator*(const KMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product");
    KMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CoeffElem& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const CoeffElem& b = other.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

KMatrix KMatrix::scaled(const CoeffElem& by) const {
    KMatrix r = *this;
    for (auto& e : r.entries_) e = e * by;
    return r;
}

KMatrix KMatrix::transposed() const {
    KMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool KMatrix::is_scalar_multiple_of_identity(CoeffElem& scalar) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const CoeffElem& d = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !(at(i, j) == d)) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    scalar = d;
    return true;
}

double KMatrix::max_abs_eval(double qval) const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e.eval_numeric(qval)));
    return m;
}

KMatrix kron(const KMatrix& a, const KMatrix& b) {
    KMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

} // namespace qlie
