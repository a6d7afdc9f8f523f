#include "whq/matrix.hpp"

#include <utility>

namespace whq {

Matrix::Matrix(int rows, int cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f),
      a_(std::size_t(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(int n, const FieldSpec& f) {
    Matrix m(n, n, f);
    Scalar one = Scalar::one(f);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw ArityMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix c(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityMismatch("matrix sum shape");
    Matrix c(rows_, cols_, field_);
    for (std::size_t t = 0; t < a_.size(); ++t) c.a_[t] = a_[t] + o.a_[t];
    return c;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityMismatch("matrix difference shape");
    Matrix c(rows_, cols_, field_);
    for (std::size_t t = 0; t < a_.size(); ++t) c.a_[t] = a_[t] - o.a_[t];
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix c(rows_ * o.rows_, cols_ * o.cols_, field_);
    for (int i1 = 0; i1 < rows_; ++i1)
        for (int j1 = 0; j1 < cols_; ++j1) {
            const Scalar& a = (*this)(i1, j1);
            if (a.is_zero()) continue;
            for (int i2 = 0; i2 < o.rows_; ++i2)
                for (int j2 = 0; j2 < o.cols_; ++j2) {
                    const Scalar& b = o(i2, j2);
                    if (!b.is_zero()) c(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = a * b;
                }
        }
    return c;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    return a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_idempotent() const {
    return is_square() && *this * *this == *this;
}

Matrix::Echelon Matrix::rref() const {
    Matrix w = *this;
    std::vector<int> pivots;
    Scalar prev = Scalar::one(field_);
    int pr = 0;
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
        int sel = -1;
        for (int r = pr; r < rows_; ++r)
            if (!w(r, c).is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < cols_; ++j) std::swap(w(pr, j), w(sel, j));
        Scalar piv = w(pr, c);
        for (int i = pr + 1; i < rows_; ++i) {
            Scalar lead = w(i, c);
            for (int j = c + 1; j < cols_; ++j) {
                // fraction-free update; the division by the previous pivot is exact
                w(i, j) = (w(i, j) * piv - lead * w(pr, j)) / prev;
            }
            w(i, c) = Scalar::zero(field_);
        }
        pivots.push_back(c);
        prev = piv;
        ++pr;
    }
    // normalize to the (unique) reduced form
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
        int c = pivots[k];
        Scalar d = w(k, c);
        for (int j = c; j < cols_; ++j)
            if (!w(k, j).is_zero()) w(k, j) = w(k, j) / d;
        for (int i = 0; i < k; ++i) {
            Scalar f = w(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols_; ++j)
                if (!w(k, j).is_zero()) w(i, j) -= f * w(k, j);
        }
    }
    return {std::move(w), std::move(pivots)};
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw ArityMismatch("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_ + i) = Scalar::one(field_);
    }
    Echelon e = aug.rref();
    int r = 0;
    for (int c : e.pivots)
        if (c < cols_) ++r;
    if (r < rows_) throw Singular(rows_ - r);
    Matrix inv(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv(i, j) = e.reduced(i, cols_ + j);
    return inv;
}

Matrix Matrix::kernel_basis() const {
    Echelon e = rref();
    int r = static_cast<int>(e.pivots.size());
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (int c = 0; c < cols_; ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    Matrix k(cols_, static_cast<int>(free_cols.size()), field_);
    for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
        int fc = free_cols[t];
        k(fc, t) = Scalar::one(field_);
        for (int i = 0; i < r; ++i) k(e.pivots[i], t) = -e.reduced(i, fc);
    }
    return k;
}

Matrix Matrix::column_space_canonical() const {
    Echelon e = transpose().rref();
    int r = static_cast<int>(e.pivots.size());
    Matrix b(r, rows_, field_);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rows_; ++j) b(i, j) = e.reduced(i, j);
    return b;
}

Matrix Matrix::right_inverse() const {
    Echelon e = rref();
    if (static_cast<int>(e.pivots.size()) != rows_)
        throw Singular(rows_ - static_cast<int>(e.pivots.size()));
    Matrix block = cols_at(e.pivots).inverse();
    Matrix x(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) x(e.pivots[i], j) = block(i, j);
    return x;
}

Matrix Matrix::cols_at(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()), field_);
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::rows_at(const std::vector<int>& idx) const {
    Matrix m(static_cast<int>(idx.size()), cols_, field_);
    for (int i = 0; i < static_cast<int>(idx.size()); ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

} // namespace whq
