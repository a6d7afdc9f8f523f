#ifndef WHQ_MATRIX_HPP
#define WHQ_MATRIX_HPP

#include <vector>

#include "whq/scalar.hpp"

namespace whq {

// Dense exact matrix. Inner loops skip zero entries, which keeps products of
// the very sparse structure-constant tensors cheap without a sparse format.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const FieldSpec& f);

    static Matrix identity(int n, const FieldSpec& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    Scalar& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    Matrix kron(const Matrix& o) const; // row-major convention e_i (x) e_j -> i*d + j
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_idempotent() const;

    struct Echelon {
        Matrix reduced;          // unique RREF
        std::vector<int> pivots; // pivot column indices, increasing
    };
    // Fraction-free (Bareiss) forward elimination with first-nonzero pivot
    // selection, then exact normalization to the reduced form.
    Echelon rref() const;

    int rank() const { return static_cast<int>(rref().pivots.size()); }

    Matrix inverse() const; // Singular(rank deficit) when not invertible

    // Columns form a deterministic basis of the kernel (free-variable basis
    // from the RREF, ordered by free column).
    Matrix kernel_basis() const;

    // Canonical basis of the column space: nonzero rows of rref(transpose),
    // one row per basis vector. Equal column spaces give equal results.
    Matrix column_space_canonical() const;

    // Right inverse of a full-row-rank matrix (solves this * X = id).
    Matrix right_inverse() const;

    Matrix cols_at(const std::vector<int>& idx) const;
    Matrix rows_at(const std::vector<int>& idx) const;

private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_{};
    std::vector<Scalar> a_;
};

} // namespace whq

#endif
