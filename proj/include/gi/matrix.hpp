#pragma once

// Dense matrices over CycloScalar.
//
// SquareMatrix is an element of M_n(F) (or of UT_n(F) when flagged upper
// triangular). Matrix is a rectangular work matrix for the linear systems the
// membership tests and solvers reduce to.

#include "gi/scalars.hpp"

#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace gi {

class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(size_t n, bool upper_triangular = false);
    SquareMatrix(std::initializer_list<std::initializer_list<CycloScalar>> rows);

    static SquareMatrix identity(size_t n);
    /// Matrix unit e_ij, 0-based indices.
    static SquareMatrix unit(size_t n, size_t i, size_t j);
    static SquareMatrix diagonal(const std::vector<CycloScalar>& d);
    static SquareMatrix from_rows(const std::vector<std::vector<CycloScalar>>& rows);

    size_t size() const { return n_; }
    const CycloScalar& operator()(size_t i, size_t j) const { return data_[i * n_ + j]; }
    /// Throws InvariantViolation when writing below the diagonal of a UT_n matrix.
    void set(size_t i, size_t j, CycloScalar v);

    bool upper_triangular() const { return upper_; }
    /// Entries strictly below the diagonal are zero (independent of the flag).
    bool is_upper_triangular() const;
    /// Copy flagged as an element of UT_n; throws InvariantViolation if it is not one.
    SquareMatrix as_upper_triangular() const;
    SquareMatrix as_full() const;

    bool is_zero() const;
    bool is_diagonal() const;
    size_t nonzero_count() const;

    SquareMatrix transpose() const;
    SquareMatrix inverse() const;
    CycloScalar determinant() const;
    size_t rank() const;
    SquareMatrix pow(long k) const;
    /// First nonzero entry (row-major), zero for the zero matrix.
    CycloScalar leading_entry() const;
    /// Rescaled so that leading_entry() == 1.
    SquareMatrix normalized() const;

    SquareMatrix operator-() const;
    SquareMatrix& operator+=(const SquareMatrix& rhs);
    SquareMatrix& operator-=(const SquareMatrix& rhs);
    SquareMatrix& operator*=(const CycloScalar& c);

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const CycloScalar& c, SquareMatrix a) { return a *= c; }
    friend SquareMatrix operator*(SquareMatrix a, const CycloScalar& c) { return a *= c; }

    /// Entry-wise equality; the triangular flag is not compared.
    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);

    const std::vector<CycloScalar>& entries() const { return data_; }

private:
    size_t n_ = 0;
    bool upper_ = false;
    std::vector<CycloScalar> data_;
};

/// Kronecker product with `a` as the slow (block) index.
SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b);

/// `a` is a nonzero scalar multiple of `b`.
bool proportional(const SquareMatrix& a, const SquareMatrix& b);

std::ostream& operator<<(std::ostream& os, const SquareMatrix& m);

// Rectangular matrices and exact linear algebra

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    CycloScalar& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const CycloScalar& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(size_t a, size_t b);

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<CycloScalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination.
size_t rank(Matrix m);
CycloScalar bareiss_determinant(Matrix m);
/// Basis of {x : m x = 0}, each vector with its last pivot-free coordinate 1.
std::vector<std::vector<CycloScalar>> nullspace(Matrix m);
/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(Matrix m);

} // namespace gi
