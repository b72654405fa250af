#include "gi/matrix.hpp"

#include "gi/errors.hpp"

#include <algorithm>

namespace gi {
namespace {

void require_same_size(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("matrix sizes " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " differ");
}

Matrix to_work(const SquareMatrix& m) {
    Matrix w(m.size(), m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            w(i, j) = m(i, j);
    return w;
}

} // namespace

SquareMatrix::SquareMatrix(size_t n, bool upper_triangular)
    : n_(n), upper_(upper_triangular), data_(n * n) {}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<CycloScalar>> rows)
    : n_(rows.size()), data_(rows.size() * rows.size()) {
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw DimensionMismatch("matrix literal is not square");
        size_t j = 0;
        for (const auto& v : row)
            data_[i * n_ + j++] = v;
        ++i;
    }
}

SquareMatrix SquareMatrix::identity(size_t n) {
    SquareMatrix m(n);
    for (size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

SquareMatrix SquareMatrix::unit(size_t n, size_t i, size_t j) {
    if (i >= n || j >= n)
        throw DimensionMismatch("matrix unit index out of range");
    SquareMatrix m(n);
    m.data_[i * n + j] = 1;
    return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<CycloScalar>& d) {
    SquareMatrix m(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        m.data_[i * d.size() + i] = d[i];
    return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<CycloScalar>>& rows) {
    SquareMatrix m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw DimensionMismatch("matrix rows are not square");
        for (size_t j = 0; j < rows.size(); ++j)
            m.data_[i * m.n_ + j] = rows[i][j];
    }
    return m;
}

void SquareMatrix::set(size_t i, size_t j, CycloScalar v) {
    if (i >= n_ || j >= n_)
        throw DimensionMismatch("matrix index out of range");
    if (upper_ && i > j && !v.is_zero())
        throw InvariantViolation("nonzero entry below the diagonal of an upper triangular matrix");
    data_[i * n_ + j] = std::move(v);
}

bool SquareMatrix::is_upper_triangular() const {
    for (size_t i = 1; i < n_; ++i)
        for (size_t j = 0; j < i; ++j)
            if (!data_[i * n_ + j].is_zero())
                return false;
    return true;
}

SquareMatrix SquareMatrix::as_upper_triangular() const {
    if (!is_upper_triangular())
        throw InvariantViolation("matrix has nonzero entries below the diagonal");
    SquareMatrix m = *this;
    m.upper_ = true;
    return m;
}

SquareMatrix SquareMatrix::as_full() const {
    SquareMatrix m = *this;
    m.upper_ = false;
    return m;
}

bool SquareMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const CycloScalar& x) { return x.is_zero(); });
}

bool SquareMatrix::is_diagonal() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (i != j && !data_[i * n_ + j].is_zero())
                return false;
    return true;
}

size_t SquareMatrix::nonzero_count() const {
    return static_cast<size_t>(
        std::count_if(data_.begin(), data_.end(), [](const CycloScalar& x) { return !x.is_zero(); }));
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix t(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            t.data_[j * n_ + i] = data_[i * n_ + j];
    return t;
}

SquareMatrix SquareMatrix::inverse() const {
    auto inv = gi::inverse(to_work(*this));
    if (!inv)
        throw SingularMatrix("matrix is singular");
    SquareMatrix out(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            out.data_[i * n_ + j] = (*inv)(i, j);
    if (upper_)
        out.upper_ = true; // inverse of an invertible upper triangular matrix stays in UT_n
    return out;
}

CycloScalar SquareMatrix::determinant() const {
    return bareiss_determinant(to_work(*this));
}

size_t SquareMatrix::rank() const {
    return gi::rank(to_work(*this));
}

SquareMatrix SquareMatrix::pow(long k) const {
    SquareMatrix base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    SquareMatrix result = identity(n_);
    result.upper_ = upper_;
    while (e > 0) {
        if (e & 1UL)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

CycloScalar SquareMatrix::leading_entry() const {
    for (const auto& x : data_)
        if (!x.is_zero())
            return x;
    return CycloScalar();
}

SquareMatrix SquareMatrix::normalized() const {
    CycloScalar lead = leading_entry();
    if (lead.is_zero() || lead.is_one())
        return *this;
    return *this * lead.inv();
}

SquareMatrix SquareMatrix::operator-() const {
    SquareMatrix m = *this;
    for (auto& x : m.data_)
        x = -x;
    return m;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& rhs) {
    require_same_size(*this, rhs);
    for (size_t k = 0; k < data_.size(); ++k) {
        if (!rhs.data_[k].is_zero())
            data_[k] += rhs.data_[k];
    }
    upper_ = upper_ && rhs.upper_;
    return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& rhs) {
    require_same_size(*this, rhs);
    for (size_t k = 0; k < data_.size(); ++k) {
        if (!rhs.data_[k].is_zero())
            data_[k] -= rhs.data_[k];
    }
    upper_ = upper_ && rhs.upper_;
    return *this;
}

SquareMatrix& SquareMatrix::operator*=(const CycloScalar& c) {
    for (auto& x : data_) {
        if (!x.is_zero())
            x *= c;
    }
    return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_size(a, b);
    const size_t n = a.n_;
    SquareMatrix c(n, a.upper_ && b.upper_);
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            const CycloScalar& aik = a.data_[i * n + k];
            if (aik.is_zero())
                continue;
            for (size_t j = 0; j < n; ++j) {
                const CycloScalar& bkj = b.data_[k * n + j];
                if (bkj.is_zero())
                    continue;
                if (aik.is_one())
                    c.data_[i * n + j] += bkj;
                else
                    c.data_[i * n + j] += aik * bkj;
            }
        }
    }
    return c;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
}

SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
    const size_t p = a.size();
    const size_t q = b.size();
    SquareMatrix out(p * q);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) {
            const CycloScalar& aij = a(i, j);
            if (aij.is_zero())
                continue;
            for (size_t k = 0; k < q; ++k)
                for (size_t l = 0; l < q; ++l) {
                    const CycloScalar& bkl = b(k, l);
                    if (!bkl.is_zero())
                        out.set(i * q + k, j * q + l, aij * bkl);
                }
        }
    return out;
}

bool proportional(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.size() != b.size() || a.is_zero() || b.is_zero())
        return false;
    return a.normalized() == b.normalized();
}

std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
    os << "[";
    for (size_t i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (size_t j = 0; j < m.size(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

void Matrix::swap_rows(size_t a, size_t b) {
    if (a == b)
        return;
    for (size_t j = 0; j < cols_; ++j)
        std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

size_t rank(Matrix m) {
    // Bareiss: after step k every entry of the trailing block is a (k+1)-minor,
    // so the division by the previous pivot is exact.
    CycloScalar prev(1);
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        const CycloScalar pivot = m(r, c);
        const CycloScalar prev_inv = prev.inv();
        for (size_t i = r + 1; i < m.rows(); ++i) {
            const CycloScalar lead = m(i, c);
            for (size_t j = c + 1; j < m.cols(); ++j) {
                CycloScalar v = pivot * m(i, j);
                if (!lead.is_zero() && !m(r, j).is_zero())
                    v -= lead * m(r, j);
                if (!prev.is_one() && !v.is_zero())
                    v *= prev_inv;
                m(i, j) = std::move(v);
            }
            m(i, c) = CycloScalar();
        }
        prev = pivot;
        ++r;
    }
    return r;
}

CycloScalar bareiss_determinant(Matrix m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const size_t n = m.rows();
    if (n == 0)
        return CycloScalar(1);
    CycloScalar prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m(piv, k).is_zero())
            ++piv;
        if (piv == n)
            return CycloScalar();
        if (piv != k) {
            m.swap_rows(k, piv);
            sign = -sign;
        }
        const CycloScalar prev_inv = prev.inv();
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                CycloScalar v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                if (!prev.is_one())
                    v *= prev_inv;
                m(i, j) = std::move(v);
            }
        prev = m(k, k);
    }
    CycloScalar det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        const CycloScalar inv = m(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const CycloScalar f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<CycloScalar>> nullspace(Matrix m) {
    const std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<CycloScalar>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<CycloScalar> v(m.cols());
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (!m(r, free).is_zero())
                v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(Matrix m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    const size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const std::vector<size_t> pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out(i, j) = aug(i, n + j);
    return out;
}

} // namespace gi
