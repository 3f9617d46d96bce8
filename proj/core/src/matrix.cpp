#include "stableforms/matrix.hpp"

#include <utility>

namespace stableforms {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldDesc field)
    : rows_(rows), cols_(cols), e_(rows * cols), field_(field) {}

Matrix Matrix::identity(std::size_t n, FieldDesc field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows(), b.cols(), join_fields(a.field(), b.field()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix c(a.rows(), a.cols(), join_fields(a.field(), b.field()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix c(a.rows(), a.cols(), join_fields(a.field(), b.field()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix out(m.rows(), m.cols(), join_fields(c.field(), m.field()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = c * m(i, j);
    return out;
}

namespace {

// In-place reduced row echelon form; returns the pivot (row, col) pairs.
// Pivot choice is the first nonzero entry in the column, which keeps the
// result deterministic.
std::vector<std::pair<std::size_t, std::size_t>> rref(Matrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pr, j));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> mat_kernel(const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& [pr, pc] : pivots) is_pivot[pc] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = Scalar(1);
        for (const auto& [pr, pc] : pivots) v[pc] = -r(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t mat_rank(const Matrix& m) {
    Matrix r = m;
    return rref(r).size();
}

Scalar mat_det(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    bool negate = false;
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && a(pr, col).is_zero()) ++pr;
        if (pr == n) return Scalar(0);
        if (pr != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pr, j));
            negate = !negate;
        }
        det *= a(col, col);
        const Scalar inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const Scalar f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return negate ? -det : det;
}

std::optional<std::vector<Scalar>> mat_solve(const Matrix& m, const std::vector<Scalar>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve dimension mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    const auto pivots = rref(aug);
    // A pivot in the rhs column marks an inconsistent row 0 = 1.
    for (const auto& [pr, pc] : pivots)
        if (pc == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols());
    for (const auto& [pr, pc] : pivots) x[pc] = aug(pr, m.cols());
    return x;
}

Signature sym_signature(const Matrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature of an asymmetric matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        // Get a nonzero entry onto the diagonal at (k,k), congruently.
        if (a(k, k).is_zero()) {
            std::size_t d = k + 1;
            while (d < n && a(d, d).is_zero()) ++d;
            if (d < n) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(d, j));
                for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, d));
            } else {
                // All remaining diagonal entries vanish: pull in a nonzero
                // off-diagonal pair via row+column addition.
                std::size_t oi = n, oj = n;
                for (std::size_t i = k; i < n && oi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (!a(i, j).is_zero()) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi == n) {
                    sig.nullity += n - k;
                    break;
                }
                for (std::size_t col = 0; col < n; ++col) a(oi, col) += a(oj, col);
                for (std::size_t row = 0; row < n; ++row) a(row, oi) += a(row, oj);
                // now a(oi,oi) = 2*old(oi,oj) != 0
                if (oi != k) {
                    for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(oi, j));
                    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, oi));
                }
            }
        }
        const Scalar piv = a(k, k);
        const int s = piv.sign();
        if (s > 0) ++sig.positive;
        else ++sig.negative;
        const Scalar inv = piv.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Scalar f = a(i, k) * inv;
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, k);
        }
    }
    return sig;
}

Matrix mat_inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n) throw std::domain_error("matrix is singular");
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace stableforms
