#pragma once

#include "stableforms/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stableforms {

/// Dense matrix of exact Scalars, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, FieldDesc field = FieldDesc::rationals());

    static Matrix identity(std::size_t n, FieldDesc field = FieldDesc::rationals());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDesc& field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    Matrix transposed() const;
    Scalar trace() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M*v

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
    FieldDesc field_ = FieldDesc::rationals();
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& m);

/// Canonical basis of the right null space {v : Mv = 0}. The basis follows
/// the reduced-echelon free-variable pattern (one unit entry per free
/// column), so the result is deterministic across implementations.
std::vector<std::vector<Scalar>> mat_kernel(const Matrix& m);

std::size_t mat_rank(const Matrix& m);

/// Exact determinant by pivoted elimination. Throws on non-square input.
Scalar mat_det(const Matrix& m);

/// Exact solution of M x = rhs. Returns nullopt when the system is
/// inconsistent; for a singular consistent system the particular solution
/// with all free variables zero is returned.
std::optional<std::vector<Scalar>> mat_solve(const Matrix& m, const std::vector<Scalar>& rhs);

struct Signature {
    std::size_t positive = 0, negative = 0, nullity = 0;
    bool operator==(const Signature&) const = default;
    bool is_definite() const { return nullity == 0 && (positive == 0 || negative == 0); }
};

/// Sylvester inertia of a symmetric matrix by exact congruence
/// diagonalization. Throws on asymmetric input.
Signature sym_signature(const Matrix& m);

Matrix mat_inverse(const Matrix& m);  // throws std::domain_error when singular

}  // namespace stableforms
