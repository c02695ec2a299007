#pragma once

#include "dendri/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dendri {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
/// The i-th standard basis vector (0-based).
Vector basis_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);

/// Dense matrix. at(k, j) is the coefficient of output basis vector k when the
/// map is applied to input basis vector j, so columns are images of basis vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    /// Builds a matrix from row-major integer entries.
    static Matrix from_rows(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<long long> entries);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& at(std::size_t k, std::size_t j) { return data_[k * cols_ + j]; }
    const Scalar& at(std::size_t k, std::size_t j) const { return data_[k * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector apply(std::span<const Scalar> v) const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix operator-() const;

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    Field field_ = Field::rational();
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Exact product; throws DimensionMismatch / FieldMismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix transpose(const Matrix& m);

/// Kronecker product: (a ⊗ b) acting on vec(x ⊗ y) with index (i * dim_b + j).
Matrix kron(const Matrix& a, const Matrix& b);

struct RankInverse {
    std::size_t rank = 0;
    std::optional<Matrix> inverse;  // present iff m is square of full rank
};

/// Rank by fraction-free (Bareiss) elimination; for square input also the
/// inverse by fraction-free Gauss-Jordan on [m | I]. Pivots are the first
/// nonzero entry in column order, so the result is deterministic.
RankInverse rank_and_inverse(const Matrix& m);
std::size_t rank(const Matrix& m);

/// The exchange σ(x⊗y) = y⊗x acting on the coefficient matrix of a 2-tensor.
Matrix exchange_sigma(const Matrix& r);

/// Applies X ⊗ Y to the 2-tensor with coefficient matrix t: returns X t Yᵀ.
Matrix apply_pair(const Matrix& x, const Matrix& y, const Matrix& t);

}  // namespace dendri
