#pragma once

#include "dendri/matrix.hpp"

#include <array>
#include <cstddef>

namespace dendri {

/// Dense rank-3 array of scalars. Used both for structure constants
/// (at(i, j, k) = coefficient of e_k in e_i ∘ e_j) and for elements of
/// A⊗A⊗A (at(i, j, k) = coefficient of e_i⊗e_j⊗e_k).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(const Field& f, std::size_t d1, std::size_t d2, std::size_t d3);
    /// Cube of side n.
    Tensor3(const Field& f, std::size_t n) : Tensor3(f, n, n, n) {}

    const Field& field() const noexcept { return field_; }
    std::array<std::size_t, 3> dims() const noexcept { return {d1_, d2_, d3_}; }
    std::size_t dim(int axis) const { return dims().at(static_cast<std::size_t>(axis)); }
    bool is_cube() const noexcept { return d1_ == d2_ && d2_ == d3_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d2_ + j) * d3_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * d2_ + j) * d3_ + k]; }

    bool is_zero() const;

    /// Slice with the first index fixed: a d2×d3 matrix whose (a, b) entry is at(i, a, b).
    Matrix slice(std::size_t i) const;

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    Tensor3 operator-() const;
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(const Scalar& s, const Tensor3& t);
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    Field field_ = Field::rational();
    std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<Scalar> data_;
};

/// Bilinear product x ∘ y from structure constants c (c.at(i, j, k): e_i ∘ e_j has e_k-coefficient).
Vector multiply(const Tensor3& c, std::span<const Scalar> x, std::span<const Scalar> y);
/// Matrix of y ↦ x ∘ y.
Matrix left_operator(const Tensor3& c, std::span<const Scalar> x);
/// Matrix of y ↦ y ∘ x.
Matrix right_operator(const Tensor3& c, std::span<const Scalar> x);

/// (X ⊗ Y ⊗ Z) applied to an element of A⊗A⊗A.
Tensor3 apply_triple(const Matrix& x, const Matrix& y, const Matrix& z, const Tensor3& t);
/// u ⊗ m and m ⊗ u for a vector u and a 2-tensor m.
Tensor3 outer(std::span<const Scalar> u, const Matrix& m);
Tensor3 outer(const Matrix& m, std::span<const Scalar> u);

}  // namespace dendri
