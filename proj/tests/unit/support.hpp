#pragma once

#include "dendri/algebra.hpp"
#include "dendri/dbialgebra.hpp"

#include <random>

namespace fx {

using namespace dendri;

inline Scalar q(long long v) { return Scalar(Field::rational(), v); }
inline Scalar q(long long n, long long d) { return Scalar(Field::rational(), Rational(n, d)); }

/// e1≻e2 = e2, e2≻e1 = −e2, e1≺e1 = e1, e2≺e1 = e2 (0-based indices below).
inline DendriformAlgebra e1(const Field& f = Field::rational()) {
    DendriformAlgebra a = DendriformAlgebra::zero(f, 2);
    a.succ.at(0, 1, 1) = Scalar(f, 1);
    a.succ.at(1, 0, 1) = Scalar(f, -1);
    a.prec.at(0, 0, 0) = Scalar(f, 1);
    a.prec.at(1, 0, 1) = Scalar(f, 1);
    return a;
}

/// r = e2 ⊗ e1.
inline TwoTensor r21(const Field& f = Field::rational()) {
    Matrix m(f, 2, 2);
    m.at(1, 0) = Scalar(f, 1);
    return TwoTensor(m);
}

inline Matrix mat(std::size_t rows, std::size_t cols, std::initializer_list<long long> e,
                  const Field& f = Field::rational()) {
    return Matrix::from_rows(f, rows, cols, e);
}

inline Vector vec(std::initializer_list<long long> e, const Field& f = Field::rational()) {
    Vector v;
    for (long long x : e) v.emplace_back(f, x);
    return v;
}

inline Matrix random_matrix(std::mt19937& g, const Field& f, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, d(g));
    return m;
}

}  // namespace fx
