#include "dendri/tensor3.hpp"

#include "dendri/errors.hpp"

#include <string>

namespace dendri {

namespace {

void require_cube_operand(const Tensor3& c, std::size_t n, const char* what) {
    if (!c.is_cube() || c.dim(0) != n) {
        throw DimensionMismatch(std::string(what) + ": operand length " + std::to_string(n) +
                                " does not match structure constants of dimension " + std::to_string(c.dim(0)));
    }
}

}  // namespace

Tensor3::Tensor3(const Field& f, std::size_t d1, std::size_t d2, std::size_t d3)
    : field_(f), d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3, Scalar::zero(f)) {}

bool Tensor3::is_zero() const { return dendri::is_zero(data_); }

Matrix Tensor3::slice(std::size_t i) const {
    Matrix m(field_, d2_, d3_);
    for (std::size_t a = 0; a < d2_; ++a) {
        for (std::size_t b = 0; b < d3_; ++b) m.at(a, b) = at(i, a, b);
    }
    return m;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (dims() != o.dims()) throw DimensionMismatch("Tensor3 sum: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (dims() != o.dims()) throw DimensionMismatch("Tensor3 difference: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 out = *this;
    for (auto& s : out.data_) s = -s;
    return out;
}

Tensor3 operator*(const Scalar& s, const Tensor3& t) {
    Tensor3 out = t;
    for (auto& e : out.data_) e *= s;
    return out;
}

Vector multiply(const Tensor3& c, std::span<const Scalar> x, std::span<const Scalar> y) {
    const std::size_t n = c.dim(0);
    require_cube_operand(c, x.size(), "multiply");
    require_cube_operand(c, y.size(), "multiply");
    Vector out = zero_vector(c.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& cijk = c.at(i, j, k);
                if (!cijk.is_zero()) out[k] += w * cijk;
            }
        }
    }
    return out;
}

Matrix left_operator(const Tensor3& c, std::span<const Scalar> x) {
    const std::size_t n = c.dim(0);
    require_cube_operand(c, x.size(), "left_operator");
    Matrix m(c.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& cijk = c.at(i, j, k);
                if (!cijk.is_zero()) m.at(k, j) += x[i] * cijk;
            }
        }
    }
    return m;
}

Matrix right_operator(const Tensor3& c, std::span<const Scalar> x) {
    const std::size_t n = c.dim(0);
    require_cube_operand(c, x.size(), "right_operator");
    Matrix m(c.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& cjik = c.at(j, i, k);
                if (!cjik.is_zero()) m.at(k, j) += x[i] * cjik;
            }
        }
    }
    return m;
}

Tensor3 apply_triple(const Matrix& x, const Matrix& y, const Matrix& z, const Tensor3& t) {
    const auto [d1, d2, d3] = t.dims();
    if (x.cols() != d1 || y.cols() != d2 || z.cols() != d3) throw DimensionMismatch("apply_triple: shapes differ");
    // Contract one leg at a time.
    Tensor3 s1(t.field(), x.rows(), d2, d3);
    for (std::size_t p = 0; p < x.rows(); ++p)
        for (std::size_t i = 0; i < d1; ++i) {
            const Scalar& w = x.at(p, i);
            if (w.is_zero()) continue;
            for (std::size_t j = 0; j < d2; ++j)
                for (std::size_t k = 0; k < d3; ++k) s1.at(p, j, k) += w * t.at(i, j, k);
        }
    Tensor3 s2(t.field(), x.rows(), y.rows(), d3);
    for (std::size_t p = 0; p < x.rows(); ++p)
        for (std::size_t q = 0; q < y.rows(); ++q)
            for (std::size_t j = 0; j < d2; ++j) {
                const Scalar& w = y.at(q, j);
                if (w.is_zero()) continue;
                for (std::size_t k = 0; k < d3; ++k) s2.at(p, q, k) += w * s1.at(p, j, k);
            }
    Tensor3 out(t.field(), x.rows(), y.rows(), z.rows());
    for (std::size_t p = 0; p < x.rows(); ++p)
        for (std::size_t q = 0; q < y.rows(); ++q)
            for (std::size_t s = 0; s < z.rows(); ++s)
                for (std::size_t k = 0; k < d3; ++k) {
                    const Scalar& w = z.at(s, k);
                    if (!w.is_zero()) out.at(p, q, s) += w * s2.at(p, q, k);
                }
    return out;
}

Tensor3 outer(std::span<const Scalar> u, const Matrix& m) {
    Tensor3 out(m.field(), u.size(), m.rows(), m.cols());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b) out.at(i, a, b) = u[i] * m.at(a, b);
    return out;
}

Tensor3 outer(const Matrix& m, std::span<const Scalar> u) {
    Tensor3 out(m.field(), m.rows(), m.cols(), u.size());
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b)
            for (std::size_t k = 0; k < u.size(); ++k) out.at(a, b, k) = m.at(a, b) * u[k];
    return out;
}

}  // namespace dendri
