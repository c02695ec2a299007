#include "dendri/matrix.hpp"

#include "dendri/errors.hpp"

#include <string>
#include <utility>

namespace dendri {

namespace {

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw FieldMismatch("matrix field mismatch: " + a.to_string() + " vs " + b.to_string());
}

void require_same_length(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

}  // namespace

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector basis_vector(const Field& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
    require_same_length(a, b);
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
    require_same_length(a, b);
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
    Vector out(v.begin(), v.end());
    for (auto& x : out) x *= s;
    return out;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<long long> entries) {
    if (entries.size() != rows * cols) throw DimensionMismatch("from_rows: wrong number of entries");
    Matrix m(f, rows, cols);
    std::size_t idx = 0;
    for (long long v : entries) {
        m.data_[idx++] = Scalar(f, v);
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector out;
    out.reserve(rows_);
    for (std::size_t k = 0; k < rows_; ++k) out.push_back(at(k, j));
    return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("apply: matrix has " + std::to_string(cols_) + " columns, vector has " +
                                std::to_string(v.size()) + " entries");
    }
    Vector out = zero_vector(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t k = 0; k < rows_; ++k) {
            const Scalar& e = at(k, j);
            if (!e.is_zero()) out[k] += e * v[j];
        }
    }
    return out;
}

bool Matrix::is_zero() const { return dendri::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& s : out.data_) s = -s;
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    require_same_field(s.field(), m.field_);
    Matrix out = m;
    for (auto& e : out.data_) e *= s;
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, k) = m.at(k, j);
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
                }
            }
        }
    }
    return out;
}

RankInverse rank_and_inverse(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const bool square = m.is_square();
    const std::size_t width = square ? 2 * cols : cols;

    // Work on [m | I] when an inverse may exist.
    std::vector<Vector> a(rows, zero_vector(f, width));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
        if (square) a[i][cols + i] = Scalar::one(f);
    }

    // Fraction-free Gauss-Jordan: every update is (p * row_i - a_ik * row_k) / prev,
    // an invertible row operation, so rank is preserved at each step.
    Scalar prev = Scalar::one(f);
    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t k = 0; k < cols && r < rows; ++k) {
        std::size_t piv = r;
        while (piv < rows && a[piv][k].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const Scalar p = a[r][k];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Scalar aik = a[i][k];
            for (std::size_t j = 0; j < width; ++j) {
                a[i][j] = (p * a[i][j] - aik * a[r][j]) / prev;
            }
        }
        prev = p;
        pivot_cols.push_back(k);
        ++r;
    }

    RankInverse out;
    out.rank = r;
    if (square && r == rows) {
        Matrix inv(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            const Scalar d = a[i][pivot_cols[i]].inverse();
            for (std::size_t j = 0; j < cols; ++j) inv.at(i, j) = a[i][cols + j] * d;
        }
        out.inverse = std::move(inv);
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rank_and_inverse(m).rank; }

Matrix exchange_sigma(const Matrix& r) {
    if (!r.is_square()) throw DimensionMismatch("exchange_sigma: 2-tensor coefficient matrix must be square");
    return transpose(r);
}

Matrix apply_pair(const Matrix& x, const Matrix& y, const Matrix& t) { return x * t * transpose(y); }

}  // namespace dendri
