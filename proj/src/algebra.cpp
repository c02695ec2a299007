#include "dendri/algebra.hpp"

#include "dendri/errors.hpp"

#include <string>

namespace dendri {

Vector flatten(const Matrix& m) {
    Vector out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(k, j));
    return out;
}

std::vector<std::string> default_basis_names(std::size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
}

DendriformAlgebra DendriformAlgebra::zero(const Field& f, std::size_t n) {
    DendriformAlgebra a;
    a.field = f;
    a.dim = n;
    a.basis = default_basis_names(n);
    a.prec = Tensor3(f, n);
    a.succ = Tensor3(f, n);
    return a;
}

Vector DendriformAlgebra::star(std::span<const Scalar> x, std::span<const Scalar> y) const {
    return add(multiply(prec, x, y), multiply(succ, x, y));
}

void DendriformAlgebra::validate() const {
    for (const Tensor3* t : {&prec, &succ}) {
        if (!t->is_cube() || t->dim(0) != dim) {
            throw DimensionMismatch("structure constants must be " + std::to_string(dim) + "^3");
        }
        if (!(t->field() == field)) throw FieldMismatch("structure constants over " + t->field().to_string());
    }
    if (basis.size() != dim) throw DimensionMismatch("basis has " + std::to_string(basis.size()) + " names");
}

CheckReport check_dendriform(const DendriformAlgebra& a) {
    a.validate();
    const std::size_t n = a.dim;
    CheckReport rep;
    // Defects are collected per axiom so that the report is ordered by (axiom, triple).
    std::vector<Violation> by_axiom[3];
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = a.e(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = a.e(j);
            const Vector xp = a.left(x, y);
            const Vector xs = a.right(x, y);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector z = a.e(k);
                const Vector yp = a.left(y, z);
                const Vector ys = a.right(y, z);
                Vector d1 = sub(a.left(xp, z), a.left(x, add(yp, ys)));
                Vector d2 = sub(a.left(xs, z), a.right(x, yp));
                Vector d3 = sub(a.right(x, ys), a.right(add(xp, xs), z));
                if (!is_zero(d1)) by_axiom[0].push_back({"axiom1", {i, j, k}, std::move(d1)});
                if (!is_zero(d2)) by_axiom[1].push_back({"axiom2", {i, j, k}, std::move(d2)});
                if (!is_zero(d3)) by_axiom[2].push_back({"axiom3", {i, j, k}, std::move(d3)});
            }
        }
    }
    for (auto& v : by_axiom) rep.violations.insert(rep.violations.end(), v.begin(), v.end());
    return rep;
}

CheckReport check_associative(const AssociativeAlgebra& b) {
    const std::size_t n = b.dim;
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = basis_vector(b.field, n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = basis_vector(b.field, n, j);
            const Vector xy = b.mul(x, y);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector z = basis_vector(b.field, n, k);
                Vector d = sub(b.mul(xy, z), b.mul(x, b.mul(y, z)));
                if (!is_zero(d)) rep.add("associativity", {i, j, k}, std::move(d));
            }
        }
    }
    return rep;
}

AssociativeAlgebra sub_adjacent(const DendriformAlgebra& a) {
    if (!check_dendriform(a).ok()) throw PreconditionFailed("sub_adjacent: input is not a dendriform algebra");
    return {a.field, a.dim, a.prec + a.succ};
}

MultOperators mult_operators(const DendriformAlgebra& a, std::span<const Scalar> x) {
    if (x.size() != a.dim) throw DimensionMismatch("mult_operators: element has wrong length");
    MultOperators m;
    m.l_succ = left_operator(a.succ, x);
    m.r_succ = right_operator(a.succ, x);
    m.l_prec = left_operator(a.prec, x);
    m.r_prec = right_operator(a.prec, x);
    m.l_star = m.l_prec + m.l_succ;
    m.r_star = m.r_prec + m.r_succ;
    return m;
}

Tensor3 to_pre_lie(const DendriformAlgebra& a) {
    a.validate();
    const std::size_t n = a.dim;
    Tensor3 out(a.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = a.succ.at(i, j, k) - a.prec.at(j, i, k);
    return out;
}

CheckReport check_pre_lie(const Tensor3& star) {
    const std::size_t n = star.dim(0);
    const Field& f = star.field();
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = basis_vector(f, n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = basis_vector(f, n, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector z = basis_vector(f, n, k);
                const Vector lhs = sub(multiply(star, multiply(star, x, y), z), multiply(star, x, multiply(star, y, z)));
                const Vector rhs = sub(multiply(star, multiply(star, y, x), z), multiply(star, y, multiply(star, x, z)));
                Vector d = sub(lhs, rhs);
                if (!is_zero(d)) rep.add("pre-lie", {i, j, k}, std::move(d));
            }
        }
    }
    return rep;
}

Tensor3 to_lie(const AssociativeAlgebra& b) {
    const std::size_t n = b.dim;
    Tensor3 out(b.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = b.mult.at(i, j, k) - b.mult.at(j, i, k);
    return out;
}

CheckReport check_lie(const Tensor3& bracket) {
    const std::size_t n = bracket.dim(0);
    const Field& f = bracket.field();
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector d = zero_vector(f, n);
            for (std::size_t k = 0; k < n; ++k) d[k] = bracket.at(i, j, k) + bracket.at(j, i, k);
            if (!is_zero(d)) rep.add("antisymmetry", {i, j}, std::move(d));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = basis_vector(f, n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = basis_vector(f, n, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector z = basis_vector(f, n, k);
                Vector d = add(add(multiply(bracket, x, multiply(bracket, y, z)),
                                   multiply(bracket, y, multiply(bracket, z, x))),
                               multiply(bracket, z, multiply(bracket, x, y)));
                if (!is_zero(d)) rep.add("jacobi", {i, j, k}, std::move(d));
            }
        }
    }
    return rep;
}

}  // namespace dendri
