#include "dendri/dbialgebra.hpp"

#include "dendri/errors.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dendri {

namespace {

Vector head(std::span<const Scalar> v, std::size_t n) { return Vector(v.begin(), v.begin() + n); }
Vector tail(std::span<const Scalar> v, std::size_t n) { return Vector(v.begin() + n, v.end()); }

Vector concat(const Vector& a, const Vector& b) {
    Vector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void store_product(Tensor3& t, std::size_t i, std::size_t j, const Vector& v) {
    for (std::size_t k = 0; k < v.size(); ++k) t.at(i, j, k) = v[k];
}

Vector flatten3(const Tensor3& t) {
    Vector out;
    const auto [d1, d2, d3] = t.dims();
    out.reserve(d1 * d2 * d3);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            for (std::size_t k = 0; k < d3; ++k) out.push_back(t.at(i, j, k));
    return out;
}

void require_same_shape(const DendriformAlgebra& a, const TwoTensor& r) {
    if (r.dim() != a.dim || r.coeff.cols() != a.dim) throw DimensionMismatch("2-tensor does not match algebra dimension");
    if (!(r.field() == a.field)) throw FieldMismatch("2-tensor over another field");
}

// Q(y) t = (Id⊗L≻(y) − R≺(y)⊗Id) t.
Matrix apply_q(const DendriformAlgebra& a, std::span<const Scalar> y, const Matrix& t) {
    const Matrix id = Matrix::identity(a.field, a.dim);
    return apply_pair(id, left_operator(a.succ, y), t) - apply_pair(right_operator(a.prec, y), id, t);
}

// r_{u1 v1} ∘ r_{u2 v2}: each factor places its tensor legs in the named slots;
// the shared slot receives (leg of the first factor) ∘ (leg of the second).
Tensor3 leg_product(const Matrix& r, const Tensor3& c, std::array<int, 2> first, std::array<int, 2> second) {
    const std::size_t n = r.rows();
    Tensor3 out(r.field(), n);
    int shared = -1;
    for (int s : first) {
        if (s == second[0] || s == second[1]) shared = s;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (r.at(a, b).is_zero()) continue;
            for (std::size_t c2 = 0; c2 < n; ++c2)
                for (std::size_t d = 0; d < n; ++d) {
                    if (r.at(c2, d).is_zero()) continue;
                    const Scalar w = r.at(a, b) * r.at(c2, d);
                    std::array<std::size_t, 3> idx{};
                    std::size_t lhs = 0, rhs = 0;
                    const std::size_t e1[2] = {a, b};
                    const std::size_t e2[2] = {c2, d};
                    for (int k = 0; k < 2; ++k) {
                        if (first[k] == shared) lhs = e1[k];
                        else idx[first[k]] = e1[k];
                        if (second[k] == shared) rhs = e2[k];
                        else idx[second[k]] = e2[k];
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& ck = c.at(lhs, rhs, k);
                        if (ck.is_zero()) continue;
                        idx[shared] = k;
                        out.at(idx[0], idx[1], idx[2]) += w * ck;
                    }
                }
        }
    return out;
}

CheckReport ordered(const CheckReport& rep, std::initializer_list<const char*> names) {
    CheckReport out;
    for (const char* name : names) {
        for (const auto& v : rep.violations) {
            if (v.identity == name) out.violations.push_back(v);
        }
    }
    return out;
}

}  // namespace

TwoTensor::TwoTensor(Matrix r) : coeff(std::move(r)) {
    if (!coeff.is_square()) throw DimensionMismatch("2-tensor coefficient matrix must be square");
}

Matrix TwoTensor::skew_part() const {
    require_char_not_two(field(), "skew part");
    return Scalar(field(), 2).inverse() * skew_twice();
}

Matrix TwoTensor::symmetric_part() const {
    require_char_not_two(field(), "symmetric part");
    return Scalar(field(), 2).inverse() * (coeff + exchange_sigma(coeff));
}

std::vector<std::string> dual_basis_names(const DendriformAlgebra& a) {
    std::vector<std::string> out;
    for (const auto& b : a.basis) out.push_back(b + "*");
    return out;
}

Matrix cobracket_at(const Tensor3& delta, std::span<const Scalar> x) {
    const auto [d1, d2, d3] = delta.dims();
    if (x.size() != d1) throw DimensionMismatch("cobracket argument has wrong length");
    Matrix out(delta.field(), d2, d3);
    for (std::size_t i = 0; i < d1; ++i) {
        if (!x[i].is_zero()) out += x[i] * delta.slice(i);
    }
    return out;
}

Cobracket cobracket_of(const DendriformAlgebra& dual) {
    const std::size_t n = dual.dim;
    Cobracket c{Tensor3(dual.field, n), Tensor3(dual.field, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                c.prec.at(k, i, j) = dual.prec.at(i, j, k);
                c.succ.at(k, i, j) = dual.succ.at(i, j, k);
            }
    return c;
}

DendriformAlgebra products_of(const Cobracket& c, const std::vector<std::string>& basis) {
    const std::size_t n = c.prec.dim(0);
    DendriformAlgebra out = DendriformAlgebra::zero(c.prec.field(), n);
    if (basis.size() == n) out.basis = basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.prec.at(i, j, k) = c.prec.at(k, i, j);
                out.succ.at(i, j, k) = c.succ.at(k, i, j);
            }
    return out;
}

CheckReport check_cobracket(const DendriformAlgebra& a, const Cobracket& c) {
    a.validate();
    const std::size_t n = a.dim;
    for (const Tensor3* t : {&c.prec, &c.succ}) {
        if (!t->is_cube() || t->dim(0) != n) throw DimensionMismatch("cobracket does not match algebra dimension");
    }
    const Matrix id = Matrix::identity(a.field, n);
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = a.e(i);
        const MultOperators ox = mult_operators(a, x);
        const Matrix dpx = cobracket_at(c.prec, x);
        const Matrix dsx = cobracket_at(c.succ, x);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = a.e(j);
            const MultOperators oy = mult_operators(a, y);
            const Matrix dpy = cobracket_at(c.prec, y);
            const Matrix dsy = cobracket_at(c.succ, y);
            const Vector xy = a.star(x, y);
            const Matrix e1 = cobracket_at(c.prec, xy) - apply_pair(id, ox.l_succ, dpy) - apply_pair(oy.r_star, id, dpx);
            const Matrix e2 = cobracket_at(c.succ, xy) - apply_pair(id, ox.l_star, dsy) - apply_pair(oy.r_prec, id, dsx);
            const Matrix e5 = apply_pair(ox.l_star, id, dpy) - apply_pair(id, ox.r_prec, dpy) +
                              exchange_sigma(apply_pair(oy.l_succ, id, dsx) - apply_pair(id, oy.r_star, dsx));
            if (!e1.is_zero()) rep.add("eq1", {i, j}, flatten(e1));
            if (!e2.is_zero()) rep.add("eq2", {i, j}, flatten(e2));
            if (!e5.is_zero()) rep.add("eq5", {i, j}, flatten(e5));
        }
    }
    return ordered(rep, {"eq1", "eq2", "eq5"});
}

CheckReport check_d_bialgebra(const DendriformAlgebra& a, const DendriformAlgebra& dual) {
    a.validate();
    dual.validate();
    if (a.dim != dual.dim) throw DimensionMismatch("algebra and dual have different dimensions");
    if (!(a.field == dual.field)) throw FieldMismatch("algebra and dual over different fields");
    if (!check_dendriform(a).ok()) throw PreconditionFailed("check_d_bialgebra: A is not dendriform");
    if (!check_dendriform(dual).ok()) throw PreconditionFailed("check_d_bialgebra: A* is not dendriform");

    CheckReport all = check_cobracket(a, cobracket_of(dual));
    CheckReport other = check_cobracket(dual, cobracket_of(a));
    for (auto& v : other.violations) {
        if (v.identity == "eq1") v.identity = "eq3";
        else if (v.identity == "eq2") v.identity = "eq4";
        else v.identity = "eq6";
    }
    all.merge(other);
    return ordered(all, {"eq1", "eq2", "eq3", "eq4", "eq5", "eq6"});
}

CheckReport check_d_bialgebra_hom(const Matrix& phi, const DendriformAlgebra& a, const DendriformAlgebra& a_dual,
                                  const DendriformAlgebra& b, const DendriformAlgebra& b_dual) {
    if (phi.cols() != a.dim || phi.rows() != b.dim) throw DimensionMismatch("homomorphism matrix has wrong shape");
    const Cobracket delta_a = cobracket_of(a_dual), delta_b = cobracket_of(b_dual);
    const Cobracket beta_a = cobracket_of(a), beta_b = cobracket_of(b);
    const Matrix phi_t = transpose(phi);
    CheckReport rep;
    const std::pair<const char*, const Tensor3*> delta_pairs[2][2] = {
        {{"delta_prec", &delta_a.prec}, {"", &delta_b.prec}},
        {{"delta_succ", &delta_a.succ}, {"", &delta_b.succ}},
    };
    for (const auto& pr : delta_pairs) {
        for (std::size_t i = 0; i < a.dim; ++i) {
            const Vector x = a.e(i);
            const Matrix d = apply_pair(phi, phi, cobracket_at(*pr[0].second, x)) - cobracket_at(*pr[1].second, phi.apply(x));
            if (!d.is_zero()) rep.add(pr[0].first, {i}, flatten(d));
        }
    }
    const std::pair<const char*, const Tensor3*> beta_pairs[2][2] = {
        {{"beta_prec", &beta_b.prec}, {"", &beta_a.prec}},
        {{"beta_succ", &beta_b.succ}, {"", &beta_a.succ}},
    };
    for (const auto& pr : beta_pairs) {
        for (std::size_t j = 0; j < b.dim; ++j) {
            const Vector xi = b.e(j);
            const Matrix d = apply_pair(phi_t, phi_t, cobracket_at(*pr[0].second, xi)) -
                             cobracket_at(*pr[1].second, phi_t.apply(xi));
            if (!d.is_zero()) rep.add(pr[0].first, {j}, flatten(d));
        }
    }
    return rep;
}

Cobracket cobracket_from_r(const DendriformAlgebra& a, const TwoTensor& r) {
    require_same_shape(a, r);
    const std::size_t n = a.dim;
    const Matrix id = Matrix::identity(a.field, n);
    const Matrix r_prec = r.coeff;
    const Matrix r_succ = -exchange_sigma(r.coeff);
    Cobracket c{Tensor3(a.field, n), Tensor3(a.field, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const MultOperators o = mult_operators(a, a.e(k));
        const Matrix dp = apply_pair(id, o.l_succ, r_prec) - apply_pair(o.r_star, id, r_prec);
        const Matrix ds = apply_pair(id, o.l_star, r_succ) - apply_pair(o.r_prec, id, r_succ);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                c.prec.at(k, i, j) = dp.at(i, j);
                c.succ.at(k, i, j) = ds.at(i, j);
            }
    }
    return c;
}

namespace {

// ξ≻η = 𝓡*(p ξ)η − L≺*(m η)ξ and ξ≺η = 𝓛*(p η)ξ − R≻*(m ξ)η for maps p, m: A* → A.
DendriformAlgebra dual_from_maps(const DendriformAlgebra& a, const Matrix& p, const Matrix& m) {
    const std::size_t n = a.dim;
    DendriformAlgebra out = DendriformAlgebra::zero(a.field, n);
    out.basis = dual_basis_names(a);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector xi = a.e(i);
        const MultOperators pxi = mult_operators(a, p.apply(xi));
        const MultOperators mxi = mult_operators(a, m.apply(xi));
        for (std::size_t j = 0; j < n; ++j) {
            const Vector eta = a.e(j);
            const MultOperators peta = mult_operators(a, p.apply(eta));
            const MultOperators meta = mult_operators(a, m.apply(eta));
            store_product(out.succ, i, j, sub(transpose(pxi.r_star).apply(eta), transpose(meta.l_prec).apply(xi)));
            store_product(out.prec, i, j, sub(transpose(peta.l_star).apply(xi), transpose(mxi.r_succ).apply(eta)));
        }
    }
    return out;
}

}  // namespace

DendriformAlgebra dual_products(const DendriformAlgebra& a, const TwoTensor& r) {
    require_same_shape(a, r);
    return dual_from_maps(a, r.r_plus(), r.r_minus());
}

DendriformAlgebra dual_products_symmetric(const DendriformAlgebra& a, const TwoTensor& r) {
    require_same_shape(a, r);
    // Λ is symmetric, so Λ₊ = Λ₋ = Λ.
    const Matrix lambda = r.symmetric_part();
    return dual_from_maps(a, lambda, lambda);
}

Tensor3 d_equation_defect(const DendriformAlgebra& a, const TwoTensor& r) {
    require_same_shape(a, r);
    const std::size_t n = a.dim;
    const Matrix& R = r.coeff;
    const Tensor3 mult = a.prec + a.succ;
    Tensor3 out(a.field, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s) {
                Scalar v = Scalar::zero(a.field);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        v += R.at(i, q) * R.at(j, s) * mult.at(i, j, p);
                        v -= R.at(p, i) * R.at(q, j) * a.prec.at(i, j, s);
                        v -= R.at(i, s) * R.at(p, j) * a.succ.at(i, j, q);
                    }
                out.at(p, q, s) = v;
            }
    return out;
}

InvarianceResult check_lr_invariance(const DendriformAlgebra& a, const Matrix& t) {
    if (t.rows() != a.dim || t.cols() != a.dim) throw DimensionMismatch("2-tensor does not match algebra dimension");
    const std::size_t n = a.dim;
    const Matrix id = Matrix::identity(a.field, n);
    const Matrix st = exchange_sigma(t);
    const Matrix t_plus = transpose(t);
    const bool skew = (t + st).is_zero();

    InvarianceResult out;
    for (std::size_t i = 0; i < n; ++i) {
        const MultOperators o = mult_operators(a, a.e(i));
        const bool c1 = (apply_pair(id, o.l_star, t) - apply_pair(o.r_prec, id, t)).is_zero();
        const bool c2 = (apply_pair(id, o.l_succ, st) - apply_pair(o.r_star, id, st)).is_zero();

        // x∗t₊(ξ) = t₊(R≺*(x)ξ) and t₊(ξ)∗x = t₊(L≻*(x)ξ).
        const bool m1 = (o.l_star * t_plus - t_plus * transpose(o.r_prec)).is_zero();
        const bool m2 = (o.r_star * t_plus - t_plus * transpose(o.l_succ)).is_zero();
        if (c1 != m1 || c2 != m2) throw std::logic_error("invariance: tensor and operator forms disagree");
        if (skew) {
            // t₊ is I here; the second pair of forms uses I* = −I.
            const bool k1 = (o.r_prec * t_plus - t_plus * transpose(o.l_star)).is_zero();
            const bool k2 = (o.l_succ * t_plus - t_plus * transpose(o.r_star)).is_zero();
            if ((c1 && c2) != (k1 && k2)) throw std::logic_error("invariance: I-forms disagree");
        }
        if ((!c1 || !c2) && out.invariant) {
            out.invariant = false;
            out.witness = i;
            out.condition = c1 ? 2 : 1;
        }
    }
    return out;
}

InvarianceResult check_skew_invariance(const DendriformAlgebra& a, const TwoTensor& r) {
    require_same_shape(a, r);
    return check_lr_invariance(a, r.skew_twice());
}

CheckReport check_coboundary_conditions(const DendriformAlgebra& a, const TwoTensor& r) {
    require_same_shape(a, r);
    const std::size_t n = a.dim;
    const Field& f = a.field;
    const Matrix id = Matrix::identity(f, n);
    const Matrix& R = r.coeff;
    const Matrix t = r.skew_twice();
    const Tensor3 mult = a.prec + a.succ;

    const Tensor3 defect = d_equation_defect(a, r);
    // −r23∗r21 + r21≺r31 + r31≻r23
    const Tensor3 c15 = leg_product(R, a.prec, {1, 0}, {2, 0}) + leg_product(R, a.succ, {2, 0}, {1, 2}) -
                        leg_product(R, mult, {1, 2}, {1, 0});
    // −r31∗r32 + r32≺r12 + r12≻r31
    const Tensor3 c17 = leg_product(R, a.prec, {2, 1}, {0, 1}) + leg_product(R, a.succ, {0, 1}, {2, 0}) -
                        leg_product(R, mult, {2, 0}, {2, 1});

    CheckReport rep;
    std::vector<Violation> found[5];
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = a.e(i);
        const MultOperators ox = mult_operators(a, x);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = a.e(j);
            const Matrix qy = apply_q(a, y, t);
            const Matrix c13 = apply_pair(ox.l_succ, id, qy) - apply_pair(id, ox.r_prec, qy);
            if (!c13.is_zero()) found[0].push_back({"cond13", {i, j}, flatten(c13)});
            const Matrix c14 = apply_pair(ox.r_prec, left_operator(a.succ, y), t) -
                               apply_pair(id, left_operator(a.succ, a.left(y, x)), t) -
                               apply_pair(right_operator(a.prec, a.right(y, x)), id, t);
            if (!c14.is_zero()) found[1].push_back({"cond14", {i, j}, flatten(c14)});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = a.e(i);
        const MultOperators ox = mult_operators(a, x);
        const Tensor3 t15 = apply_triple(ox.r_prec, id, id, c15) - apply_triple(id, id, ox.l_succ, c15);
        if (!t15.is_zero()) found[2].push_back({"cond15", {i}, flatten3(t15)});

        Tensor3 t16 = apply_triple(ox.r_star, id, id, defect) - apply_triple(id, id, ox.l_succ, defect);
        Tensor3 t17 = apply_triple(ox.r_prec, id, id, c17) - apply_triple(id, id, ox.l_star, c17);
        // Σ over the terms a_i ⊗ b_i of r.
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (R.at(p, q).is_zero()) continue;
                const Vector ai = a.e(p);
                const Vector bi = scale(R.at(p, q), a.e(q));
                t16 += outer(a.star(ai, x), apply_q(a, bi, t));
                t16 -= outer(ai, apply_q(a, a.right(x, bi), t));
                t17 += outer(apply_q(a, bi, t), a.star(x, ai));
                t17 -= outer(apply_q(a, a.left(bi, x), t), ai);
            }
        if (!t16.is_zero()) found[3].push_back({"cond16", {i}, flatten3(t16)});
        if (!t17.is_zero()) found[4].push_back({"cond17", {i}, flatten3(t17)});
    }
    for (auto& fv : found) rep.violations.insert(rep.violations.end(), fv.begin(), fv.end());
    return rep;
}

const char* to_string(RClass c) {
    switch (c) {
        case RClass::invalid_products: return "invalid-products";
        case RClass::coboundary: return "coboundary";
        case RClass::triangular: return "triangular";
        case RClass::quasi_triangular: return "quasi-triangular";
        case RClass::factorizable: return "factorizable";
    }
    return "?";
}

ClassificationResult classify(const DendriformAlgebra& a, const TwoTensor& r) {
    require_char_not_two(a.field, "classify");
    require_same_shape(a, r);
    if (!check_dendriform(a).ok()) throw PreconditionFailed("classify: algebra is not dendriform");

    ClassificationResult res;
    const DendriformAlgebra dual = dual_products(a, r);
    res.dual_axioms = check_dendriform(dual);
    res.dual_dendriform = res.dual_axioms.ok();
    if (res.dual_dendriform) {
        res.bialgebra_report = check_d_bialgebra(a, dual);
        res.bialgebra = res.bialgebra_report.ok();
    }
    res.conditions = check_coboundary_conditions(a, r);
    res.d_equation = d_equation_defect(a, r).is_zero();
    res.invariance = check_skew_invariance(a, r);
    res.skew_invariant = res.invariance.invariant;
    res.symmetric = r.is_symmetric();
    res.rank_i = rank(r.skew_operator());

    if (!res.bialgebra) {
        res.kind = RClass::invalid_products;
    } else if (!(res.d_equation && res.skew_invariant)) {
        res.kind = RClass::coboundary;
    } else if (res.symmetric) {
        res.kind = RClass::triangular;
    } else if (res.rank_i == a.dim) {
        res.kind = RClass::factorizable;
    } else {
        res.kind = RClass::quasi_triangular;
    }
    return res;
}

Factorization factorize(const DendriformAlgebra& a, const TwoTensor& r, std::span<const Scalar> x) {
    if (x.size() != a.dim) throw DimensionMismatch("factorize: element has wrong length");
    if (classify(a, r).kind != RClass::factorizable) throw PreconditionFailed("factorize: r is not factorizable");
    const Matrix i_inv = *rank_and_inverse(r.skew_operator()).inverse;
    const Vector pre = i_inv.apply(x);
    return {r.r_plus().apply(pre), r.r_minus().apply(pre)};
}

DoubleResult dendriform_double(const DendriformAlgebra& a, const DendriformAlgebra& dual) {
    if (!check_d_bialgebra(a, dual).ok()) throw PreconditionFailed("double: (A, A*) is not a D-bialgebra");
    const std::size_t n = a.dim, total = 2 * n;
    DoubleResult res;
    res.algebra = DendriformAlgebra::zero(a.field, total);
    res.algebra.basis = a.basis;
    for (const auto& b : dual_basis_names(a)) res.algebra.basis.push_back(b);

    for (std::size_t p = 0; p < total; ++p) {
        const Vector u = basis_vector(a.field, total, p);
        const Vector x = head(u, n), xi = tail(u, n);
        const MultOperators ox = mult_operators(a, x);
        const MultOperators oxi = mult_operators(dual, xi);
        for (std::size_t q = 0; q < total; ++q) {
            const Vector v = basis_vector(a.field, total, q);
            const Vector y = head(v, n), eta = tail(v, n);
            const MultOperators oy = mult_operators(a, y);
            const MultOperators oeta = mult_operators(dual, eta);

            Vector s_a = add(sub(a.right(x, y), transpose(oeta.l_prec).apply(x)), transpose(oxi.r_star).apply(y));
            Vector s_d = sub(add(dual.right(xi, eta), transpose(ox.r_star).apply(eta)), transpose(oy.l_prec).apply(xi));
            Vector p_a = sub(add(a.left(x, y), transpose(oeta.l_star).apply(x)), transpose(oxi.r_succ).apply(y));
            Vector p_d = add(sub(dual.left(xi, eta), transpose(ox.r_succ).apply(eta)), transpose(oy.l_star).apply(xi));
            store_product(res.algebra.succ, p, q, concat(s_a, s_d));
            store_product(res.algebra.prec, p, q, concat(p_a, p_d));
        }
    }
    Matrix r(a.field, total, total);
    for (std::size_t i = 0; i < n; ++i) r.at(i, n + i) = Scalar::one(a.field);
    res.r = TwoTensor(std::move(r));
    return res;
}

DendriformAlgebra componentwise_dual(const DendriformAlgebra& a, const DendriformAlgebra& dual) {
    if (a.dim != dual.dim) throw DimensionMismatch("componentwise_dual: dimensions differ");
    const std::size_t n = a.dim;
    DendriformAlgebra out = DendriformAlgebra::zero(a.field, 2 * n);
    out.basis = dual_basis_names(a);
    for (const auto& b : a.basis) out.basis.push_back(b + "**");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.prec.at(i, j, k) = dual.prec.at(i, j, k);
                out.succ.at(i, j, k) = dual.succ.at(i, j, k);
                out.prec.at(n + i, n + j, n + k) = a.prec.at(i, j, k);
                out.succ.at(n + i, n + j, n + k) = a.succ.at(i, j, k);
            }
    return out;
}

}  // namespace dendri
