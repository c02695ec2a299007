#include "dendri/rota_baxter.hpp"

#include "dendri/errors.hpp"

#include <string>

namespace dendri {

namespace {

void require_square(const Matrix& m, std::size_t n, const Field& f, const char* what) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!(m.field() == f)) throw FieldMismatch(std::string(what) + " over another field");
}

void require_nonzero(const Scalar& lambda, const char* where) {
    if (lambda.is_zero()) throw PreconditionFailed(std::string(where) + ": weight must be nonzero");
}

void store_product(Tensor3& t, std::size_t i, std::size_t j, const Vector& v) {
    for (std::size_t k = 0; k < v.size(); ++k) t.at(i, j, k) = v[k];
}

// P(x)∘P(y) − P(P(x)∘y + x∘P(y) + λ x∘y) for one product.
Vector rb_defect(const Tensor3& c, const Matrix& p, const Scalar& lambda, const Vector& x, const Vector& y) {
    const Vector px = p.apply(x), py = p.apply(y);
    Vector inner = add(multiply(c, px, y), multiply(c, x, py));
    inner = add(inner, scale(lambda, multiply(c, x, y)));
    return sub(multiply(c, px, py), p.apply(inner));
}

void rb_check(CheckReport& rep, const char* name, const Tensor3& c, const Matrix& p, const Scalar& lambda) {
    const std::size_t n = p.rows();
    const Field& f = p.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector d = rb_defect(c, p, lambda, basis_vector(f, n, i), basis_vector(f, n, j));
            if (!is_zero(d)) rep.add(name, {i, j}, std::move(d));
        }
}

void antisymmetry(CheckReport& rep, const Matrix& w) {
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = i; j < w.cols(); ++j) {
            const Scalar s = w.at(i, j) + w.at(j, i);
            if (!s.is_zero()) rep.add("antisymmetry", {i, j}, {s});
        }
}

// ξ≻η = s(ξ, η), ξ≺η = q(ξ, η) evaluated on dual basis vectors.
template <class Succ, class Prec>
DendriformAlgebra dual_algebra(const DendriformAlgebra& a, Succ succ, Prec prec) {
    DendriformAlgebra out = DendriformAlgebra::zero(a.field, a.dim);
    out.basis = dual_basis_names(a);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            store_product(out.succ, i, j, succ(a.e(i), a.e(j)));
            store_product(out.prec, i, j, prec(a.e(i), a.e(j)));
        }
    return out;
}

void require_invariant(const DendriformAlgebra& a, const TwoTensor& r, const char* where) {
    if (r.dim() != a.dim) throw DimensionMismatch(std::string(where) + ": 2-tensor does not match algebra dimension");
    if (!check_skew_invariance(a, r)) throw PreconditionFailed(std::string(where) + ": skew part of r is not invariant");
}

}  // namespace

CheckReport check_rb(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda) {
    a.validate();
    require_square(p, a.dim, a.field, "P");
    CheckReport rep;
    rb_check(rep, "rb_prec", a.prec, p, lambda);
    rb_check(rep, "rb_succ", a.succ, p, lambda);
    return rep;
}

CheckReport check_rb_associative(const AssociativeAlgebra& b, const Matrix& p, const Scalar& lambda) {
    require_square(p, b.dim, b.field, "P");
    CheckReport rep;
    rb_check(rep, "rb", b.mult, p, lambda);
    return rep;
}

Matrix rb_tilde(const Matrix& p, const Scalar& lambda) {
    return -(lambda * Matrix::identity(p.field(), p.rows())) - p;
}

DendriformAlgebra descendent(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda) {
    if (!check_rb(a, p, lambda).ok()) throw PreconditionFailed("descendent: P is not a Rota-Baxter operator");
    DendriformAlgebra out = a;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            const Vector x = a.e(i), y = a.e(j), px = p.apply(x), py = p.apply(y);
            auto prod = [&](const Tensor3& c) {
                return add(add(multiply(c, px, y), multiply(c, x, py)), scale(lambda, multiply(c, x, y)));
            };
            store_product(out.prec, i, j, prod(a.prec));
            store_product(out.succ, i, j, prod(a.succ));
        }
    return out;
}

CheckReport check_relative_rb(const Matrix& t, const DendriformAction& act, const Scalar& lambda) {
    const DendriformAlgebra& a = act.rep.base;
    const DendriformAlgebra& b = act.target;
    if (t.rows() != a.dim || t.cols() != b.dim) throw DimensionMismatch("relative Rota-Baxter map must be dim A x dim B");
    if (!(t.field() == a.field)) throw FieldMismatch("relative Rota-Baxter map over another field");
    if (!check_action(act).ok()) throw PreconditionFailed("check_relative_rb: invalid action");
    CheckReport rep;
    struct Part {
        const char* name;
        Slot l, r;
        const Tensor3* a_prod;
        const Tensor3* b_prod;
    };
    const Part parts[] = {{"rrb_succ", Slot::l_succ, Slot::r_succ, &a.succ, &b.succ},
                          {"rrb_prec", Slot::l_prec, Slot::r_prec, &a.prec, &b.prec}};
    for (const Part& part : parts)
        for (std::size_t u = 0; u < b.dim; ++u)
            for (std::size_t v = 0; v < b.dim; ++v) {
                const Vector eu = b.e(u), ev = b.e(v);
                const Vector tu = t.apply(eu), tv = t.apply(ev);
                Vector inner = add(act.rep.at(part.l, tu).apply(ev), act.rep.at(part.r, tv).apply(eu));
                inner = add(inner, scale(lambda, multiply(*part.b_prod, eu, ev)));
                Vector d = sub(multiply(*part.a_prod, tu, tv), t.apply(inner));
                if (!is_zero(d)) rep.add(part.name, {u, v}, std::move(d));
            }
    return rep;
}

DendriformAlgebra plus_products(const DendriformAlgebra& a, const TwoTensor& r) {
    require_invariant(a, r, "plus_products");
    const Matrix skew = r.skew_operator();
    return dual_algebra(
        a,
        [&](const Vector& xi, const Vector& eta) {
            return transpose(mult_operators(a, skew.apply(eta)).l_prec).apply(xi);
        },
        [&](const Vector& xi, const Vector& eta) {
            return transpose(mult_operators(a, skew.apply(xi)).r_succ).apply(eta);
        });
}

DendriformAlgebra minus_products(const DendriformAlgebra& a, const TwoTensor& r) {
    require_invariant(a, r, "minus_products");
    const Matrix skew = r.skew_operator();
    return dual_algebra(
        a,
        [&](const Vector& xi, const Vector& eta) {
            return transpose(mult_operators(a, skew.apply(xi)).r_star).apply(eta);
        },
        [&](const Vector& xi, const Vector& eta) {
            return transpose(mult_operators(a, skew.apply(eta)).l_star).apply(xi);
        });
}

DendriformAction coregular_action(const DendriformAlgebra& a, const DendriformAlgebra& on_dual) {
    return {coregular_rep(a), on_dual};
}

Scalar form_value(const Matrix& w, std::span<const Scalar> x, std::span<const Scalar> y) {
    const Vector wy = w.apply(y);
    Scalar acc = Scalar::zero(w.field());
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * wy[i];
    return acc;
}

bool is_nondegenerate(const Matrix& w) { return w.is_square() && rank(w) == w.rows(); }

CheckReport check_quadratic(const DendriformAlgebra& a, const Matrix& w) {
    a.validate();
    require_square(w, a.dim, a.field, "form");
    CheckReport rep;
    antisymmetry(rep, w);
    if (!is_nondegenerate(w)) rep.add("nondegenerate", {}, {Scalar(a.field, static_cast<long long>(rank(w)))});
    CheckReport inv_prec, inv_star;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                const Vector x = a.e(i), y = a.e(j), z = a.e(k);
                const Scalar lhs = form_value(w, a.right(x, y), z);
                const Scalar d1 = lhs + form_value(w, x, a.left(y, z));
                const Scalar d2 = lhs - form_value(w, y, a.star(z, x));
                if (!d1.is_zero()) inv_prec.add("inv_prec", {i, j, k}, {d1});
                if (!d2.is_zero()) inv_star.add("inv_star", {i, j, k}, {d2});
            }
    rep.merge(inv_prec);
    rep.merge(inv_star);
    return rep;
}

CheckReport check_connes(const AssociativeAlgebra& b, const Matrix& w) {
    require_square(w, b.dim, b.field, "form");
    CheckReport rep;
    antisymmetry(rep, w);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k) {
                const Vector x = basis_vector(b.field, b.dim, i), y = basis_vector(b.field, b.dim, j),
                             z = basis_vector(b.field, b.dim, k);
                const Scalar s = form_value(w, b.mul(x, y), z) + form_value(w, b.mul(y, z), x) + form_value(w, b.mul(z, x), y);
                if (!s.is_zero()) rep.add("cyclic", {i, j, k}, {s});
            }
    return rep;
}

CheckReport check_compatibility(const Matrix& p, const Matrix& w, const Scalar& lambda) {
    require_square(p, w.rows(), w.field(), "P");
    const Matrix d = transpose(p) * w + w * p + lambda * w;
    CheckReport rep;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!d.at(i, j).is_zero()) rep.add("compat", {i, j}, {d.at(i, j)});
    return rep;
}

DendriformAlgebra dendriform_from_connes(const AssociativeAlgebra& b, const Matrix& w) {
    require_square(w, b.dim, b.field, "form");
    const auto ri = rank_and_inverse(w);
    if (!ri.inverse) throw PreconditionFailed("dendriform_from_connes: form is degenerate");
    if (!check_connes(b, w).ok()) throw PreconditionFailed("dendriform_from_connes: form is not a Connes cocycle");
    // Coefficients s of a product satisfy Σ_l s_l w(l, m) = v_m, so s = (w⁻¹)ᵀ v.
    const Matrix solve = transpose(*ri.inverse);
    const std::size_t n = b.dim;
    DendriformAlgebra out = DendriformAlgebra::zero(b.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector vs(n, Scalar::zero(b.field)), vp = vs;
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t q = 0; q < n; ++q) {
                    vs[m] += b.mult.at(m, i, q) * w.at(j, q);  // ω(e_j, e_m ∗ e_i)
                    vp[m] += b.mult.at(j, m, q) * w.at(i, q);  // ω(e_i, e_j ∗ e_m)
                }
            store_product(out.succ, i, j, solve.apply(vs));
            store_product(out.prec, i, j, solve.apply(vp));
        }
    return out;
}

CheckReport check_quadratic_rb(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda) {
    CheckReport rep = check_dendriform(a);
    rep.merge(check_rb(a, p, lambda));
    rep.merge(check_quadratic(a, w));
    rep.merge(check_compatibility(p, w, lambda));
    return rep;
}

CheckReport check_connes_rb(const AssociativeAlgebra& b, const Matrix& p, const Matrix& w, const Scalar& lambda) {
    CheckReport rep = check_associative(b);
    rep.merge(check_rb_associative(b, p, lambda));
    rep.merge(check_connes(b, w));
    if (!is_nondegenerate(w)) rep.add("nondegenerate", {}, {Scalar(b.field, static_cast<long long>(rank(w)))});
    rep.merge(check_compatibility(p, w, lambda));
    return rep;
}

QuadraticRB factorizable_to_qrb(const DendriformAlgebra& a, const TwoTensor& r, const Scalar& lambda) {
    require_nonzero(lambda, "factorizable_to_qrb");
    if (classify(a, r).kind != RClass::factorizable) throw PreconditionFailed("factorizable_to_qrb: r is not factorizable");
    const Matrix inv = *rank_and_inverse(r.skew_operator()).inverse;
    return {lambda * (r.r_minus() * inv), transpose(inv)};
}

Matrix j_omega(const Matrix& w) {
    const auto ri = rank_and_inverse(omega_sharp(w));
    if (!ri.inverse) throw PreconditionFailed("form is degenerate");
    return *ri.inverse;
}

TwoTensor qrb_to_factorizable(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda) {
    require_nonzero(lambda, "qrb_to_factorizable");
    if (!check_quadratic_rb(a, p, w, lambda).ok()) throw PreconditionFailed("qrb_to_factorizable: not a quadratic Rota-Baxter dendriform algebra");
    const Matrix plus = lambda.inverse() * ((p + lambda * Matrix::identity(a.field, a.dim)) * j_omega(w));
    return TwoTensor(transpose(plus));
}

ConnesBundle semidirect_connes(const DendriformAlgebra& a, const Scalar& lambda, ConnesVariant v) {
    a.validate();
    const std::size_t n = a.dim, d = 2 * n;
    const Field& f = a.field;
    ConnesBundle out{{f, d, Tensor3(f, d)}, Matrix(f, d, d), Matrix(f, d, d)};
    Tensor3& m = out.algebra.mult;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                m.at(i, j, k) = a.prec.at(i, j, k) + a.succ.at(i, j, k);
                // e_i ∘ e_j*: R≺*(e_i)e_j* has e_k*-coefficient ⟨e_j*, e_k ≺ e_i⟩.
                m.at(i, n + j, n + k) = a.prec.at(k, i, j);
                // e_j* ∘ e_i: L≻*(e_i)e_j* has e_k*-coefficient ⟨e_j*, e_i ≻ e_k⟩.
                m.at(n + j, i, n + k) = a.succ.at(i, k, j);
            }
    for (std::size_t i = 0; i < n; ++i) {
        out.omega.at(n + i, i) = Scalar::one(f);
        out.omega.at(i, n + i) = -Scalar::one(f);
        const std::size_t slot = v == ConnesVariant::p1 ? i : n + i;
        out.p.at(slot, slot) = -lambda;
    }
    return out;
}

CheckReport check_rb_representation(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda,
                                    const DendriformRep& rep, const Matrix& t) {
    require_square(t, rep.carrier_dim, a.field, "T");
    if (!check_representation(rep).ok()) throw PreconditionFailed("check_rb_representation: not a representation");
    if (!check_rb(a, p, lambda).ok()) throw PreconditionFailed("check_rb_representation: P is not a Rota-Baxter operator");
    CheckReport out;
    for (Slot s : {Slot::l_succ, Slot::r_succ, Slot::l_prec, Slot::r_prec}) {
        const std::string name = std::string("rbrep_") + slot_name(s);
        for (std::size_t i = 0; i < a.dim; ++i) {
            const Vector x = a.e(i);
            const Matrix mpx = rep.at(s, p.apply(x)), mx = rep.at(s, x);
            const Matrix d = mpx * t - t * (mpx + mx * t + lambda * mx);
            for (std::size_t u = 0; u < rep.carrier_dim; ++u) {
                Vector col = d.column(u);
                if (!is_zero(col)) out.add(name, {i, u}, std::move(col));
            }
        }
    }
    return out;
}

RBAlgebra rb_semidirect(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda,
                        const DendriformRep& rep, const Matrix& t) {
    if (!check_rb_representation(a, p, lambda, rep, t).ok())
        throw PreconditionFailed("rb_semidirect: not a Rota-Baxter representation");
    const std::size_t n = a.dim, m = rep.carrier_dim;
    RBAlgebra out{semidirect(rep), Matrix(a.field, n + m, n + m)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.p.at(i, j) = p.at(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.p.at(n + i, n + j) = t.at(i, j);
    if (!check_rb(out.algebra, out.p, lambda).ok()) throw std::logic_error("rb_semidirect: P + T is not Rota-Baxter");
    return out;
}

Matrix coregular_rb_operator(const Matrix& p, const Scalar& lambda) { return rb_tilde(transpose(p), lambda); }

CheckReport check_rb_rep_hom(const Matrix& phi, const DendriformRep& from, const Matrix& t_from,
                             const DendriformRep& to, const Matrix& t_to) {
    if (phi.rows() != to.carrier_dim || phi.cols() != from.carrier_dim) throw DimensionMismatch("homomorphism has the wrong shape");
    CheckReport out;
    const DendriformAlgebra& a = from.base;
    for (Slot s : {Slot::l_succ, Slot::r_succ, Slot::r_prec, Slot::l_prec}) {
        const std::string name = std::string("hom_") + slot_name(s);
        for (std::size_t i = 0; i < a.dim; ++i) {
            const Matrix d = phi * from.family(s)[i] - to.family(s)[i] * phi;
            if (!d.is_zero()) out.add(name, {i}, flatten(d));
        }
    }
    const Matrix d = phi * t_from - t_to * phi;
    if (!d.is_zero()) out.add("hom_t", {}, flatten(d));
    return out;
}

Matrix omega_sharp(const Matrix& w) { return transpose(w); }

OmegaSharpResult check_omega_sharp(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda) {
    require_square(w, a.dim, a.field, "form");
    require_square(p, a.dim, a.field, "P");
    const Matrix sharp = omega_sharp(w);
    return {sharp, check_rb_rep_hom(sharp, regular_rep(a), p, coregular_rep(a), coregular_rb_operator(p, lambda))};
}

OmegaSharpResult omega_sharp_iso(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda) {
    if (!check_quadratic_rb(a, p, w, lambda).ok()) throw PreconditionFailed("omega_sharp_iso: not a quadratic Rota-Baxter dendriform algebra");
    return check_omega_sharp(a, p, w, lambda);
}

}  // namespace dendri
