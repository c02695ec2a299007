#include "dendri/representation.hpp"

#include "dendri/errors.hpp"

#include <string>

namespace dendri {

const char* slot_name(Slot s) {
    switch (s) {
        case Slot::l_succ: return "l_succ";
        case Slot::r_succ: return "r_succ";
        case Slot::l_prec: return "l_prec";
        case Slot::r_prec: return "r_prec";
    }
    return "?";
}

DendriformRep DendriformRep::zero(const DendriformAlgebra& a, std::size_t m) {
    DendriformRep rep;
    rep.base = a;
    rep.carrier_dim = m;
    for (auto& fam : rep.maps) fam.assign(a.dim, Matrix(a.field, m, m));
    return rep;
}

Matrix DendriformRep::at(Slot s, std::span<const Scalar> x) const {
    if (x.size() != base.dim) throw DimensionMismatch("representation: element has wrong length");
    Matrix out(base.field, carrier_dim, carrier_dim);
    const auto& fam = family(s);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) out += x[i] * fam[i];
    }
    return out;
}

Matrix DendriformRep::l_star(std::span<const Scalar> x) const { return at(Slot::l_prec, x) + at(Slot::l_succ, x); }
Matrix DendriformRep::r_star(std::span<const Scalar> x) const { return at(Slot::r_prec, x) + at(Slot::r_succ, x); }

void DendriformRep::validate() const {
    base.validate();
    for (std::size_t s = 0; s < 4; ++s) {
        if (maps[s].size() != base.dim) {
            throw DimensionMismatch(std::string("representation slot ") + slot_name(static_cast<Slot>(s)) +
                                    " needs one matrix per basis element");
        }
        for (const auto& m : maps[s]) {
            if (m.rows() != carrier_dim || m.cols() != carrier_dim) {
                throw DimensionMismatch("representation matrices must be " + std::to_string(carrier_dim) + "x" +
                                        std::to_string(carrier_dim));
            }
            if (!(m.field() == base.field)) throw FieldMismatch("representation matrix over another field");
        }
    }
}

CheckReport check_representation(const DendriformRep& rep) {
    rep.validate();
    const DendriformAlgebra& a = rep.base;
    const std::size_t n = a.dim;
    std::vector<Violation> found[9];
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = a.e(i);
        const Matrix lsx = rep.at(Slot::l_succ, x), rsx = rep.at(Slot::r_succ, x);
        const Matrix lpx = rep.at(Slot::l_prec, x), rpx = rep.at(Slot::r_prec, x);
        const Matrix rstx = rpx + rsx;
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = a.e(j);
            const Matrix lsy = rep.at(Slot::l_succ, y), rsy = rep.at(Slot::r_succ, y);
            const Matrix lpy = rep.at(Slot::l_prec, y);
            const Matrix lsty = lpy + lsy;
            const Matrix rsty = rep.r_star(y);
            const Matrix d[9] = {
                rep.at(Slot::l_prec, a.left(x, y)) - lpx * lsty,
                rpx * lpy - lpy * rstx,
                rpx * rep.at(Slot::r_prec, y) - rep.at(Slot::r_prec, a.star(y, x)),
                rep.at(Slot::l_prec, a.right(x, y)) - lsx * lpy,
                rpx * lsy - lsy * rpx,
                rpx * rsy - rep.at(Slot::r_succ, a.left(y, x)),
                rep.at(Slot::l_succ, a.star(x, y)) - lsx * lsy,
                rsx * lsty - lsy * rsx,
                rsx * rsty - rep.at(Slot::r_succ, a.right(y, x)),
            };
            for (std::size_t e = 0; e < 9; ++e) {
                if (!d[e].is_zero()) found[e].push_back({"rep" + std::to_string(e + 1), {i, j}, flatten(d[e])});
            }
        }
    }
    CheckReport out;
    for (auto& f : found) out.violations.insert(out.violations.end(), f.begin(), f.end());
    return out;
}

DendriformRep regular_rep(const DendriformAlgebra& a) {
    DendriformRep rep = DendriformRep::zero(a, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const MultOperators m = mult_operators(a, a.e(i));
        rep.family(Slot::l_succ)[i] = m.l_succ;
        rep.family(Slot::r_succ)[i] = m.r_succ;
        rep.family(Slot::l_prec)[i] = m.l_prec;
        rep.family(Slot::r_prec)[i] = m.r_prec;
    }
    return rep;
}

DendriformRep coregular_rep(const DendriformAlgebra& a) {
    DendriformRep rep = DendriformRep::zero(a, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const MultOperators m = mult_operators(a, a.e(i));
        rep.family(Slot::l_succ)[i] = transpose(m.r_star);
        rep.family(Slot::r_succ)[i] = -transpose(m.l_prec);
        rep.family(Slot::l_prec)[i] = -transpose(m.r_succ);
        rep.family(Slot::r_prec)[i] = transpose(m.l_star);
    }
    return rep;
}

namespace {

DendriformAlgebra build_semidirect(const DendriformRep& rep, const DendriformAlgebra* target) {
    const DendriformAlgebra& a = rep.base;
    const std::size_t n = a.dim, m = rep.carrier_dim, total = n + m;
    DendriformAlgebra out = DendriformAlgebra::zero(a.field, total);
    out.basis = a.basis;
    for (std::size_t u = 0; u < m; ++u) {
        out.basis.push_back(target && target->basis.size() == m ? target->basis[u] : "v" + std::to_string(u + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.prec.at(i, j, k) = a.prec.at(i, j, k);
                out.succ.at(i, j, k) = a.succ.at(i, j, k);
            }
    // x ∘ v = l∘(x)v and u ∘ y = r∘(y)u.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t k = 0; k < m; ++k) {
                out.succ.at(i, n + v, n + k) = rep.family(Slot::l_succ)[i].at(k, v);
                out.prec.at(i, n + v, n + k) = rep.family(Slot::l_prec)[i].at(k, v);
                out.succ.at(n + v, i, n + k) = rep.family(Slot::r_succ)[i].at(k, v);
                out.prec.at(n + v, i, n + k) = rep.family(Slot::r_prec)[i].at(k, v);
            }
    if (target) {
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t k = 0; k < m; ++k) {
                    out.prec.at(n + u, n + v, n + k) = target->prec.at(u, v, k);
                    out.succ.at(n + u, n + v, n + k) = target->succ.at(u, v, k);
                }
    }
    return out;
}

}  // namespace

DendriformAlgebra semidirect(const DendriformRep& rep) {
    if (!check_representation(rep).ok()) throw PreconditionFailed("semidirect: not a representation");
    return build_semidirect(rep, nullptr);
}

DendriformAlgebra semidirect(const DendriformAction& act) {
    if (!check_action(act).ok()) throw PreconditionFailed("semidirect: not an action");
    return build_semidirect(act.rep, &act.target);
}

CheckReport check_action(const DendriformAction& act) {
    const DendriformRep& rep = act.rep;
    const DendriformAlgebra& b = act.target;
    b.validate();
    if (b.dim != rep.carrier_dim) throw DimensionMismatch("action: target dimension differs from carrier");
    if (!(b.field == rep.base.field)) throw FieldMismatch("action: target over another field");

    CheckReport out = check_representation(rep);
    out.merge(check_dendriform(b));

    const std::size_t n = rep.base.dim, m = b.dim;
    std::vector<Violation> found[9];
    for (std::size_t i = 0; i < n; ++i) {
        const Vector x = rep.base.e(i);
        const Matrix ls = rep.at(Slot::l_succ, x), rs = rep.at(Slot::r_succ, x);
        const Matrix lp = rep.at(Slot::l_prec, x), rp = rep.at(Slot::r_prec, x);
        const Matrix lst = lp + ls, rst = rp + rs;
        for (std::size_t a = 0; a < m; ++a) {
            const Vector u = b.e(a);
            for (std::size_t c = 0; c < m; ++c) {
                const Vector v = b.e(c);
                const Vector d[9] = {
                    sub(rp.apply(b.right(u, v)), b.right(u, rp.apply(v))),
                    sub(b.left(ls.apply(u), v), ls.apply(b.left(u, v))),
                    sub(b.left(rs.apply(u), v), b.right(u, lp.apply(v))),
                    sub(rp.apply(b.left(u, v)), b.left(u, rst.apply(v))),
                    sub(b.left(lp.apply(u), v), lp.apply(b.star(u, v))),
                    sub(b.left(rp.apply(u), v), b.left(u, lst.apply(v))),
                    sub(ls.apply(b.right(u, v)), b.right(lst.apply(u), v)),
                    sub(b.right(u, ls.apply(v)), b.right(rst.apply(u), v)),
                    sub(b.right(u, rs.apply(v)), rs.apply(b.star(u, v))),
                };
                for (std::size_t e = 0; e < 9; ++e) {
                    if (!is_zero(d[e])) found[e].push_back({"action" + std::to_string(e + 1), {i, a, c}, d[e]});
                }
            }
        }
    }
    for (auto& f : found) out.violations.insert(out.violations.end(), f.begin(), f.end());
    return out;
}

CheckReport hom_report(const Matrix& f, const DendriformAlgebra& from, const DendriformAlgebra& to) {
    if (f.cols() != from.dim || f.rows() != to.dim) throw DimensionMismatch("homomorphism matrix has wrong shape");
    CheckReport out;
    for (std::size_t i = 0; i < from.dim; ++i) {
        const Vector x = from.e(i);
        const Vector fx = f.apply(x);
        for (std::size_t j = 0; j < from.dim; ++j) {
            const Vector y = from.e(j);
            const Vector fy = f.apply(y);
            Vector dp = sub(f.apply(from.left(x, y)), to.left(fx, fy));
            if (!is_zero(dp)) out.add("hom_prec", {i, j}, std::move(dp));
        }
    }
    for (std::size_t i = 0; i < from.dim; ++i) {
        const Vector x = from.e(i);
        const Vector fx = f.apply(x);
        for (std::size_t j = 0; j < from.dim; ++j) {
            const Vector y = from.e(j);
            Vector ds = sub(f.apply(from.right(x, y)), to.right(fx, f.apply(y)));
            if (!is_zero(ds)) out.add("hom_succ", {i, j}, std::move(ds));
        }
    }
    return out;
}

bool check_dendriform_hom(const Matrix& f, const DendriformAlgebra& from, const DendriformAlgebra& to) {
    return hom_report(f, from, to).ok();
}

}  // namespace dendri
