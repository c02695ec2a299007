#pragma once

#include "dendri/dbialgebra.hpp"

namespace dendri {

/// Checks P(x)∘P(y) = P(P(x)∘y + x∘P(y) + λ x∘y) for ∘ ∈ {≺, ≻} on all basis
/// pairs. Identities "rb_prec", "rb_succ"; witness (x, y).
CheckReport check_rb(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda);

/// The same identity for an associative product ("rb").
CheckReport check_rb_associative(const AssociativeAlgebra& b, const Matrix& p, const Scalar& lambda);

/// −λId − P.
Matrix rb_tilde(const Matrix& p, const Scalar& lambda);

/// A_P: x ≺_P y = P(x)≺y + x≺P(y) + λ x≺y, and likewise for ≻.
/// Throws PreconditionFailed unless P is a Rota-Baxter operator.
DendriformAlgebra descendent(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda);

/// T: B → A (dim A × dim B) against an action of A on B:
///   (Tu)≻(Tv) = T(l≻(Tu)v + r≻(Tv)u + λ u≻v), and the ≺ analogue.
/// Identities "rrb_succ", "rrb_prec"; witness (u, v). Throws PreconditionFailed
/// if the action is invalid.
CheckReport check_relative_rb(const Matrix& t, const DendriformAction& act, const Scalar& lambda);

/// Products on A* built from I = r₊ − r₋:
///   plus:  ξ≻η = L≺*(Iη)ξ,  ξ≺η = R≻*(Iξ)η
///   minus: ξ≻η = 𝓡*(Iξ)η,   ξ≺η = 𝓛*(Iη)ξ
/// Throw PreconditionFailed unless the skew part of r is invariant.
DendriformAlgebra plus_products(const DendriformAlgebra& a, const TwoTensor& r);
DendriformAlgebra minus_products(const DendriformAlgebra& a, const TwoTensor& r);

/// The coregular representation acting on A* carrying the given products.
DendriformAction coregular_action(const DendriformAlgebra& a, const DendriformAlgebra& on_dual);

/// ω(x, y) for the form with Gram matrix w (w.at(i, j) = ω(e_i, e_j)).
Scalar form_value(const Matrix& w, std::span<const Scalar> x, std::span<const Scalar> y);

bool is_nondegenerate(const Matrix& w);

/// Antisymmetry ("antisymmetry", witness (i, j)), nondegeneracy
/// ("nondegenerate", empty witness) and invariance on every basis triple:
/// "inv_prec": ω(x≻y, z) + ω(x, y≺z) = 0, "inv_star": ω(x≻y, z) − ω(y, z∗x) = 0.
CheckReport check_quadratic(const DendriformAlgebra& a, const Matrix& w);

/// Antisymmetry and the cyclic identity ("cyclic") ω(x∗y,z) + ω(y∗z,x) + ω(z∗x,y) = 0.
/// Nondegeneracy is not part of this report.
CheckReport check_connes(const AssociativeAlgebra& b, const Matrix& w);

/// ω(Px, y) + ω(x, Py) + λω(x, y) = 0 on basis pairs ("compat").
CheckReport check_compatibility(const Matrix& p, const Matrix& w, const Scalar& lambda);

/// Dendriform products determined by ω(x≻y, z) = ω(y, z∗x) and ω(x≺y, z) = ω(x, y∗z).
/// Throws PreconditionFailed if ω is degenerate or not a Connes cocycle.
DendriformAlgebra dendriform_from_connes(const AssociativeAlgebra& b, const Matrix& w);

/// check_dendriform + check_rb + check_quadratic + check_compatibility.
CheckReport check_quadratic_rb(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda);

/// check_associative + check_rb_associative + check_connes + nondegeneracy + check_compatibility.
CheckReport check_connes_rb(const AssociativeAlgebra& b, const Matrix& p, const Matrix& w, const Scalar& lambda);

struct QuadraticRB {
    Matrix p;
    Matrix omega;
};

/// P = λ r₋ I⁻¹ and ω(x, y) = ⟨I⁻¹x, y⟩. Throws PreconditionFailed unless
/// classify(a, r) is factorizable and λ ≠ 0.
QuadraticRB factorizable_to_qrb(const DendriformAlgebra& a, const TwoTensor& r, const Scalar& lambda);

/// The map 𝒥: A* → A with ⟨𝒥⁻¹x, y⟩ = ω(x, y).
Matrix j_omega(const Matrix& w);

/// r₊ = (1/λ)(P + λId)𝒥. Throws PreconditionFailed if λ = 0 or the data is
/// not quadratic Rota-Baxter.
TwoTensor qrb_to_factorizable(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda);

enum class ConnesVariant { p1, p2 };

struct ConnesBundle {
    AssociativeAlgebra algebra;  // A at 0..n-1, A* at n..2n-1
    Matrix p;
    Matrix omega;
};

/// (x+ξ)∘(y+η) = x∗y + R≺*(x)η + L≻*(y)ξ with ω(x+ξ, y+η) = ⟨ξ,y⟩ − ⟨η,x⟩;
/// P₁(x+ξ) = −λx, P₂(x+ξ) = −λξ.
ConnesBundle semidirect_connes(const DendriformAlgebra& a, const Scalar& lambda, ConnesVariant v);

/// The four identities map(Px)(Tu) = T(map(Px)u + map(x)(Tu) + λ map(x)u),
/// named "rbrep_" + slot name; witness (x, u). Throws PreconditionFailed
/// unless rep is a representation and P is Rota-Baxter.
CheckReport check_rb_representation(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda,
                                    const DendriformRep& rep, const Matrix& t);

struct RBAlgebra {
    DendriformAlgebra algebra;
    Matrix p;
};

/// (A ⋉ V, P ⊕ T). Throws PreconditionFailed unless the representation
/// conditions hold.
RBAlgebra rb_semidirect(const DendriformAlgebra& a, const Matrix& p, const Scalar& lambda,
                        const DendriformRep& rep, const Matrix& t);

/// −λId − Pᵀ on A*.
Matrix coregular_rb_operator(const Matrix& p, const Scalar& lambda);

/// φ: V → V' intertwining (rep, T) with (rep', T'). Families named after the
/// slots ("hom_l_succ", ...) with witness (x), and "hom_t".
CheckReport check_rb_rep_hom(const Matrix& phi, const DendriformRep& from, const Matrix& t_from,
                             const DendriformRep& to, const Matrix& t_to);

/// ω♯ = matrix of x ↦ ω(x, ·), that is wᵀ.
Matrix omega_sharp(const Matrix& w);

struct OmegaSharpResult {
    Matrix map;
    CheckReport report;
};

/// ω♯ against the regular and coregular representations of (A, P) without
/// precondition checks.
OmegaSharpResult check_omega_sharp(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda);

/// As above, but throws PreconditionFailed unless the data is quadratic Rota-Baxter.
OmegaSharpResult omega_sharp_iso(const DendriformAlgebra& a, const Matrix& p, const Matrix& w, const Scalar& lambda);

}  // namespace dendri
