#pragma once

#include "dendri/representation.hpp"

#include <optional>

namespace dendri {

/// r = Σ coeff(i, j) e_i ⊗ e_j in A⊗A.
struct TwoTensor {
    Matrix coeff;

    TwoTensor() = default;
    explicit TwoTensor(Matrix r);
    static TwoTensor zero(const Field& f, std::size_t n) { return TwoTensor(Matrix(f, n, n)); }

    std::size_t dim() const noexcept { return coeff.rows(); }
    const Field& field() const noexcept { return coeff.field(); }

    /// r₊: A* → A with ⟨r₊(ξ), η⟩ = r(ξ, η); the matrix is coeffᵀ.
    Matrix r_plus() const { return transpose(coeff); }
    /// r₋: A* → A with ⟨ξ, r₋(η)⟩ = r(ξ, η); the matrix is coeff.
    Matrix r_minus() const { return coeff; }
    /// I = r₊ − r₋.
    Matrix skew_operator() const { return r_plus() - r_minus(); }
    /// σ(r).
    TwoTensor sigma() const { return TwoTensor(exchange_sigma(coeff)); }
    /// r − σ(r), twice the skew-symmetric part; needs no division.
    Matrix skew_twice() const { return coeff - exchange_sigma(coeff); }
    /// a = (r − σ(r))/2 and Λ = (r + σ(r))/2. Throw in characteristic 2.
    Matrix skew_part() const;
    Matrix symmetric_part() const;
    bool is_symmetric() const { return skew_twice().is_zero(); }
};

/// Δ: A → A⊗A stored as at(i, a, b) = coefficient of e_a⊗e_b in Δ(e_i).
struct Cobracket {
    Tensor3 prec;
    Tensor3 succ;
};

/// Δ(x) as a coefficient matrix.
Matrix cobracket_at(const Tensor3& delta, std::span<const Scalar> x);
/// The cobracket whose adjoint gives the products of `dual`.
Cobracket cobracket_of(const DendriformAlgebra& dual);
/// Products on the dual space obtained as the adjoint of a cobracket.
DendriformAlgebra products_of(const Cobracket& c, const std::vector<std::string>& basis);

/// Eqs "eq1", "eq2", "eq5" for an algebra with a free cobracket. Witness (x, y).
CheckReport check_cobracket(const DendriformAlgebra& a, const Cobracket& c);

/// All six compatibility equations "eq1".."eq6" for (A, A*). The cobracket of A
/// is the adjoint of the products of `dual`, and vice versa. Throws
/// PreconditionFailed if either algebra is not dendriform.
CheckReport check_d_bialgebra(const DendriformAlgebra& a, const DendriformAlgebra& dual);

/// φ: A → B is a homomorphism of D-bialgebras: (φ⊗φ)Δ_A∘ = Δ_B∘ φ for both
/// cobrackets and (φ*⊗φ*)β_B∘ = β_A∘ φ*, checked on basis elements.
CheckReport check_d_bialgebra_hom(const Matrix& phi, const DendriformAlgebra& a, const DendriformAlgebra& a_dual,
                                  const DendriformAlgebra& b, const DendriformAlgebra& b_dual);

/// Δ≺(x) = (Id⊗L≻(x) − 𝓡(x)⊗Id) r and Δ≻(x) = (Id⊗𝓛(x) − R≺(x)⊗Id)(−σ(r)).
Cobracket cobracket_from_r(const DendriformAlgebra& a, const TwoTensor& r);

/// A*_r: ξ≻η = 𝓡*(r₊ξ)η − L≺*(r₋η)ξ and ξ≺η = 𝓛*(r₊η)ξ − R≻*(r₋ξ)η.
DendriformAlgebra dual_products(const DendriformAlgebra& a, const TwoTensor& r);

/// The same products computed from the symmetric part Λ alone:
/// ξ≺η = 𝓛*(Λ₊η)ξ − R≻*(Λ₊ξ)η and ξ≻η = 𝓡*(Λ₊ξ)η − L≺*(Λ₊η)ξ.
/// Agrees with dual_products when the skew part is invariant.
DendriformAlgebra dual_products_symmetric(const DendriformAlgebra& a, const TwoTensor& r);

/// r12∗r13 − r13≺r23 − r23≻r12 by direct contraction of structure constants.
Tensor3 d_equation_defect(const DendriformAlgebra& a, const TwoTensor& r);

struct InvarianceResult {
    bool invariant = true;
    /// First failing basis element and the condition (1 or 2) that fails there.
    std::optional<std::size_t> witness;
    int condition = 0;
    explicit operator bool() const noexcept { return invariant; }
};

/// (Id⊗𝓛(x) − R≺(x)⊗Id) t = 0 and (Id⊗L≻(x) − 𝓡(x)⊗Id) σ(t) = 0 for all
/// basis x. The operator reformulations (and, for skew t, the I-forms) are
/// evaluated too; disagreement throws std::logic_error.
InvarianceResult check_lr_invariance(const DendriformAlgebra& a, const Matrix& t);
/// Invariance of the skew part of r, checked on r − σ(r).
InvarianceResult check_skew_invariance(const DendriformAlgebra& a, const TwoTensor& r);

/// The five tensor conditions "cond13".."cond17" exactly as displayed, with
/// Q(x) = Id⊗L≻(x) − R≺(x)⊗Id. Witness (x, y) for the first two and (x) for
/// the rest.
CheckReport check_coboundary_conditions(const DendriformAlgebra& a, const TwoTensor& r);

enum class RClass { invalid_products, coboundary, triangular, quasi_triangular, factorizable };

const char* to_string(RClass c);

struct ClassificationResult {
    RClass kind = RClass::invalid_products;
    bool dual_dendriform = false;
    bool bialgebra = false;
    bool d_equation = false;
    bool skew_invariant = false;
    bool symmetric = false;
    std::size_t rank_i = 0;
    InvarianceResult invariance;
    CheckReport dual_axioms;
    CheckReport bialgebra_report;
    CheckReport conditions;
};

/// Coboundary: A*_r is dendriform and (A, A*_r) satisfies the six equations.
/// Quasi-triangular: additionally the D-equation holds and the skew part is
/// invariant; triangular: also r = σ(r); factorizable: also rank(I) = n.
/// Rejects characteristic 2 and non-dendriform A.
ClassificationResult classify(const DendriformAlgebra& a, const TwoTensor& r);

struct Factorization {
    Vector plus;
    Vector minus;
};

/// x = x₊ − x₋ with x₊ = r₊(I⁻¹x), x₋ = r₋(I⁻¹x). Throws PreconditionFailed
/// unless r is factorizable.
Factorization factorize(const DendriformAlgebra& a, const TwoTensor& r, std::span<const Scalar> x);

struct DoubleResult {
    DendriformAlgebra algebra;  // basis e_1..e_n of A, then e_1*..e_n* of A*
    TwoTensor r;                // Σ e_i ⊗ e_i*
};

/// Dendriform structure on A ⊕ A*. Throws PreconditionFailed unless (A, A*)
/// is a D-bialgebra.
DoubleResult dendriform_double(const DendriformAlgebra& a, const DendriformAlgebra& dual);

/// Products on 𝔡* = A* ⊕ A (A* coordinates first) taken componentwise:
/// (ξ,x)∘(η,y) = (ξ∘η, x∘y).
DendriformAlgebra componentwise_dual(const DendriformAlgebra& a, const DendriformAlgebra& dual);

/// Dual basis names e1* .. en*.
std::vector<std::string> dual_basis_names(const DendriformAlgebra& a);

}  // namespace dendri
