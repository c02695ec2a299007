#pragma once

#include "dendri/report.hpp"
#include "dendri/tensor3.hpp"

#include <string>
#include <vector>

namespace dendri {

/// A finite-dimensional dendriform algebra given by structure constants:
/// prec.at(i, j, k) is the e_k-coefficient of e_i ≺ e_j, succ likewise for ≻.
struct DendriformAlgebra {
    Field field = Field::rational();
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor3 prec;
    Tensor3 succ;

    /// All products zero, basis named e1..en.
    static DendriformAlgebra zero(const Field& f, std::size_t n);

    Vector left(std::span<const Scalar> x, std::span<const Scalar> y) const { return multiply(prec, x, y); }
    Vector right(std::span<const Scalar> x, std::span<const Scalar> y) const { return multiply(succ, x, y); }
    /// Sub-adjacent product x ∗ y = x ≺ y + x ≻ y.
    Vector star(std::span<const Scalar> x, std::span<const Scalar> y) const;

    Vector e(std::size_t i) const { return basis_vector(field, dim, i); }

    /// Throws DimensionMismatch/FieldMismatch unless both tensors are dim³ cubes over `field`.
    void validate() const;

    friend bool operator==(const DendriformAlgebra&, const DendriformAlgebra&) = default;
};

std::vector<std::string> default_basis_names(std::size_t n, const std::string& prefix = "e");

/// An associative algebra by structure constants.
struct AssociativeAlgebra {
    Field field = Field::rational();
    std::size_t dim = 0;
    Tensor3 mult;

    Vector mul(std::span<const Scalar> x, std::span<const Scalar> y) const { return multiply(mult, x, y); }

    friend bool operator==(const AssociativeAlgebra&, const AssociativeAlgebra&) = default;
};

/// Left and right multiplication operators of a fixed element x.
struct MultOperators {
    Matrix l_succ;  // y ↦ x ≻ y
    Matrix r_succ;  // y ↦ y ≻ x
    Matrix l_prec;  // y ↦ x ≺ y
    Matrix r_prec;  // y ↦ y ≺ x
    Matrix l_star;  // l_prec + l_succ
    Matrix r_star;  // r_prec + r_succ
};

/// Checks the three dendriform axioms on every basis triple. Identities are
/// named "axiom1" .. "axiom3":
///   (x≺y)≺z = x≺(y≺z + y≻z),  (x≻y)≺z = x≻(y≺z),  x≻(y≻z) = (x≺y + x≻y)≻z.
CheckReport check_dendriform(const DendriformAlgebra& a);

/// (x∗y)∗z = x∗(y∗z) on every basis triple.
CheckReport check_associative(const AssociativeAlgebra& b);

/// Sub-adjacent associative algebra; throws PreconditionFailed if `a` is not dendriform.
AssociativeAlgebra sub_adjacent(const DendriformAlgebra& a);

MultOperators mult_operators(const DendriformAlgebra& a, std::span<const Scalar> x);

/// Pre-Lie product x⋆y = x≻y − y≺x as structure constants.
Tensor3 to_pre_lie(const DendriformAlgebra& a);
/// (x⋆y)⋆z − x⋆(y⋆z) = (y⋆x)⋆z − y⋆(x⋆z) on basis triples.
CheckReport check_pre_lie(const Tensor3& star);

/// Commutator bracket [x,y] = x∗y − y∗x.
Tensor3 to_lie(const AssociativeAlgebra& b);
/// Antisymmetry and the Jacobi identity on basis tuples.
CheckReport check_lie(const Tensor3& bracket);

}  // namespace dendri
