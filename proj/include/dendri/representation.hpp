#pragma once

#include "dendri/algebra.hpp"

#include <array>
#include <optional>

namespace dendri {

/// Slot order of a representation quintuple (V; l≻, r≻, l≺, r≺).
enum class Slot : std::size_t { l_succ = 0, r_succ = 1, l_prec = 2, r_prec = 3 };

const char* slot_name(Slot s);

/// A representation of a dendriform algebra on a carrier of dimension m.
/// maps[s][i] is the m×m matrix of the slot-s map at basis element e_i.
struct DendriformRep {
    DendriformAlgebra base;
    std::size_t carrier_dim = 0;
    std::array<std::vector<Matrix>, 4> maps;

    /// All four families zero.
    static DendriformRep zero(const DendriformAlgebra& a, std::size_t m);

    std::vector<Matrix>& family(Slot s) { return maps[static_cast<std::size_t>(s)]; }
    const std::vector<Matrix>& family(Slot s) const { return maps[static_cast<std::size_t>(s)]; }

    /// The slot map at an arbitrary element of A (extended linearly).
    Matrix at(Slot s, std::span<const Scalar> x) const;
    Matrix l_star(std::span<const Scalar> x) const;
    Matrix r_star(std::span<const Scalar> x) const;

    void validate() const;
};

/// A representation whose carrier is itself a dendriform algebra.
struct DendriformAction {
    DendriformRep rep;
    DendriformAlgebra target;
};

/// The nine representation identities, named "rep1".."rep9", as matrix
/// equations on every basis pair (x, y). Witness is (x, y).
CheckReport check_representation(const DendriformRep& rep);

/// (A; L≻, R≻, L≺, R≺).
DendriformRep regular_rep(const DendriformAlgebra& a);
/// Carrier A* with l≻ = 𝓡*, r≻ = −L≺*, l≺ = −R≻*, r≺ = 𝓛*.
DendriformRep coregular_rep(const DendriformAlgebra& a);

/// Dendriform structure on A ⊕ V (indices of V follow those of A). With a
/// target algebra the products of V are included, giving A ⋉ B.
/// Throws PreconditionFailed if the representation is invalid.
DendriformAlgebra semidirect(const DendriformRep& rep);
DendriformAlgebra semidirect(const DendriformAction& act);

/// Representation identities, the dendriform axioms of the target, and the
/// nine action identities "action1".."action9" on (e_i of A, u, v basis of B).
CheckReport check_action(const DendriformAction& act);

/// f(x≺y) = f(x)≺f(y) and f(x≻y) = f(x)≻f(y) on all basis pairs. f is dim(to)×dim(from).
bool check_dendriform_hom(const Matrix& f, const DendriformAlgebra& from, const DendriformAlgebra& to);
CheckReport hom_report(const Matrix& f, const DendriformAlgebra& from, const DendriformAlgebra& to);

}  // namespace dendri
