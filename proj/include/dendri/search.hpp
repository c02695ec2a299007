#pragma once

#include "dendri/dbialgebra.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace dendri {

enum class SearchTarget { two_tensor, rb_operator };
enum class Shape { any, symmetric, skew };

/// All n×n matrices over GF(p) with the given shape and fixed entries. The
/// free entries are enumerated lexicographically in row-major order, residues
/// 0..p-1, first free entry most significant.
struct SearchSpace {
    DendriformAlgebra base;
    SearchTarget target = SearchTarget::two_tensor;
    Shape shape = Shape::any;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> fixed;
    std::uint64_t cap = 10'000'000;

    /// Entries that vary. Symmetric and skew shapes use the upper triangle
    /// (skew excludes the diagonal).
    std::vector<std::pair<std::size_t, std::size_t>> free_entries() const;
    /// p^(free entries). Throws PreconditionFailed if the field is not an odd
    /// prime field or the count exceeds the cap.
    std::uint64_t size() const;
    Matrix candidate(std::uint64_t index) const;
};

/// Thread count: DENDRI_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned default_threads();

struct DSolution {
    TwoTensor r;
    ClassificationResult classification;
};

struct DSearchResult {
    std::vector<DSolution> solutions;
    std::uint64_t scanned = 0;
    /// Candidates on which the two defect computations differ in being zero or in value.
    std::uint64_t oracle_disagreements = 0;
};

/// Every r in the space with zero D-equation defect, classified. Both defect
/// computations are run on every candidate.
DSearchResult enumerate_d_solutions(const SearchSpace& space, unsigned threads = 0);
DSearchResult enumerate_d_solutions(const DendriformAlgebra& a, unsigned threads = 0);

/// Every P in the space passing check_rb of weight λ.
std::vector<Matrix> enumerate_rb(const SearchSpace& space, const Scalar& lambda, unsigned threads = 0);
std::vector<Matrix> enumerate_rb(const DendriformAlgebra& a, const Scalar& lambda, unsigned threads = 0);

/// D-equation defect assembled from Kronecker products of multiplication
/// operators acting on vec(r).
Tensor3 oracle_defect(const DendriformAlgebra& a, const TwoTensor& r);

/// Reduction of rational data modulo p. Throws std::invalid_argument when a
/// denominator is divisible by p.
Scalar reduce_mod(const Scalar& s, std::uint32_t p);
Matrix reduce_mod(const Matrix& m, std::uint32_t p);
DendriformAlgebra reduce_mod(const DendriformAlgebra& a, std::uint32_t p);

}  // namespace dendri
