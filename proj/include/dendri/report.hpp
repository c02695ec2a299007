#pragma once

#include "dendri/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dendri {

/// One failed identity: which identity, at which basis tuple (0-based), and
/// the nonzero defect (flattened when the defect is a matrix or tensor).
struct Violation {
    std::string identity;
    std::vector<std::size_t> witness;
    Vector defect;
};

/// Outcome of an exhaustive identity check. Violations are recorded in
/// lexicographic order of (identity position, basis tuple).
struct CheckReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }

    void add(std::string identity, std::vector<std::size_t> witness, Vector defect) {
        violations.push_back({std::move(identity), std::move(witness), std::move(defect)});
    }
    void merge(const CheckReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    /// True if some violation names this identity.
    bool fails(const std::string& identity) const {
        for (const auto& v : violations) {
            if (v.identity == identity) return true;
        }
        return false;
    }
};

/// Row-major flattening of a matrix, used to store matrix-valued defects.
Vector flatten(const Matrix& m);

}  // namespace dendri
