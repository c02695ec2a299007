#pragma once

#include "dendri/dbialgebra.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace dendri {

/// A required attachment is absent from a document.
class MissingData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Contents of one algebra file. Line format, indices 1-based:
///
///   # comment
///   field rational | field gf <p>
///   dim <n>
///   basis <name> ... <name>
///   prec <i> <j> <k> <v>        e_i ≺ e_j has e_k-coefficient v
///   succ <i> <j> <k> <v>
///   r <i> <j> <v>               coefficient of e_i ⊗ e_j
///   operator <j> <k> <v>        P(e_j) has e_k-coefficient v
///   form <i> <j> <v>            ω(e_i, e_j) = v
///   lambda <v>
///   rep-dim <m>
///   rep <slot> <i> <j> <k> <v>  slot(e_i) maps u_j to v·u_k + ...
///   rep-T <j> <k> <v>           T(u_j) has u_k-coefficient v
struct Document {
    Field field = Field::rational();
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor3 prec{Field::rational(), 0};
    Tensor3 succ{Field::rational(), 0};
    std::optional<Matrix> r;
    std::optional<Matrix> op;
    std::optional<Matrix> form;
    std::optional<Scalar> lambda;
    std::optional<std::size_t> rep_dim;
    std::array<std::vector<Matrix>, 4> rep;
    std::optional<Matrix> rep_t;

    DendriformAlgebra algebra() const;
    /// Each throws MissingData when the attachment is absent.
    TwoTensor two_tensor() const;
    Matrix operator_matrix() const;
    Matrix form_matrix() const;
    Scalar weight() const;
    DendriformRep representation() const;
    Matrix rep_operator() const;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError for malformed values, out-of-range indices, unknown keys,
/// duplicate entries and misplaced declarations.
Document parse_document(std::string_view text);
/// Reads and parses a file; throws std::runtime_error if it cannot be read.
Document read_document(const std::string& path);

/// Canonical text: fixed key order, sparse entries sorted by index, zero
/// entries omitted, exact values.
std::string serialize(const Document& doc);

Document to_document(const DendriformAlgebra& a);

/// Parses a comma-separated vector of exact values.
Vector parse_vector(const Field& f, std::string_view text);
std::string format_vector(std::span<const Scalar> v);

/// {"ok": bool, "violations": [{"identity", "witness" (1-based), "defect"}]}.
nlohmann::json report_json(const CheckReport& rep);

/// One line per violation: identity, 1-based witness, defect.
std::string report_text(const CheckReport& rep, const std::vector<std::string>& basis);

}  // namespace dendri
