#include "dendri/io.hpp"

#include "dendri/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dendri {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

constexpr std::array<const char*, 4> kSlots = {"l_succ", "r_succ", "l_prec", "r_prec"};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Document run() {
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            const std::size_t end = std::min(text_.find('\n', pos), text_.size());
            ++line_;
            toks_ = tokenize(text_.substr(pos, end - pos));
            if (!toks_.empty()) statement();
            pos = end + 1;
        }
        return std::move(doc_);
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::size_t tok) const {
        const std::size_t col = tok < toks_.size() ? toks_[tok].column : (toks_.empty() ? 1 : toks_.back().column);
        throw ParseError(msg, line_, col);
    }

    void arity(std::size_t n) const {
        if (toks_.size() < n + 1) fail("'" + std::string(toks_[0].text) + "' expects " + std::to_string(n) + " arguments", toks_.size() - 1);
        if (toks_.size() > n + 1) fail("unexpected extra token", n + 1);
    }

    std::size_t count(std::size_t tok) const {
        const std::string_view s = toks_[tok].text;
        std::size_t v = 0;
        if (s.empty() || s.size() > 9) fail("expected a positive integer", tok);
        for (char c : s) {
            if (c < '0' || c > '9') fail("expected a positive integer", tok);
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    }

    std::size_t index(std::size_t tok, std::size_t bound) const {
        const std::size_t v = count(tok);
        if (v < 1 || v > bound) fail("index out of range 1.." + std::to_string(bound), tok);
        return v - 1;
    }

    Scalar value(std::size_t tok) const {
        try {
            return Scalar::parse(doc_.field, toks_[tok].text);
        } catch (const std::invalid_argument& e) {
            fail(std::string("bad value: ") + e.what(), tok);
        }
    }

    void need_dim() const {
        if (!has_dim_) fail("'dim' must precede indexed entries", 0);
    }

    void once(const std::string& key) {
        if (!seen_.insert(key).second) fail("duplicate entry", 0);
    }

    Matrix& slot(std::optional<Matrix>& m, std::size_t n) {
        if (!m) m = Matrix(doc_.field, n, n);
        return *m;
    }

    void statement() {
        const std::string key(toks_[0].text);
        if (key == "field") {
            once("field");
            if (has_values_ || has_dim_) fail("'field' must come first", 0);
            if (toks_.size() == 2 && toks_[1].text == "rational") {
                doc_.field = Field::rational();
            } else if (toks_.size() == 3 && toks_[1].text == "gf") {
                try {
                    doc_.field = Field::prime(static_cast<std::uint32_t>(count(2)));
                } catch (const std::invalid_argument&) {
                    fail("modulus must be a prime below 65536", 2);
                }
            } else {
                fail("expected 'field rational' or 'field gf <p>'", 1);
            }
        } else if (key == "dim") {
            once("dim");
            arity(1);
            doc_.dim = count(1);
            if (doc_.dim == 0) fail("dimension must be positive", 1);
            has_dim_ = true;
            doc_.basis = default_basis_names(doc_.dim);
            doc_.prec = Tensor3(doc_.field, doc_.dim);
            doc_.succ = Tensor3(doc_.field, doc_.dim);
        } else if (key == "basis") {
            once("basis");
            need_dim();
            if (toks_.size() != doc_.dim + 1) fail("expected " + std::to_string(doc_.dim) + " basis names", toks_.size() - 1);
            std::set<std::string_view> names;
            for (std::size_t i = 1; i < toks_.size(); ++i) {
                if (!names.insert(toks_[i].text).second) fail("repeated basis name", i);
                doc_.basis[i - 1] = std::string(toks_[i].text);
            }
        } else if (key == "prec" || key == "succ") {
            need_dim();
            arity(4);
            const std::size_t i = index(1, doc_.dim), j = index(2, doc_.dim), k = index(3, doc_.dim);
            once(key + " " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k));
            (key == "prec" ? doc_.prec : doc_.succ).at(i, j, k) = value(4);
            has_values_ = true;
        } else if (key == "r" || key == "operator" || key == "form") {
            need_dim();
            arity(3);
            const std::size_t i = index(1, doc_.dim), j = index(2, doc_.dim);
            once(key + " " + std::to_string(i) + " " + std::to_string(j));
            const Scalar v = value(3);
            if (key == "r") slot(doc_.r, doc_.dim).at(i, j) = v;
            else if (key == "form") slot(doc_.form, doc_.dim).at(i, j) = v;
            else slot(doc_.op, doc_.dim).at(j, i) = v;
            has_values_ = true;
        } else if (key == "lambda") {
            once("lambda");
            arity(1);
            doc_.lambda = value(1);
            has_values_ = true;
        } else if (key == "rep-dim") {
            once("rep-dim");
            need_dim();
            arity(1);
            const std::size_t m = count(1);
            if (m == 0) fail("carrier dimension must be positive", 1);
            doc_.rep_dim = m;
            for (auto& fam : doc_.rep) fam.assign(doc_.dim, Matrix(doc_.field, m, m));
        } else if (key == "rep") {
            if (!doc_.rep_dim) fail("'rep-dim' must precede representation entries", 0);
            arity(5);
            std::size_t s = kSlots.size();
            for (std::size_t t = 0; t < kSlots.size(); ++t)
                if (toks_[1].text == kSlots[t]) s = t;
            if (s == kSlots.size()) fail("unknown representation slot", 1);
            const std::size_t i = index(2, doc_.dim), j = index(3, *doc_.rep_dim), k = index(4, *doc_.rep_dim);
            once("rep " + std::string(kSlots[s]) + " " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k));
            doc_.rep[s][i].at(k, j) = value(5);
            has_values_ = true;
        } else if (key == "rep-T") {
            if (!doc_.rep_dim) fail("'rep-dim' must precede representation entries", 0);
            arity(3);
            const std::size_t j = index(1, *doc_.rep_dim), k = index(2, *doc_.rep_dim);
            once("rep-T " + std::to_string(j) + " " + std::to_string(k));
            slot(doc_.rep_t, *doc_.rep_dim).at(k, j) = value(3);
            has_values_ = true;
        } else {
            fail("unknown key '" + key + "'", 0);
        }
    }

    std::string_view text_;
    std::size_t line_ = 0;
    std::vector<Token> toks_;
    Document doc_;
    bool has_dim_ = false;
    bool has_values_ = false;
    std::set<std::string> seen_;
};

void emit_matrix(std::ostringstream& os, const char* key, const Matrix& m, bool image_major) {
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) {
            // image_major: the first printed index is the input basis element.
            const Scalar& v = image_major ? m.at(b, a) : m.at(a, b);
            if (!v.is_zero()) os << key << ' ' << a + 1 << ' ' << b + 1 << ' ' << v << '\n';
        }
}

}  // namespace

DendriformAlgebra Document::algebra() const {
    if (dim == 0) throw MissingData("document has no dimension");
    return {field, dim, basis, prec, succ};
}

TwoTensor Document::two_tensor() const {
    if (!r) throw MissingData("document has no 'r' entries");
    return TwoTensor(*r);
}

Matrix Document::operator_matrix() const {
    if (!op) throw MissingData("document has no 'operator' entries");
    return *op;
}

Matrix Document::form_matrix() const {
    if (!form) throw MissingData("document has no 'form' entries");
    return *form;
}

Scalar Document::weight() const {
    if (!lambda) throw MissingData("document has no 'lambda'");
    return *lambda;
}

DendriformRep Document::representation() const {
    if (!rep_dim) throw MissingData("document has no representation");
    DendriformRep out{algebra(), *rep_dim, rep};
    return out;
}

Matrix Document::rep_operator() const {
    if (!rep_dim) throw MissingData("document has no representation");
    return rep_t ? *rep_t : Matrix(field, *rep_dim, *rep_dim);
}

Document parse_document(std::string_view text) { return Parser(text).run(); }

Document read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize(const Document& doc) {
    std::ostringstream os;
    os << "field " << (doc.field.is_rational() ? std::string("rational") : "gf " + std::to_string(doc.field.modulus())) << '\n';
    if (doc.dim == 0) return os.str();
    os << "dim " << doc.dim << '\n';
    os << "basis";
    for (const auto& b : doc.basis) os << ' ' << b;
    os << '\n';
    for (const auto& [key, t] : {std::pair<const char*, const Tensor3*>{"prec", &doc.prec}, {"succ", &doc.succ}})
        for (std::size_t i = 0; i < doc.dim; ++i)
            for (std::size_t j = 0; j < doc.dim; ++j)
                for (std::size_t k = 0; k < doc.dim; ++k) {
                    const Scalar& v = t->at(i, j, k);
                    if (!v.is_zero()) os << key << ' ' << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << v << '\n';
                }
    if (doc.r) emit_matrix(os, "r", *doc.r, false);
    if (doc.op) emit_matrix(os, "operator", *doc.op, true);
    if (doc.form) emit_matrix(os, "form", *doc.form, false);
    if (doc.lambda) os << "lambda " << *doc.lambda << '\n';
    if (doc.rep_dim) {
        os << "rep-dim " << *doc.rep_dim << '\n';
        for (std::size_t s = 0; s < kSlots.size(); ++s)
            for (std::size_t i = 0; i < doc.dim; ++i) {
                const Matrix& m = doc.rep[s][i];
                for (std::size_t j = 0; j < m.cols(); ++j)
                    for (std::size_t k = 0; k < m.rows(); ++k)
                        if (!m.at(k, j).is_zero())
                            os << "rep " << kSlots[s] << ' ' << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << m.at(k, j) << '\n';
            }
        if (doc.rep_t) emit_matrix(os, "rep-T", *doc.rep_t, true);
    }
    return os.str();
}

Document to_document(const DendriformAlgebra& a) {
    Document doc;
    doc.field = a.field;
    doc.dim = a.dim;
    doc.basis = a.basis;
    doc.prec = a.prec;
    doc.succ = a.succ;
    return doc;
}

Vector parse_vector(const Field& f, std::string_view text) {
    Vector out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        out.push_back(Scalar::parse(f, text.substr(pos, end - pos)));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::string format_vector(std::span<const Scalar> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s;
}

nlohmann::json report_json(const CheckReport& rep) {
    nlohmann::json out = {{"ok", rep.ok()}, {"violations", nlohmann::json::array()}};
    for (const auto& v : rep.violations) {
        nlohmann::json w = nlohmann::json::array();
        for (std::size_t i : v.witness) w.push_back(i + 1);
        nlohmann::json d = nlohmann::json::array();
        for (const auto& s : v.defect) d.push_back(s.to_string());
        out["violations"].push_back({{"identity", v.identity}, {"witness", w}, {"defect", d}});
    }
    return out;
}

std::string report_text(const CheckReport& rep, const std::vector<std::string>& basis) {
    std::ostringstream os;
    for (const auto& v : rep.violations) {
        os << "  " << v.identity << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            const std::size_t w = v.witness[i];
            os << (i ? ", " : "") << (w < basis.size() ? basis[w] : std::to_string(w + 1));
        }
        os << "): defect [" << format_vector(v.defect) << "]\n";
    }
    return os.str();
}

}  // namespace dendri
