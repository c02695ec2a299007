#include "dendri/errors.hpp"
#include "dendri/io.hpp"
#include "dendri/rota_baxter.hpp"
#include "dendri/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dendri;
using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    bool ok = true;
    json report = json::object();
    std::ostringstream text;

    void check(const std::string& name, const CheckReport& rep, const std::vector<std::string>& basis = {}) {
        report["checks"][name] = report_json(rep);
        ok = ok && rep.ok();
        text << name << ": " << (rep.ok() ? "ok" : "FAIL") << '\n' << report_text(rep, basis);
    }
    void flag(const std::string& name, bool value) {
        report["checks"][name] = {{"ok", value}, {"violations", json::array()}};
        ok = ok && value;
        text << name << ": " << (value ? "ok" : "FAIL") << '\n';
    }
    void object(const std::string& name, const std::string& body) {
        report["objects"][name] = body;
        text << "--- " << name << '\n' << body;
    }
};

struct Inputs {
    std::string file;
    std::string file2;
    std::string with_r;
    std::string lambda;
    std::string x;
    std::uint32_t p = 0;
};

Document load(const Inputs& in) {
    Document doc = read_document(in.file);
    if (!in.with_r.empty()) {
        const Document t = read_document(in.with_r);
        if (!(t.field == doc.field)) throw FieldMismatch("2-tensor file declares another field");
        if (t.dim != doc.dim) throw DimensionMismatch("2-tensor file has another dimension");
        doc.r = t.two_tensor().coeff;
    }
    return doc;
}

Scalar weight(const Inputs& in, const Document& doc) {
    if (in.lambda.empty()) return doc.weight();
    try {
        return Scalar::parse(doc.field, in.lambda);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
}

Scalar nonzero_weight(const Inputs& in, const Document& doc) {
    const Scalar l = weight(in, doc);
    if (l.is_zero()) throw UsageError("--lambda must be nonzero");
    return l;
}

void classification(Outcome& out, const ClassificationResult& c) {
    out.report["classification"] = to_string(c.kind);
    out.report["details"] = {{"dual_dendriform", c.dual_dendriform}, {"bialgebra", c.bialgebra},
                             {"d_equation", c.d_equation}, {"skew_invariant", c.skew_invariant},
                             {"symmetric", c.symmetric}, {"rank_i", c.rank_i}};
    out.report["checks"]["conditions"] = report_json(c.conditions);
    out.text << "classification: " << to_string(c.kind) << '\n'
             << "  dual products dendriform: " << (c.dual_dendriform ? "yes" : "no") << '\n'
             << "  bialgebra equations: " << (c.bialgebra ? "yes" : "no") << '\n'
             << "  D-equation: " << (c.d_equation ? "yes" : "no") << '\n'
             << "  skew part invariant: " << (c.skew_invariant ? "yes" : "no") << '\n'
             << "  symmetric: " << (c.symmetric ? "yes" : "no") << '\n'
             << "  rank I: " << c.rank_i << '\n';
}

Outcome check_dendriform_cmd(const Inputs& in) {
    Outcome out;
    const DendriformAlgebra a = read_document(in.file).algebra();
    out.check("dendriform", check_dendriform(a), a.basis);
    return out;
}

Outcome check_d_bialgebra_cmd(const Inputs& in) {
    Outcome out;
    const DendriformAlgebra a = read_document(in.file).algebra();
    const DendriformAlgebra d = read_document(in.file2).algebra();
    if (a.dim != d.dim) throw DimensionMismatch("the two algebras have different dimensions");
    if (!(a.field == d.field)) throw FieldMismatch("the two algebras are over different fields");
    const CheckReport ra = check_dendriform(a), rd = check_dendriform(d);
    out.check("dendriform", ra, a.basis);
    out.check("dendriform_dual", rd, d.basis);
    if (ra.ok() && rd.ok()) out.check("d_bialgebra", check_d_bialgebra(a, d));
    return out;
}

Outcome check_qrb_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = read_document(in.file);
    const DendriformAlgebra a = doc.algebra();
    const Scalar l = weight(in, doc);
    const Matrix p = doc.operator_matrix(), w = doc.form_matrix();
    out.check("dendriform", check_dendriform(a), a.basis);
    out.check("rota_baxter", check_rb(a, p, l));
    out.check("quadratic", check_quadratic(a, w));
    out.check("compatibility", check_compatibility(p, w, l));
    return out;
}

Outcome classify_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = load(in);
    const ClassificationResult c = classify(doc.algebra(), doc.two_tensor());
    classification(out, c);
    out.ok = c.kind != RClass::invalid_products;
    return out;
}

Outcome dual_products_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = load(in);
    const DendriformAlgebra d = dual_products(doc.algebra(), doc.two_tensor());
    out.check("dendriform", check_dendriform(d), d.basis);
    out.object("dual", serialize(to_document(d)));
    return out;
}

Outcome double_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = load(in);
    const DendriformAlgebra a = doc.algebra();
    const DendriformAlgebra d = dual_products(a, doc.two_tensor());
    const CheckReport rd = check_dendriform(d);
    out.check("dendriform_dual", rd, d.basis);
    if (!rd.ok()) return out;
    const CheckReport bi = check_d_bialgebra(a, d);
    out.check("d_bialgebra", bi);
    if (!bi.ok()) return out;
    const DoubleResult dbl = dendriform_double(a, d);
    out.check("dendriform", check_dendriform(dbl.algebra), dbl.algebra.basis);
    const ClassificationResult c = classify(dbl.algebra, dbl.r);
    classification(out, c);
    out.ok = out.ok && c.kind == RClass::factorizable;
    Document res = to_document(dbl.algebra);
    res.r = dbl.r.coeff;
    out.object("double", serialize(res));
    return out;
}

Outcome factorize_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = load(in);
    const DendriformAlgebra a = doc.algebra();
    Vector x;
    try {
        x = parse_vector(a.field, in.x);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--x: ") + e.what());
    }
    if (x.size() != a.dim) throw UsageError("--x needs " + std::to_string(a.dim) + " components");
    const Factorization f = factorize(a, doc.two_tensor(), x);
    out.flag("recombines", sub(f.plus, f.minus) == x);
    out.report["x_plus"] = format_vector(f.plus);
    out.report["x_minus"] = format_vector(f.minus);
    out.text << "x+ = " << format_vector(f.plus) << "\nx- = " << format_vector(f.minus) << '\n';
    return out;
}

Outcome to_qrb_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = load(in);
    const DendriformAlgebra a = doc.algebra();
    const Scalar l = nonzero_weight(in, doc);
    const QuadraticRB q = factorizable_to_qrb(a, doc.two_tensor(), l);
    out.check("quadratic_rota_baxter", check_quadratic_rb(a, q.p, q.omega, l));
    Document res = to_document(a);
    res.op = q.p;
    res.form = q.omega;
    res.lambda = l;
    out.object("quadratic_rota_baxter", serialize(res));
    return out;
}

Outcome from_qrb_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = read_document(in.file);
    const DendriformAlgebra a = doc.algebra();
    const Scalar l = nonzero_weight(in, doc);
    const TwoTensor r = qrb_to_factorizable(a, doc.operator_matrix(), doc.form_matrix(), l);
    const ClassificationResult c = classify(a, r);
    classification(out, c);
    out.ok = c.kind == RClass::factorizable;
    Document res = to_document(a);
    res.r = r.coeff;
    out.object("factorizable", serialize(res));
    return out;
}

DendriformAlgebra over_prime(const Document& doc, std::uint32_t p) {
    if (!is_prime(p) || p == 2 || p > 65535) throw UsageError("--p must be an odd prime below 65536");
    const DendriformAlgebra a = doc.algebra();
    if (a.field.is_rational()) return reduce_mod(a, p);
    if (a.field.modulus() != p) throw UsageError("--p differs from the field of the file");
    return a;
}

Outcome search_d_cmd(const Inputs& in) {
    Outcome out;
    const DendriformAlgebra a = over_prime(read_document(in.file), in.p);
    const DSearchResult res = enumerate_d_solutions(a);
    out.flag("oracle_agreement", res.oracle_disagreements == 0);
    out.report["scanned"] = res.scanned;
    out.report["solutions"] = json::array();
    out.text << "scanned " << res.scanned << ", solutions " << res.solutions.size() << '\n';
    for (const auto& s : res.solutions) {
        Document d;
        d.field = a.field;
        d.dim = a.dim;
        d.basis = a.basis;
        d.prec = Tensor3(a.field, a.dim);
        d.succ = d.prec;
        d.r = s.r.coeff;
        const std::string body = serialize(d);
        out.report["solutions"].push_back({{"r", body}, {"classification", to_string(s.classification.kind)}});
        std::string entries;
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) entries += (i + j ? " " : "") + s.r.coeff.at(i, j).to_string();
        out.text << "  [" << entries << "] " << to_string(s.classification.kind) << '\n';
    }
    return out;
}

Outcome search_rb_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = read_document(in.file);
    const DendriformAlgebra a = over_prime(doc, in.p);
    if (in.lambda.empty()) throw UsageError("search rb needs --lambda");
    Scalar l;
    try {
        l = Scalar::parse(a.field, in.lambda);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
    const std::vector<Matrix> ops = enumerate_rb(a, l);
    bool closed = true;
    for (const Matrix& p : ops)
        if (std::find(ops.begin(), ops.end(), rb_tilde(p, l)) == ops.end()) closed = false;
    out.flag("tilde_closure", closed);
    out.report["operators"] = json::array();
    out.text << "operators " << ops.size() << '\n';
    for (const Matrix& p : ops) {
        std::string entries;
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) entries += (i + j ? " " : "") + p.at(i, j).to_string();
        out.report["operators"].push_back(entries);
        out.text << "  [" << entries << "]\n";
    }
    return out;
}

Outcome omega_sharp_cmd(const Inputs& in) {
    Outcome out;
    const Document doc = read_document(in.file);
    const DendriformAlgebra a = doc.algebra();
    const Scalar l = weight(in, doc);
    const OmegaSharpResult res = omega_sharp_iso(a, doc.operator_matrix(), doc.form_matrix(), l);
    out.check("intertwining", res.report);
    std::ostringstream m;
    for (std::size_t k = 0; k < res.map.rows(); ++k) {
        for (std::size_t j = 0; j < res.map.cols(); ++j) m << (j ? " " : "") << res.map.at(k, j);
        m << '\n';
    }
    out.object("omega_sharp", m.str());
    return out;
}

int finish(Outcome& out, const std::string& command, const std::string& path) {
    out.report["command"] = command;
    out.report["ok"] = out.ok;
    std::cout << out.text.str() << (out.ok ? "result: pass" : "result: FAIL") << '\n';
    if (!path.empty()) {
        std::ofstream f(path);
        if (!f) {
            std::cerr << "error: cannot write " << path << '\n';
            return 2;
        }
        f << out.report.dump(2) << '\n';
    }
    return out.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for dendriform D-bialgebras and Rota-Baxter operators"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "Write a JSON report to this path");

    Inputs in;
    std::function<Outcome(const Inputs&)> run;
    std::string command;
    auto bind = [&](CLI::App* sub, std::string name, Outcome (*fn)(const Inputs&)) {
        sub->callback([&, name, fn] {
            command = name;
            run = fn;
        });
    };

    CLI::App* check = app.add_subcommand("check", "Verify axioms")->require_subcommand(1);
    CLI::App* c_dend = check->add_subcommand("dendriform", "Dendriform axioms");
    c_dend->add_option("file", in.file)->required();
    bind(c_dend, "check dendriform", check_dendriform_cmd);
    CLI::App* c_bi = check->add_subcommand("d-bialgebra", "Compatibility of A with A*");
    c_bi->add_option("file", in.file)->required();
    c_bi->add_option("dual", in.file2)->required();
    bind(c_bi, "check d-bialgebra", check_d_bialgebra_cmd);
    CLI::App* c_qrb = check->add_subcommand("qrb", "Quadratic Rota-Baxter data");
    c_qrb->add_option("file", in.file)->required();
    c_qrb->add_option("--lambda", in.lambda);
    bind(c_qrb, "check qrb", check_qrb_cmd);

    auto with_r = [&](CLI::App* sub) {
        sub->add_option("file", in.file)->required();
        sub->add_option("--with-r", in.with_r, "File holding the 2-tensor");
    };
    CLI::App* cls = app.add_subcommand("classify", "Classify a 2-tensor");
    with_r(cls);
    bind(cls, "classify", classify_cmd);
    CLI::App* dual = app.add_subcommand("dual-products", "Products on A* induced by r");
    with_r(dual);
    bind(dual, "dual-products", dual_products_cmd);
    CLI::App* dbl = app.add_subcommand("double", "Dendriform double");
    with_r(dbl);
    bind(dbl, "double", double_cmd);
    CLI::App* fac = app.add_subcommand("factorize", "x = x+ - x-");
    with_r(fac);
    fac->add_option("--x", in.x, "Comma-separated coordinates")->required();
    bind(fac, "factorize", factorize_cmd);
    CLI::App* to_qrb = app.add_subcommand("to-qrb", "Factorizable r to quadratic Rota-Baxter data");
    with_r(to_qrb);
    to_qrb->add_option("--lambda", in.lambda);
    bind(to_qrb, "to-qrb", to_qrb_cmd);
    CLI::App* from_qrb = app.add_subcommand("from-qrb", "Quadratic Rota-Baxter data to r");
    from_qrb->add_option("file", in.file)->required();
    from_qrb->add_option("--lambda", in.lambda);
    bind(from_qrb, "from-qrb", from_qrb_cmd);
    CLI::App* sharp = app.add_subcommand("omega-sharp", "Regular to coregular isomorphism");
    sharp->add_option("file", in.file)->required();
    sharp->add_option("--lambda", in.lambda);
    bind(sharp, "omega-sharp", omega_sharp_cmd);

    CLI::App* search = app.add_subcommand("search", "Exhaustive search over GF(p)")->require_subcommand(1);
    CLI::App* s_d = search->add_subcommand("d-solutions", "Solutions of the D-equation");
    s_d->add_option("file", in.file)->required();
    s_d->add_option("--p", in.p)->required();
    bind(s_d, "search d-solutions", search_d_cmd);
    CLI::App* s_rb = search->add_subcommand("rb", "Rota-Baxter operators");
    s_rb->add_option("file", in.file)->required();
    s_rb->add_option("--p", in.p)->required();
    s_rb->add_option("--lambda", in.lambda)->required();
    bind(s_rb, "search rb", search_rb_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Outcome out = run(in);
        return finish(out, command, out_path);
    } catch (const PreconditionFailed& e) {
        Outcome out;
        out.ok = false;
        out.report["error"] = e.what();
        out.text << "precondition failed: " << e.what() << '\n';
        return finish(out, command, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
