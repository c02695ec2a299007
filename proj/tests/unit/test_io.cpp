#include "doctest.h"
#include "support.hpp"

#include "dendri/errors.hpp"
#include "dendri/io.hpp"
#include "dendri/rota_baxter.hpp"

#include <fstream>
#include <sstream>

using namespace dendri;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(DENDRI_FIXTURES) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Line and column of the ParseError raised by text.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

}  // namespace

TEST_CASE("fixture parses to the reference data") {
    const Document doc = read_document(std::string(DENDRI_FIXTURES) + "/e1.alg");
    const DendriformAlgebra a = doc.algebra();
    CHECK(a.prec == fx::e1().prec);
    CHECK(a.succ == fx::e1().succ);
    CHECK(a.basis == std::vector<std::string>{"e1", "e2"});
    CHECK(doc.operator_matrix() == fx::mat(2, 2, {0, 0, 0, -1}));
    CHECK(doc.form_matrix() == fx::mat(2, 2, {0, 1, -1, 0}));
    CHECK(doc.weight() == fx::q(1));
    CHECK_THROWS_AS(doc.two_tensor(), MissingData);
    CHECK_THROWS_AS(doc.representation(), MissingData);

    const Document t = read_document(std::string(DENDRI_FIXTURES) + "/r21.tensor");
    CHECK(t.two_tensor().coeff == fx::r21().coeff);
}

TEST_CASE("canonical round trip") {
    for (const char* name : {"e1.alg", "r21.tensor", "e1_dual.alg"}) {
        const std::string text = slurp(name);
        const Document doc = parse_document(text);
        CHECK(serialize(doc) == text);
        CHECK(parse_document(serialize(doc)) == doc);
    }
    // Non-canonical input: comment, missing basis, unsorted entries.
    const Document broken = parse_document(slurp("broken.alg"));
    const std::string canon = serialize(broken);
    CHECK(canon != slurp("broken.alg"));
    CHECK(serialize(parse_document(canon)) == canon);
    CHECK(parse_document(canon) == broken);
}

TEST_CASE("values are normalized exactly") {
    const Document q = parse_document("field rational\ndim 1\nprec 1 1 1 \xE2\x88\x92" "3/6\n");
    CHECK(q.prec.at(0, 0, 0) == fx::q(-1, 2));
    CHECK(serialize(q).find("prec 1 1 1 -1/2\n") != std::string::npos);
    const Document g = parse_document("field gf 3\ndim 1\nsucc 1 1 1 5\n");
    CHECK(serialize(g) == "field gf 3\ndim 1\nbasis e1\nsucc 1 1 1 2\n");
    const Document z = parse_document("field rational\ndim 1\nprec 1 1 1 0\n");
    CHECK(serialize(z) == "field rational\ndim 1\nbasis e1\n");
}

TEST_CASE("representations and operators round trip") {
    const DendriformAlgebra a = fx::e1();
    Document doc = to_document(a);
    const DendriformRep rep = coregular_rep(a);
    doc.rep_dim = 2;
    doc.rep = rep.maps;
    doc.rep_t = coregular_rb_operator(fx::mat(2, 2, {0, 0, 0, -1}), fx::q(1));
    doc.op = fx::mat(2, 2, {1, 2, 3, 4});
    const Document back = parse_document(serialize(doc));
    CHECK(back == doc);
    CHECK(check_representation(back.representation()).ok());
    // operator j k v: P(e_j) has e_k-coefficient v.
    CHECK(serialize(doc).find("operator 1 2 3\n") != std::string::npos);
}

TEST_CASE("malformed input reports line and column") {
    CHECK(error_at("field rational\ndim 2\nprec 1 1 3 1\n") == std::pair<std::size_t, std::size_t>{3, 10});
    CHECK(error_at("field rational\ndim 2\nprec 1 1 1 x\n") == std::pair<std::size_t, std::size_t>{3, 12});
    CHECK(error_at("field gf 3\ndim 1\n  r 1 1 1/3\n") == std::pair<std::size_t, std::size_t>{3, 9});
    CHECK(error_at("field rational\ndim 2\nwibble 1\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(error_at("field rational\nprec 1 1 1 1\n").first == 2);
    CHECK(error_at("field rational\ndim 2\nr 1 1 1\nr 1 1 2\n").first == 4);
    CHECK(error_at("dim 2\nfield rational\n").first == 2);
    CHECK(error_at("field gf 9\n") == std::pair<std::size_t, std::size_t>{1, 10});
    CHECK(error_at("field rational\ndim 2\nbasis a a\n") == std::pair<std::size_t, std::size_t>{3, 9});
    CHECK(error_at("field rational\ndim 2\nprec 1 1 1\n").first == 3);
    CHECK(error_at("field rational\ndim 2\nrep l_succ 1 1 1 1\n").first == 3);
    CHECK(error_at("field rational\ndim 2\nrep-dim 1\nrep l_star 1 1 1 1\n") == std::pair<std::size_t, std::size_t>{4, 5});
    CHECK(error_at("field rational # trailing comment\ndim 1\n") == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("derived objects re-parse and pass their checks") {
    const DendriformAlgebra a = fx::e1();
    const DendriformAlgebra dual = dual_products(a, fx::r21());
    const Document d = parse_document(serialize(to_document(dual)));
    CHECK(check_dendriform(d.algebra()).ok());
    CHECK(check_d_bialgebra(a, d.algebra()).ok());

    const DoubleResult dbl = dendriform_double(a, dual);
    Document dd = to_document(dbl.algebra);
    dd.r = dbl.r.coeff;
    const Document back = parse_document(serialize(dd));
    CHECK(classify(back.algebra(), back.two_tensor()).kind == RClass::factorizable);

    const QuadraticRB q = factorizable_to_qrb(a, fx::r21(), fx::q(2));
    Document qd = to_document(a);
    qd.op = q.p;
    qd.form = q.omega;
    qd.lambda = fx::q(2);
    const Document qb = parse_document(serialize(qd));
    CHECK(check_quadratic_rb(qb.algebra(), qb.operator_matrix(), qb.form_matrix(), qb.weight()).ok());
}

TEST_CASE("report JSON") {
    DendriformAlgebra a = fx::e1();
    a.prec.at(1, 0, 1) = fx::q(0);
    a.prec.at(1, 0, 0) = fx::q(1);
    const CheckReport rep = check_dendriform(a);
    const nlohmann::json j = report_json(rep);
    CHECK(j["ok"] == false);
    REQUIRE(j["violations"].size() == rep.violations.size());
    CHECK(j["violations"][0]["identity"] == "axiom1");
    CHECK(j["violations"][0]["witness"] == nlohmann::json::array({1, 2, 1}));
    CHECK(j["violations"][0]["defect"] == nlohmann::json::array({"-1", "0"}));
    CHECK(report_json(CheckReport{})["ok"] == true);
}

TEST_CASE("vectors on the command line") {
    CHECK(parse_vector(Field::rational(), "1,-2/4,3") == Vector{fx::q(1), fx::q(-1, 2), fx::q(3)});
    CHECK(format_vector(Vector{fx::q(1), fx::q(-1, 2)}) == "1,-1/2");
    CHECK_THROWS_AS(parse_vector(Field::rational(), "1,,2"), std::invalid_argument);
}
