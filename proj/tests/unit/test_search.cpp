#include "doctest.h"
#include "support.hpp"

#include "dendri/errors.hpp"
#include "dendri/rota_baxter.hpp"
#include "dendri/search.hpp"

#include <algorithm>
#include <set>

using namespace dendri;

namespace {

// All 2×2 matrices over GF(p) in lexicographic order, built by nested loops.
std::vector<Matrix> all_2x2(const Field& f) {
    std::vector<Matrix> out;
    const long long p = f.modulus();
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c)
                for (long long d = 0; d < p; ++d) out.push_back(fx::mat(2, 2, {a, b, c, d}, f));
    return out;
}

// r12∗r13 − r13≺r23 − r23≻r12 summed term by term over pairs of simple tensors.
Tensor3 naive_defect(const DendriformAlgebra& a, const Matrix& r) {
    const std::size_t n = a.dim;
    Tensor3 out(a.field, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t) {
                    const Scalar w = r.at(p, q) * r.at(s, t);
                    if (w.is_zero()) continue;
                    const Vector star = a.star(a.e(p), a.e(s));
                    const Vector pr = a.left(a.e(q), a.e(t));
                    const Vector su = a.right(a.e(p), a.e(t));
                    for (std::size_t k = 0; k < n; ++k) {
                        out.at(k, q, t) += w * star[k];
                        out.at(p, s, k) -= w * pr[k];
                        out.at(s, k, q) -= w * su[k];
                    }
                }
    return out;
}

std::string key(const Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j).to_string() + ",";
    return s;
}

}  // namespace

TEST_CASE("search space layout") {
    const Field f = Field::prime(3);
    SearchSpace space{fx::e1(f)};
    CHECK(space.size() == 81);
    CHECK(space.candidate(0).is_zero());
    CHECK(space.candidate(1) == fx::mat(2, 2, {0, 0, 0, 1}, f));
    CHECK(space.candidate(27) == fx::mat(2, 2, {1, 0, 0, 0}, f));
    const auto all = all_2x2(f);
    for (std::uint64_t i = 0; i < 81; ++i) CHECK(space.candidate(i) == all[i]);

    space.shape = Shape::skew;
    CHECK(space.size() == 3);
    CHECK(space.candidate(2) == fx::mat(2, 2, {0, 2, 1, 0}, f));
    space.shape = Shape::symmetric;
    CHECK(space.size() == 27);
    space.fixed[{0, 0}] = Scalar(f, 1);
    CHECK(space.size() == 9);
    CHECK(space.candidate(0).at(0, 0) == Scalar(f, 1));

    SearchSpace big{DendriformAlgebra::zero(Field::prime(5), 4)};
    CHECK_THROWS_AS(big.size(), PreconditionFailed);
    big.cap = 1ull << 40;
    CHECK(big.size() == 152587890625ull);
    CHECK_THROWS_AS(SearchSpace{fx::e1()}.size(), PreconditionFailed);
    CHECK_THROWS_AS(SearchSpace{fx::e1(Field::prime(2))}.size(), PreconditionFailed);
}

TEST_CASE("operator-composition defect agrees with the index formula") {
    const Field f5 = Field::prime(5);
    const DendriformAlgebra a = fx::e1(f5);
    std::mt19937 g(99);
    for (int t = 0; t < 1000; ++t) {
        const TwoTensor r(fx::random_matrix(g, f5, 2, 2, 0, 4));
        const Tensor3 d = d_equation_defect(a, r);
        CHECK(d == oracle_defect(a, r));
        CHECK(d == naive_defect(a, r.coeff));
    }
    const DendriformAlgebra q = fx::e1();
    CHECK(oracle_defect(q, fx::r21()).is_zero());
    CHECK(oracle_defect(q, TwoTensor::zero(q.field, 2)).is_zero());
    const TwoTensor diag(fx::mat(2, 2, {1, 0, 0, 1}));
    CHECK(oracle_defect(q, diag) == d_equation_defect(q, diag));
    CHECK_FALSE(oracle_defect(q, diag).is_zero());

    // The 4-dim double over Q with random integer r.
    const DendriformAlgebra dbl = dendriform_double(q, dual_products(q, fx::r21())).algebra;
    for (int t = 0; t < 20; ++t) {
        const TwoTensor r(fx::random_matrix(g, q.field, 4, 4));
        CHECK(oracle_defect(dbl, r) == d_equation_defect(dbl, r));
    }
}

TEST_CASE("D-equation solutions over GF(3) are exhaustive") {
    const Field f = Field::prime(3);
    const DendriformAlgebra a = fx::e1(f);
    const DSearchResult res = enumerate_d_solutions(a, 3);
    CHECK(res.scanned == 81);
    CHECK(res.oracle_disagreements == 0);

    std::vector<std::string> expected;
    for (const Matrix& m : all_2x2(f))
        if (naive_defect(a, m).is_zero()) expected.push_back(key(m));
    std::vector<std::string> got;
    for (const auto& s : res.solutions) got.push_back(key(s.r.coeff));
    CHECK(got == expected);

    REQUIRE_FALSE(res.solutions.empty());
    CHECK(res.solutions.front().r.coeff.is_zero());
    CHECK(res.solutions.front().classification.kind == RClass::triangular);

    bool found_r21 = false;
    for (const auto& s : res.solutions) {
        CHECK(s.classification.kind == classify(a, s.r).kind);
        if (s.r.coeff == fx::r21(f).coeff) {
            found_r21 = true;
            CHECK(s.classification.kind == RClass::factorizable);
        }
    }
    CHECK(found_r21);
}

TEST_CASE("sharding does not change the result") {
    const Field f = Field::prime(5);
    const DendriformAlgebra a = fx::e1(f);
    const DSearchResult one = enumerate_d_solutions(a, 1);
    for (unsigned t : {2u, 3u, 7u, 64u}) {
        const DSearchResult many = enumerate_d_solutions(a, t);
        REQUIRE(many.solutions.size() == one.solutions.size());
        for (std::size_t i = 0; i < one.solutions.size(); ++i) {
            CHECK(many.solutions[i].r.coeff == one.solutions[i].r.coeff);
            CHECK(many.solutions[i].classification.kind == one.solutions[i].classification.kind);
        }
        CHECK(enumerate_rb(a, Scalar(f, 1), t) == enumerate_rb(a, Scalar(f, 1), 1));
    }
}

TEST_CASE("Rota-Baxter operators over GF(3)") {
    const Field f = Field::prime(3);
    const DendriformAlgebra a = fx::e1(f);
    for (long long l : {0, 1, 2}) {
        const Scalar lambda(f, l);
        const std::vector<Matrix> ops = enumerate_rb(a, lambda);
        std::set<std::string> keys;
        for (const Matrix& p : ops) keys.insert(key(p));

        std::vector<std::string> expected;
        for (const Matrix& p : all_2x2(f))
            if (check_rb(a, p, lambda).ok()) expected.push_back(key(p));
        std::vector<std::string> got;
        for (const Matrix& p : ops) got.push_back(key(p));
        CHECK(got == expected);

        CHECK(keys.count(key(Matrix(f, 2, 2))));
        CHECK(keys.count(key(-(lambda * Matrix::identity(f, 2)))));
        for (const Matrix& p : ops) CHECK(keys.count(key(rb_tilde(p, lambda))));
        if (l == 1) CHECK(keys.count(key(fx::mat(2, 2, {0, 0, 0, -1}, f))));
    }
}

TEST_CASE("reduction modulo p") {
    CHECK(reduce_mod(fx::q(-3, 6), 5) == Scalar(Field::prime(5), 2));
    CHECK_THROWS_AS(reduce_mod(fx::q(1, 5), 5), std::invalid_argument);
    const DendriformAlgebra a = reduce_mod(fx::e1(), 3);
    CHECK(a.prec == fx::e1(Field::prime(3)).prec);
    CHECK(a.succ == fx::e1(Field::prime(3)).succ);
    CHECK(reduce_mod(fx::r21().coeff, 3) == fx::r21(Field::prime(3)).coeff);
}

TEST_CASE("search rejects bad input") {
    CHECK_THROWS_AS(enumerate_d_solutions(fx::e1()), PreconditionFailed);
    DendriformAlgebra bad = fx::e1(Field::prime(3));
    bad.succ.at(0, 0, 0) = Scalar(Field::prime(3), 1);
    CHECK_THROWS_AS(enumerate_rb(bad, Scalar(Field::prime(3), 1)), PreconditionFailed);
    CHECK_THROWS_AS(enumerate_rb(fx::e1(Field::prime(3)), Scalar(Field::prime(5), 1)), FieldMismatch);
}
