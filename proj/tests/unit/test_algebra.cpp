#include "doctest.h"
#include "support.hpp"

#include "dendri/errors.hpp"

using namespace dendri;

TEST_CASE("zero products are dendriform") {
    CHECK(check_dendriform(DendriformAlgebra::zero(Field::rational(), 3)).ok());
}

TEST_CASE("reference algebra is dendriform") {
    CHECK(check_dendriform(fx::e1()).ok());
    CHECK(check_dendriform(fx::e1(Field::prime(3))).ok());
}

TEST_CASE("changing e2≺e1 to e1 breaks axiom 1") {
    DendriformAlgebra a = fx::e1();
    a.prec.at(1, 0, 1) = fx::q(0);
    a.prec.at(1, 0, 0) = fx::q(1);
    auto axiom1 = [&](std::size_t i, std::size_t j, std::size_t k) {
        const Vector x = a.e(i), y = a.e(j), z = a.e(k);
        return sub(a.left(a.left(x, y), z), a.left(x, add(a.left(y, z), a.right(y, z))));
    };
    const CheckReport rep = check_dendriform(a);
    CHECK_FALSE(rep.ok());
    std::vector<std::vector<std::size_t>> expected;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                if (!is_zero(axiom1(i, j, k))) expected.push_back({i, j, k});
    std::vector<std::vector<std::size_t>> reported;
    for (const auto& v : rep.violations) {
        if (v.identity != "axiom1") continue;
        reported.push_back(v.witness);
        CHECK(v.defect == axiom1(v.witness[0], v.witness[1], v.witness[2]));
    }
    CHECK(reported == expected);
    // (e1,e2,e1): (e1≺e2)≺e1 = 0 while e1≺(e2≺e1 + e2≻e1) = e1≺(e1 − e2) = e1.
    REQUIRE_FALSE(reported.empty());
    CHECK(reported.front() == std::vector<std::size_t>{0, 1, 0});
    CHECK(rep.violations.front().defect == fx::vec({-1, 0}));
    // The triple (e2,e1,e1) satisfies axiom 1 in this algebra.
    CHECK(is_zero(axiom1(1, 0, 0)));
}

TEST_CASE("violations are listed in lexicographic order") {
    DendriformAlgebra a = fx::e1();
    a.succ.at(0, 0, 0) = fx::q(3);
    const CheckReport rep = check_dendriform(a);
    REQUIRE_FALSE(rep.ok());
    for (std::size_t i = 1; i < rep.violations.size(); ++i) {
        const auto& p = rep.violations[i - 1];
        const auto& c = rep.violations[i];
        CHECK((p.identity < c.identity || (p.identity == c.identity && p.witness < c.witness)));
    }
}

TEST_CASE("sub-adjacent product") {
    const DendriformAlgebra a = fx::e1();
    const AssociativeAlgebra b = sub_adjacent(a);
    CHECK(check_associative(b).ok());
    Tensor3 expected(Field::rational(), 2);
    expected.at(0, 0, 0) = fx::q(1);
    expected.at(0, 1, 1) = fx::q(1);
    CHECK(b.mult == expected);
    // e2∗e1 = e2 + (−e2).
    CHECK(is_zero(b.mul(a.e(1), a.e(0))));

    const AssociativeAlgebra z = sub_adjacent(DendriformAlgebra::zero(Field::rational(), 2));
    CHECK(z.mult.is_zero());

    DendriformAlgebra bad = a;
    bad.succ.at(0, 0, 0) = fx::q(3);
    CHECK_THROWS_AS(sub_adjacent(bad), PreconditionFailed);
}

TEST_CASE("multiplication operators") {
    const DendriformAlgebra a = fx::e1();
    const MultOperators zero = mult_operators(a, fx::vec({0, 0}));
    CHECK(zero.l_succ.is_zero());
    CHECK(zero.r_star.is_zero());

    const MultOperators m = mult_operators(a, a.e(0));
    // L≺(e1): e1 ↦ e1≺e1 = e1, e2 ↦ e1≺e2 = 0.
    CHECK(m.l_prec == fx::mat(2, 2, {1, 0, 0, 0}));
    // R≺(e1): e1 ↦ e1≺e1 = e1, e2 ↦ e2≺e1 = e2.
    CHECK(m.r_prec == fx::mat(2, 2, {1, 0, 0, 1}));
    CHECK_THROWS_AS(mult_operators(a, fx::vec({1, 0, 0})), DimensionMismatch);
}

TEST_CASE("operator identities on basis elements") {
    const DendriformAlgebra a = fx::e1();
    for (std::size_t i = 0; i < 2; ++i) {
        const MultOperators m = mult_operators(a, a.e(i));
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(m.l_star.apply(a.e(j)) == a.star(a.e(i), a.e(j)));
            // ⟨L≺(x)ᵀ ξ, y⟩ = ⟨ξ, x≺y⟩
            for (std::size_t k = 0; k < 2; ++k) {
                CHECK(transpose(m.l_prec).apply(a.e(k))[j] == a.left(a.e(i), a.e(j))[k]);
            }
        }
    }
}

TEST_CASE("pre-Lie and Lie converters") {
    const DendriformAlgebra a = fx::e1();
    const Tensor3 star = to_pre_lie(a);
    CHECK(check_pre_lie(star).ok());
    CHECK(multiply(star, a.e(0), a.e(0)) == fx::vec({-1, 0}));
    CHECK(multiply(star, a.e(0), a.e(1)) == fx::vec({0, 0}));
    CHECK(to_pre_lie(DendriformAlgebra::zero(Field::rational(), 2)).is_zero());

    const Tensor3 br = to_lie(sub_adjacent(a));
    CHECK(check_lie(br).ok());
    CHECK(multiply(br, a.e(0), a.e(1)) == fx::vec({0, 1}));
    for (std::size_t i = 0; i < 2; ++i) CHECK(is_zero(multiply(br, a.e(i), a.e(i))));

    AssociativeAlgebra comm{Field::rational(), 2, Tensor3(Field::rational(), 2)};
    comm.mult.at(0, 0, 0) = fx::q(1);
    comm.mult.at(0, 1, 1) = fx::q(1);
    comm.mult.at(1, 0, 1) = fx::q(1);
    CHECK(to_lie(comm).is_zero());
}

TEST_CASE("axioms checked on random algebras over GF(3) imply associativity") {
    // Every 2-dim dendriform algebra found by sampling has an associative sub-adjacent algebra.
    const Field f = Field::prime(3);
    std::mt19937 g(11);
    std::uniform_int_distribution<int> d(0, 2);
    int found = 0;
    for (int t = 0; t < 4000 && found < 30; ++t) {
        DendriformAlgebra a = DendriformAlgebra::zero(f, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k) {
                    a.prec.at(i, j, k) = Scalar(f, t % 3 == 0 ? 0 : d(g));
                    a.succ.at(i, j, k) = Scalar(f, t % 5 == 0 ? 0 : d(g));
                }
        if (!check_dendriform(a).ok()) continue;
        ++found;
        CHECK(check_associative(sub_adjacent(a)).ok());
        CHECK(check_pre_lie(to_pre_lie(a)).ok());
    }
    CHECK(found > 0);
}
