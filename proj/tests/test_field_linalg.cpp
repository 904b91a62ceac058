#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnorm/linalg.hpp"
#include "gnorm/rng.hpp"
#include "test_support.hpp"

using namespace gnorm;
using namespace gnorm::testing;

TEST_CASE("valuation basics") {
    CHECK(*t_elem().val() == 1);
    CHECK(!FieldElem::zero().val().has_value());

    FieldElem x = fe("1*u^2+1*u^3") / fe("1*u^0+-1*u^1");  // (t^2+t^3)/(1-t)
    CHECK(*x.val() == 2);

    CHECK((t_elem() + (-t_elem())).is_zero());

    FieldElem half = FieldElem::t_power(make_rat(1, 2), 2);
    CHECK(half * half == t_elem(2));
    CHECK(*(half * half).val() == 1);

    FieldElem inv = fe("1*u^0+-1*u^1").inv();
    CHECK(*inv.val() == 0);
    CHECK_THROWS_AS(FieldElem::zero().inv(), std::domain_error);
}

TEST_CASE("ramification") {
    FieldElem r = t_elem().ramify(2);
    CHECK(r.ramification() == 2);
    CHECK(r.num().ord == 2);  // u^2 with u = t^{1/2}
    CHECK(*r.val() == 1);

    CHECK(FieldElem::one().ramify(5) == FieldElem::one(5));

    Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
        FieldElem x = rng.field_elem(1);
        long m = rng.uniform(1, 6);
        CHECK(x.ramify(m).val() == x.val());
    }
}

TEST_CASE("ultrametric and multiplicativity on seeded pairs") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        FieldElem x = rng.field_elem(rng.uniform(1, 3));
        FieldElem y = rng.field_elem(rng.uniform(1, 3));
        ValOrInf vs = (x + y).val();
        ValOrInf lo = val_min(x.val(), y.val());
        CHECK(val_le(lo, vs));
        if (x.val() != y.val()) CHECK(vs == lo);
        CHECK((x * y).val() == val_add(x.val(), y.val()));
    }
}

TEST_CASE("field element text round-trip") {
    Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        long ram = rng.uniform(1, 4);
        FieldElem x = rng.field_elem(ram) / rng.field_elem(ram);
        std::string s = x.to_string();
        FieldElem y = FieldElem::from_string(s, ram);
        CHECK(x == y);
        CHECK(y.to_string() == s);
    }
    CHECK(fe("0*u^0").is_zero());
}

TEST_CASE("solve_in_basis") {
    Matrix id = Matrix::identity(3);
    std::vector<FieldElem> v = {fe("2*u^1"), fe("1*u^0"), fe("-1*u^-1")};
    CHECK(solve_in_basis(id, v) == v);

    Matrix b(2, 2);
    b.at(0, 0) = FieldElem::one();
    b.at(1, 0) = t_elem();
    b.at(1, 1) = FieldElem::one();
    std::vector<FieldElem> rhs = {FieldElem::zero(), FieldElem::one()};
    std::vector<FieldElem> x = solve_in_basis(b, rhs);
    CHECK(x[0].is_zero());
    CHECK(x[1] == FieldElem::one());

    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        int d = static_cast<int>(rng.uniform(1, 4));
        Matrix m = random_invertible(rng, d);
        std::vector<FieldElem> w = random_vector(rng, d);
        CHECK(mat_vec(m, solve_in_basis(m, w)) == w);
    }

    Matrix sing(2, 2);
    sing.at(0, 0) = FieldElem::one();
    sing.at(1, 0) = FieldElem::one();
    CHECK_THROWS_AS(solve_in_basis(sing, rhs), std::domain_error);
}

TEST_CASE("weighted invariants: pinned examples") {
    std::vector<Rat> z2 = {Rat(0), Rat(0)};

    CHECK(weighted_invariants(Matrix::identity(2), z2, z2) == std::vector<Rat>{Rat(0), Rat(0)});

    Matrix d(2, 2);
    d.at(0, 0) = t_elem();
    d.at(1, 1) = fe("1*u^3");
    CHECK(weighted_invariants(d, z2, z2) == std::vector<Rat>{Rat(1), Rat(3)});

    Matrix m(2, 2);
    m.at(0, 0) = FieldElem::one();
    m.at(0, 1) = FieldElem::one();
    m.at(1, 0) = FieldElem::one();
    m.at(1, 1) = FieldElem::one() + t_elem();
    CHECK(weighted_invariants(m, z2, z2) == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("weighted invariants: dual route and sum identity on 200 seeded matrices") {
    Rng rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        int d = static_cast<int>(rng.uniform(1, 6));
        Matrix t = random_invertible(rng, d);
        std::vector<Rat> rs = random_weights(rng, d), cs = random_weights(rng, d);

        std::vector<Rat> byElim = weighted_invariants_elimination(t, rs, cs);
        std::vector<Rat> byMinors = weighted_invariants_minors(t, rs, cs);
        CHECK(byElim == byMinors);

        Rat sum(0);
        for (const Rat& s : byElim) sum += s;
        Rat expected = *det_laplace(t).val();
        for (const Rat& s : rs) expected += s;
        for (const Rat& s : cs) expected += s;
        CHECK(sum == expected);
    }
}

TEST_CASE("weighted invariants: inverse antisymmetry") {
    Rng rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        int d = static_cast<int>(rng.uniform(1, 4));
        Matrix t = random_invertible(rng, d);
        std::vector<Rat> rs = random_weights(rng, d), cs = random_weights(rng, d);
        std::vector<Rat> base = weighted_invariants(t, rs, cs);

        // swapped shifts with negated signs on T^{-1}: negated reversed list
        std::vector<Rat> nrs, ncs;
        for (const Rat& x : cs) nrs.push_back(-x);
        for (const Rat& x : rs) ncs.push_back(-x);
        std::vector<Rat> invs = weighted_invariants(inverse(t), nrs, ncs);
        std::vector<Rat> expect;
        for (auto it = base.rbegin(); it != base.rend(); ++it) expect.push_back(-*it);
        CHECK(invs == expect);
    }
}

TEST_CASE("column reduction spans an orthogonal family") {
    Rng rng(4242);
    for (int iter = 0; iter < 40; ++iter) {
        int rows = static_cast<int>(rng.uniform(2, 5));
        int cols = static_cast<int>(rng.uniform(1, 6));
        Matrix fam(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng.uniform(0, 2) > 0) fam.at(i, j) = rng.field_elem(1);
        ColumnReduction red = column_reduce(fam);
        CHECK(red.basis.cols <= std::min(rows, cols));
        // pivot rows distinct, pivot valuations non-decreasing
        for (std::size_t a = 0; a < red.pivot_rows.size(); ++a)
            for (std::size_t b = a + 1; b < red.pivot_rows.size(); ++b)
                CHECK(red.pivot_rows[a] != red.pivot_rows[b]);
        CHECK(std::is_sorted(red.pivot_vals.begin(), red.pivot_vals.end()));
    }
}
