#include <doctest.h>

#include <random>

#include "random_forms.hpp"
#include "vergne/algebra.hpp"
#include "vergne/errors.hpp"
#include "vergne/exterior.hpp"

using namespace vergne;

namespace {

Form f(std::string_view text, int n = 8) { return parse_form(text, n); }

}  // namespace

TEST_CASE("wedge products") {
    CHECK(wedge(f("e1"), f("e1^e5")).is_zero());
    const Form e2e5 = wedge(f("e2"), f("e5"));
    CHECK(to_string(e2e5) == "e2^e5");
    CHECK(e2e5.terms()[0].degree() == 7);
    CHECK(e2e5.terms()[0].top_degree() == 2);
    CHECK(wedge(f("e1 + e2"), f("e1 + e2")).is_zero());
    CHECK(wedge(Form::one(8), f("e3^e4")) == f("e3^e4"));
    CHECK_FALSE(wedge(Monomial::of({1, 3}), Monomial::of({3, 4})).has_value());
    CHECK_THROWS_AS((void)wedge(Form::generator(5, 1), Form::generator(6, 2)), AmbientMismatch);
}

TEST_CASE("degrees") {
    CHECK(degree(Monomial::of({1, 6})) == 7);
    CHECK(top_degree(Monomial::of({1, 6})) == 2);
    CHECK(degree(Monomial{}) == 0);
    CHECK(top_degree(Monomial{}) == 0);
    CHECK(degree(Monomial::of({2, 3, 4})) == 9);
    CHECK(top_degree(Monomial::of({2, 3, 4})) == 3);
}

TEST_CASE("canonical order") {
    CHECK(Monomial::of({5}) < Monomial::of({1, 2}));
    CHECK(Monomial::of({1, 6}) < Monomial::of({2, 3}));
    CHECK(Monomial::of({1, 3, 9}) < Monomial::of({1, 4, 5}));
    CHECK(to_string(f("e3^e4 + e1^e6 + e2")) == "e2 + e1^e6 + e3^e4");
}

TEST_CASE("bases") {
    const auto b = basis(3, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Monomial::of({1, 2}));
    CHECK(b[1] == Monomial::of({1, 3}));
    CHECK(b[2] == Monomial::of({2, 3}));

    const auto g = basis_graded(5, 2, 7);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Monomial::of({2, 5}));
    CHECK(g[1] == Monomial::of({3, 4}));

    const std::uint64_t binom[] = {1, 12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1};
    for (int k = 0; k <= 12; ++k) {
        const auto all = basis(12, k);
        CHECK(all.size() == binom[k]);
        CHECK(std::is_sorted(all.begin(), all.end()));
        std::size_t total = 0;
        for (const auto& [m, slice] : graded_slices(12, k)) {
            CHECK(m >= min_degree(12, k));
            CHECK(m <= max_degree(12, k));
            for (auto mono : slice) CHECK(mono.degree() == m);
            total += slice.size();
        }
        CHECK(total == binom[k]);
    }
    CHECK(basis(4, 5).empty());
}

TEST_CASE("derivations") {
    const auto d1 = operator_D1(8);
    CHECK(d1(f("e3^e4")) == f("e2^e4"));
    CHECK(d1(Form::one(8)).is_zero());
    CHECK(derivation(8, {})(Form::one(8)).is_zero());

    std::mt19937_64 rng(5);
    const auto d = differential(VergneAlgebra::m2(8));
    const auto d1sq = compose(d1, d1);
    for (int trial = 0; trial < 300; ++trial) {
        const Form a = testing::random_form(rng, 8);
        const Form b = testing::random_form(rng, 8);
        // Over GF(2) the Leibniz rule carries no signs.
        CHECK(d(wedge(a, b)) == wedge(d(a), b) + wedge(a, d(b)));
        CHECK(d1(wedge(a, b)) == wedge(d1(a), b) + wedge(a, d1(b)));
        // D1² is not a derivation; the cross terms double to 0 in char 2.
        CHECK(d1sq(wedge(a, b)) == wedge(d1sq(a), b) + wedge(a, d1sq(b)));
        CHECK(d(a + b) == d(a) + d(b));
    }
}

TEST_CASE("wedge is associative and bilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Form a = testing::random_form(rng, 9);
        const Form b = testing::random_form(rng, 9);
        const Form c = testing::random_form(rng, 9);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
        CHECK(wedge(a, b) == wedge(b, a));
        CHECK((a + a).is_zero());
    }
}

TEST_CASE("matrix_of") {
    const auto b3 = basis(3, 2);
    const auto zero = matrix_of(LinearOperator::zero(3), b3, basis(3, 3));
    CHECK(rank(zero) == 0);
    CHECK(zero.rows() == 1);
    CHECK(zero.cols() == 3);

    std::vector<Form> gens(4, Form(3));
    for (int i = 1; i <= 3; ++i) gens[i] = Form::generator(3, i);
    const auto id = matrix_of(derivation(3, gens), basis(3, 1), basis(3, 1));
    CHECK(id == BitMatrix::identity(3));

    const auto d0 = differential(VergneAlgebra::m0(5));
    const auto one = matrix_of(d0, basis_graded(5, 1, 4), basis_graded(5, 2, 4));
    REQUIRE(one.rows() == 1);
    REQUIRE(one.cols() == 1);
    CHECK(one.get(0, 0));

    CHECK_THROWS_AS((void)matrix_of(d0, basis_graded(5, 1, 4), basis_graded(5, 2, 5)),
                    ImageOutsideCodomain);
}

TEST_CASE("form syntax") {
    CHECK(to_string(Form(6)) == "0");
    CHECK(to_string(Form::one(6)) == "1");
    CHECK(parse_form("0", 6).is_zero());
    CHECK(parse_form(" e1 ^ e6+e3^e4 ", 6) == f("e1^e6 + e3^e4", 6));
    CHECK(parse_form("e1^e1", 6).is_zero());
    CHECK(parse_form("e2 + e2", 6).is_zero());
    CHECK_THROWS_AS((void)parse_form("", 6), ParseError);
    CHECK_THROWS_AS((void)parse_form("e7", 6), ParseError);
    CHECK_THROWS_AS((void)parse_form("e1 +", 6), ParseError);
    CHECK_THROWS_AS((void)parse_form("x1^e2", 6), ParseError);
    CHECK_THROWS_AS((void)parse_form("e1^^e2", 6), ParseError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const Form a = testing::random_form(rng, 14, 8);
        CHECK(parse_form(to_string(a), 14) == a);
    }
}

TEST_CASE("ambient limits") {
    CHECK_NOTHROW(Form(64, Monomial::generator(64)));
    CHECK_THROWS_AS(Form(65), InvalidArgument);
    CHECK_THROWS_AS(Form(5, Monomial::generator(6)), InvalidArgument);
    CHECK(Monomial::generator(64).degree() == 64);
    CHECK(Monomial::generator(64).max_index() == 64);
}
