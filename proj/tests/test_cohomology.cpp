#include <doctest.h>

#include <thread>

#include "oracle.hpp"
#include "vergne/classifier.hpp"
#include "vergne/cohomology.hpp"

using namespace vergne;

namespace {

using Betti = std::vector<std::uint64_t>;

VergneAlgebra from(std::string_view row) { return VergneAlgebra::from_row(RowVector::parse(row)); }

// Frozen from a full, ungraded Chevalley–Eilenberg rank computation written
// independently of this library.
const std::vector<std::pair<std::string, Betti>>& frozen() {
    static const std::vector<std::pair<std::string, Betti>> table = {
        {"[0,0,0,0]", {1, 2, 3, 3, 2, 1}},
        {"[0,1,0,0]", {1, 2, 3, 3, 2, 1}},
        {"[0,0,0,0,0]", {1, 2, 3, 4, 3, 2, 1}},
        {"[0,0,0,0,0,0]", {1, 2, 4, 7, 7, 4, 2, 1}},
        {"[0,0,0,1,0,0]", {1, 2, 3, 6, 6, 3, 2, 1}},
        {"[0,1,1,0,0,0]", {1, 2, 3, 6, 6, 3, 2, 1}},
        {"[0,0,0,0,0,0,0]", {1, 2, 4, 10, 14, 10, 4, 2, 1}},
        {"[0,0,0,1,0,0,0]", {1, 2, 3, 8, 12, 8, 3, 2, 1}},
        {"[0,0,0,0,0,0,0,0]", {1, 2, 5, 11, 21, 21, 11, 5, 2, 1}},
        {"[0,0,0,0,0,0,0,0,0]", {1, 2, 5, 12, 22, 28, 22, 12, 5, 2, 1}},
        {"[0,0,0,0,0,0,0,0,0,0]", {1, 2, 6, 15, 28, 40, 40, 28, 15, 6, 2, 1}},
        {"[0,0,0,0,0,0,0,0,0,0,0]", {1, 2, 6, 18, 39, 60, 68, 60, 39, 18, 6, 2, 1}},
        {"[0,0,0,1,0,0,1,1,0,0,0]", {1, 2, 4, 14, 29, 37, 38, 37, 29, 14, 4, 2, 1}},
    };
    return table;
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("cocycle dimensions") {
    const auto m0 = VergneAlgebra::m0(5);
    CHECK(cocycle_dim(m0, 0) == 1);
    CHECK(cocycle_dim(m0, 1) == 2);
    CHECK(cocycle_dim(m0, 2) == 6);
    CHECK(cocycle_dim(m0, 5) == 1);
    CHECK(cocycle_dim(VergneAlgebra::m2(9), 0) == 1);
    CHECK_THROWS_AS((void)cocycle_dim(m0, 6), InvalidArgument);
    CHECK_THROWS_AS((void)cocycle_dim(m0, -1), InvalidArgument);

    const auto t = betti(VergneAlgebra::m0(7));
    CHECK(t.cocycle_dims == Betti{1, 2, 9, 19, 23, 16, 7, 1});
}

TEST_CASE("sliced cocycle dims equal the unsliced matrix") {
    for (int n = 5; n <= 8; ++n)
        for (const auto& g : enumerate(n))
            for (int k = 0; k <= n; ++k) CHECK(cocycle_dim(g, k) == cocycle_dim_full(g, k));
}

TEST_CASE("graded Betti numbers") {
    const auto m0 = VergneAlgebra::m0(5);
    CHECK(graded_betti(m0, 0, 0) == 1);
    CHECK(graded_betti(m0, 1, 1) == 1);
    CHECK(graded_betti(m0, 1, 2) == 1);
    for (int m = 3; m <= 5; ++m) CHECK(graded_betti(m0, 1, m) == 0);
    CHECK(graded_betti(m0, 2, 99) == 0);

    const auto m2 = VergneAlgebra::m2(7);
    std::uint64_t sum = 0;
    for (int m = min_degree(7, 2); m <= max_degree(7, 2); ++m) sum += graded_betti(m2, 2, m);
    CHECK(sum == 4);
    CHECK(betti(m2).betti[2] == 4);
}

TEST_CASE("Betti numbers match frozen reference values") {
    for (const auto& [row, expected] : frozen()) {
        CAPTURE(row);
        CHECK(betti(from(row)).betti == expected);
    }
    for (int n = 5; n <= 12; ++n) {
        CAPTURE(n);
        const auto b0 = betti(VergneAlgebra::m0(n)).betti;
        CHECK(b0 == betti(VergneAlgebra::m2(n)).betti);
        CHECK(b0[1] == 2);
        CHECK(b0[2] == static_cast<std::uint64_t>((n + 1) / 2));
    }
}

TEST_CASE("Betti numbers match the independent complex for every algebra up to 12") {
    for (int n = 5; n <= 12; ++n)
        for (const auto& g : enumerate(n)) {
            std::vector<int> r(static_cast<std::size_t>(n) + 1, 0);
            for (int j = 2; j <= n; ++j) r[static_cast<std::size_t>(j)] = g.row().at(j);
            const auto cx = oracle::build(n, oracle::complete(n, r));
            CAPTURE(g.row().to_string());
            CHECK(betti(g).betti == oracle::betti(cx));
        }
}

TEST_CASE("tables are internally consistent and Poincaré symmetric") {
    for (int n = 5; n <= 12; ++n)
        for (const auto& g : enumerate(n)) {
            const auto t = betti(g);
            CAPTURE(g.row().to_string());
            CHECK(consistency_errors(t).empty());
            for (int k = 0; k <= n; ++k) CHECK(t.betti[k] == t.betti[n - k]);
        }

    BettiTable broken = betti(VergneAlgebra::m0(5));
    broken.betti[3] += 1;
    CHECK_FALSE(consistency_errors(broken).empty());
}

TEST_CASE("shared Cohomology object is thread safe") {
    const Cohomology c(VergneAlgebra::m2(10));
    std::vector<std::uint64_t> results(8);
    {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < results.size(); ++w)
            workers.emplace_back([&, w] { results[w] = c.cocycle_dim(static_cast<int>(w % 4) + 3); });
    }
    for (std::size_t w = 0; w < results.size(); ++w)
        CHECK(results[w] == cocycle_dim(VergneAlgebra::m2(10), static_cast<int>(w % 4) + 3));
    CHECK(c.betti() == betti(VergneAlgebra::m2(10)));
}

TEST_CASE("commuting squares") {
    for (int n = 5; n <= 12; ++n) {
        const auto m0 = VergneAlgebra::m0(n), m2 = VergneAlgebra::m2(n);
        for (int k = 2; k <= n; ++k) {
            CHECK(verify_commuting_square(m0, m2, k));
            CHECK(verify_commuting_square(m2, m0, k));
        }
    }
    const auto g71 = from("[0,0,0,1,0,0]"), h71 = from("[0,1,1,0,0,0]");
    for (int k = 2; k <= 6; ++k) CHECK(verify_commuting_square(g71, h71, k));

    // f does not commute with d0 itself: the e2∧D1 correction survives.
    const auto m0 = VergneAlgebra::m0(7);
    CHECK_FALSE(verify_commuting_square(m0, m0, 2));
    const auto witness = commuting_square_counterexample(m0, m0, 2);
    REQUIRE(witness.has_value());
    const Form h(7, *witness);
    CHECK(differential(m0)(involution_f(7, h)) != involution_f(7, differential(m0)(h)));
    const Form e5e6 = parse_form("e5^e6", 7);
    CHECK(differential(m0)(involution_f(7, e5e6)) == parse_form("e1^e4^e6", 7));
    CHECK(involution_f(7, differential(m0)(e5e6)) ==
          parse_form("e1^e4^e6 + e2^e3^e6 + e2^e4^e5", 7));

    CHECK_THROWS_AS((void)verify_commuting_square(m0, VergneAlgebra::m2(8), 2), AmbientMismatch);
    CHECK_THROWS_AS((void)verify_commuting_square(m0, m0, 1), InvalidArgument);
}
