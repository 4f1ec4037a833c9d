#include <doctest.h>

#include <sstream>

#include "vergne/classifier.hpp"
#include "vergne/serialize.hpp"

using namespace vergne;

TEST_CASE("Betti table JSON round trip") {
    for (int n = 5; n <= 10; ++n)
        for (const auto& g : enumerate(n)) {
            const auto t = betti(g);
            const auto j = to_json(t);
            CHECK(j.at("n") == n);
            CHECK(j.at("betti").size() == static_cast<std::size_t>(n) + 1);
            CHECK(betti_table_from_json(j) == t);
            CHECK(betti_table_from_json(ordered_json::parse(j.dump())) == t);
        }
    const auto j = to_json(betti(VergneAlgebra::m0(5)));
    CHECK(j.at("graded").begin().key() == "0,0");
    CHECK(j.at("graded").at("1,2") == 1);
    CHECK_FALSE(j.at("graded").contains("1,3"));
}

TEST_CASE("malformed Betti JSON is rejected") {
    auto j = to_json(betti(VergneAlgebra::m0(5)));
    j["graded"]["x"] = 1;
    CHECK_THROWS_AS((void)betti_table_from_json(j), ParseError);
    CHECK_THROWS_AS((void)betti_table_from_json(ordered_json::parse(R"({"n": 5})")), ParseError);
}

TEST_CASE("CSV layout") {
    const auto csv = to_csv(betti(VergneAlgebra::m0(5)));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,betti,cocycle_dim,graded");
    std::getline(in, line);
    CHECK(line == "0,1,1,0:1");
    std::getline(in, line);
    CHECK(line == "1,2,2,1:1 2:1");
    int data_rows = 2;
    while (std::getline(in, line)) ++data_rows;
    CHECK(data_rows == 6);
}

TEST_CASE("decomposition JSON round trip") {
    for (int n = 5; n <= 12; ++n)
        for (const auto& g : enumerate(n)) {
            const auto d = decompose(g);
            const auto j = to_json(d);
            CHECK(j.at("dimension") == n);
            CHECK(j.at("omegas").size() == static_cast<std::size_t>(n - 5));
            const auto back = decomposition_from_json(ordered_json::parse(j.dump()));
            CHECK(back.root == d.root);
            CHECK(back.steps == d.steps);
            CHECK(back.replay() == g);
        }
    const auto j = to_json(decompose(VergneAlgebra::from_row(RowVector::parse("[0,0,0,1,0,0]"))));
    CHECK(j.at("root_label") == "m0(5)");
    CHECK(j.at("omegas").at(1) == "e1^e6 + e2^e5 + e3^e4");
}

TEST_CASE("enumeration JSON shape") {
    const auto algebras = enumerate(7);
    std::vector<BettiTable> tables;
    for (const auto& g : algebras) tables.push_back(betti(g));
    const auto j = enumeration_json(7, algebras, tables);
    CHECK(j.at("dimension") == 7);
    REQUIRE(j.at("algebras").size() == 4);
    const auto& second = j.at("algebras").at(1);
    CHECK(second.at("label") == "g(7,1)");
    CHECK(second.at("row") == "[0, 0, 0, 1, 0, 0]");
    CHECK(RowVector::parse(second.at("row").get<std::string>()) == algebras[1].row());
    CHECK(second.at("betti") == ordered_json::parse("[1, 2, 3, 6, 6, 3, 2, 1]"));
}
