#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extracta/corpus.hpp"
#include "extracta/errors.hpp"
#include "extracta/parser.hpp"
#include "extracta/printing.hpp"

using namespace extracta;

TEST_CASE("input file with every declaration kind") {
    InputFile f = parse_input(R"(
        # fixture
        ring x, y;
        ideal I = x^2, x*y;
        order M = matrix([[-1,-1],[0,1]]);
        order D = degrevlex;
        order B = block(neglex: y; lex: x);
        points P = (0,0), (1,-1/2);
        poly g = x - 2*y + 1;
    )");
    REQUIRE(f.ring.has_value());
    CHECK(f.ring->nvars() == 2);
    CHECK(f.ideals.at("I").gens().size() == 2);
    CHECK(f.ideals.at("I").gens()[0] == parse_polynomial("x^2", *f.ring));
    CHECK(f.orders.at("M").characteristic() == std::vector<int>{-1, -1});
    CHECK(f.orders.at("D").is_global());
    CHECK(f.orders.at("B").characteristic() == std::vector<int>{1, -1});
    CHECK(f.point_sets.at("P").points.size() == 2);
    CHECK(f.point_sets.at("P").points[1][1] == Rational(-1, 2));
    CHECK(f.polys.at("g").term_count() == 3);
    CHECK(f.ideal_names == std::vector<std::string>{"I"});
}

TEST_CASE("expression grammar corners") {
    Ring r({"x", "y"});
    CHECK(parse_polynomial("x^2 - x*y", r) ==
          parse_polynomial("-(x*y) + x^2", r));
    CHECK(parse_polynomial("(x+y)^2", r) ==
          parse_polynomial("x^2 + 2*x*y + y^2", r));
    CHECK(parse_polynomial("1/2*x - 3", r) * Rational(2) ==
          parse_polynomial("x - 6", r));
    CHECK(parse_polynomial("0", r).is_zero());
}

TEST_CASE("syntax errors carry positions") {
    Ring r({"x", "y"});
    CHECK_THROWS_AS(parse_polynomial("x^-1", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^0", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2x", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x + ", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("q + 1", r), ParseError);
    try {
        parse_input("ring x;\nideal I = x^-1;");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_input("ideal I = x;"), ParseError);       // ring first
    CHECK_THROWS_AS(parse_input("ring x; ring y;"), ParseError);    // one ring
    CHECK_THROWS_AS(parse_input("ring x; order O = matrix([[1,1]]);"), ParseError);
}

TEST_CASE("polynomial print/parse round trip on random inputs") {
    Ring r({"x", "y", "z"});
    std::mt19937_64 rng(101);
    std::vector<OrderSpec> pool = mixed_order_pool(r);
    pool.push_back(OrderSpec::lex(r));
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_polynomial(rng, r, 4, 5);
        const OrderSpec& o = pool[i % pool.size()];
        CHECK(parse_polynomial(to_string(f, o), r) == f);
    }
    CHECK(parse_polynomial(to_string(Polynomial::zero(r)), r).is_zero());
}

TEST_CASE("order print/parse round trip") {
    Ring r({"x", "y", "z"});
    for (const auto& o : mixed_order_pool(r)) {
        OrderSpec back = parse_order_spec(to_string(o), r);
        CHECK(back.matrix() == o.matrix());
    }
}

TEST_CASE("decomposition files") {
    Ring r({"x", "y"});
    Ideal I(r, {parse_polynomial("x^2", r), parse_polynomial("x*y", r)});

    SUBCASE("valid file verifies against the ideal") {
        PrimaryDecomposition D = parse_decomposition(R"(
provenance: user-supplied
component:
x
component:
x^2
y
)",
                                                     r, I);
        CHECK(D.components.size() == 2);
        CHECK(D.provenance == Provenance::user_supplied);
        CHECK_FALSE(D.component_radicals.has_value());
    }

    SUBCASE("radical annotations are picked up when every component has one") {
        PrimaryDecomposition D = parse_decomposition(R"(
provenance: user-supplied
component:
x
radical:
x
component:
x^2
y
radical:
x
y
)",
                                                     r, I);
        REQUIRE(D.component_radicals.has_value());
        CHECK(D.component_radicals->size() == 2);
    }

    SUBCASE("intersection mismatch is rejected") {
        CHECK_THROWS_AS(parse_decomposition("provenance: user-supplied\ncomponent:\nx\n", r, I),
                        DomainError);
    }
    SUBCASE("missing provenance is rejected") {
        CHECK_THROWS_AS(parse_decomposition("component:\nx\n", r, I), ParseError);
    }

    SUBCASE("format/parse round trip") {
        PrimaryDecomposition D = parse_decomposition(
            "provenance: user-supplied\ncomponent:\nx\ncomponent:\nx^2\ny\n", r, I);
        PrimaryDecomposition back = parse_decomposition(format_decomposition(D), r, I);
        CHECK(back.components.size() == D.components.size());
        for (size_t i = 0; i < D.components.size(); ++i)
            CHECK(back.components[i].gens() == D.components[i].gens());
    }
}
