#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extracta/parser.hpp"
#include "extracta/polynomial.hpp"
#include "extracta/printing.hpp"
#include "extracta/corpus.hpp"

using namespace extracta;

namespace {

Ring xy() { return Ring({"x", "y"}); }

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        p.push_back(q);
    }
    return p;
}

} // namespace

TEST_CASE("ring invariants") {
    CHECK_THROWS_AS(Ring({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Ring({"2x"}), std::invalid_argument);
    CHECK_THROWS_AS(Ring({""}), std::invalid_argument);
    Ring r({"x", "y_1"});
    CHECK(r.nvars() == 2);
    CHECK(r.var_index("y_1") == 1);
    CHECK(r == Ring({"x", "y_1"}));
    CHECK(r != Ring({"y_1", "x"}));
}

TEST_CASE("addition cancels and keeps canonical form") {
    Ring r = xy();
    CHECK(P("x+y", r) + P("x-y", r) == P("2*x", r));
    Polynomial f = P("x^2 - 3*x*y + 7", r);
    CHECK(f + Polynomial::zero(r) == f);
    CHECK(P("x^2 - x*y", r) + P("x*y", r) == P("x^2", r));
    CHECK((f - f).is_zero());
    CHECK((f - f).term_count() == 0);
}

TEST_CASE("multiplication") {
    Ring r = xy();
    CHECK(P("x", r) * P("x-y", r) == P("x^2 - x*y", r));
    Polynomial f = P("x^2*y - 5*x + 1/3", r);
    CHECK(f * Polynomial::constant(r, 1) == f);
    CHECK(P("1-y", r) * P("1+y+y^2", r) == P("1-y^3", r));
}

TEST_CASE("arithmetic matches evaluation at random rational points") {
    Ring r({"x", "y", "z"});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = random_polynomial(rng, r, 3, 4);
        Polynomial b = random_polynomial(rng, r, 3, 4);
        auto p = random_point(rng, 3);
        CHECK(evaluate(a * b, p) == evaluate(a, p) * evaluate(b, p));
        CHECK(evaluate(a + b, p) == evaluate(a, p) + evaluate(b, p));
    }
}

TEST_CASE("ring axioms on random inputs") {
    Ring r = xy();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        Polynomial a = random_polynomial(rng, r, 3, 3);
        Polynomial b = random_polynomial(rng, r, 3, 3);
        Polynomial c = random_polynomial(rng, r, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ring mismatch is rejected") {
    Polynomial f = P("x", xy());
    Polynomial g = P("x", Ring({"x", "z"}));
    CHECK_THROWS_AS((void)(f + g), std::invalid_argument);
    CHECK_THROWS_AS((void)(f * g), std::invalid_argument);
}

TEST_CASE("substitute: defining relation and direct replacement") {
    Ring lifted({"x", "y", "t1", "t2"});
    Ring target = xy();

    SUBCASE("t1 - x maps to zero under t1 = x") {
        Polynomial f = P("t1 - x", lifted);
        CHECK(substitute(f, {{"t1", P("x", target)}, {"t2", P("0", target)}}, target)
                  .is_zero());
    }
    SUBCASE("t1*y maps to x*y") {
        Polynomial f = P("t1*y", lifted);
        CHECK(substitute(f, {{"t1", P("x", target)}, {"t2", P("0", target)}}, target) ==
              P("x*y", target));
    }
    SUBCASE("t2^2 + t2 under t2 = y-1") {
        Polynomial f = P("t2^2 + t2", lifted);
        Polynomial got =
            substitute(f, {{"t1", P("0", target)}, {"t2", P("y-1", target)}}, target);
        CHECK(got == P("y^2 - y", target));
    }
}

TEST_CASE("substitute error paths") {
    Ring r = xy();
    Polynomial f = P("x + y", r);
    CHECK_THROWS_AS(substitute(f, {{"q", P("1", r)}}, r), std::invalid_argument);
    Ring small({"x"});
    CHECK_THROWS_AS(substitute(f, {}, small), std::invalid_argument);
}

TEST_CASE("substitute is a ring homomorphism") {
    Ring lifted({"x", "y", "t1"});
    Ring target = xy();
    std::mt19937_64 rng(23);
    std::map<std::string, Polynomial> assign{{"t1", P("x^2 - y", target)}};
    for (int i = 0; i < 20; ++i) {
        Polynomial a = random_polynomial(rng, lifted, 2, 3);
        Polynomial b = random_polynomial(rng, lifted, 2, 3);
        CHECK(substitute(a * b, assign, target) ==
              substitute(a, assign, target) * substitute(b, assign, target));
        CHECK(substitute(a + b, assign, target) ==
              substitute(a, assign, target) + substitute(b, assign, target));
    }
}

TEST_CASE("ideal construction enforces the shared ring") {
    Ring r = xy();
    Ideal I(r, {P("x^2", r), P("0", r)});
    CHECK(I.nonzero_gens().size() == 1);
    CHECK_THROWS_AS(Ideal(r, {P("a", Ring({"a", "b"}))}), std::invalid_argument);
}
