#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "germ/model.hpp"
#include "germ/polynomial.hpp"
#include "germ/text.hpp"

using namespace germ;

namespace {

const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = XY) {
    return parse_polynomial(s, names);
}

Rational Q(const std::string& s) { return parse_rational(s); }

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, int max_deg, bool no_constant = false) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Polynomial f(nvars);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        int budget = deg(rng);
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
            const int e = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
            m.e[v] = e;
            budget -= e;
        }
        if (no_constant && m.is_one()) continue;
        f.add_term(m, Rational(coeff(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("rational parsing and normalization") {
    CHECK(Q("3/2") == Rational(3, 2));
    CHECK(Q("-6/4") == Rational(-3, 2));
    CHECK(to_string(Q("-6/4")) == "-3/2");
    CHECK(to_string(Q("8/2")) == "4");
    CHECK(rational_den(Q("-6/4")) == 2);  // positive denominator, lowest terms
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("a"));
}

TEST_CASE("evaluate examples") {
    const std::vector<Rational> origin = {Rational(0), Rational(0)};
    CHECK(P("x*y").evaluate(origin) == 0);

    const std::vector<Rational> p12 = {Rational(1), Rational(2)};
    CHECK(P("x^2 + y").evaluate(p12) == 3);

    const std::vector<Rational> p32 = {Rational(3, 2), Rational(0)};
    CHECK(P("2/3*x").evaluate(p32) == 1);
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = random_poly(rng, 2, 3);
        const Polynomial g = random_poly(rng, 2, 3);
        const std::vector<Rational> pt = {Rational(coord(rng), 2), Rational(coord(rng), 3)};
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
        CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    }
}

TEST_CASE("translate_to_origin examples") {
    SECTION("parabola through (1,1)") {
        PointedModel m{XY, {P("y - x^2")}, {Rational(1), Rational(1)}};
        const PointedModel t = translate_to_origin(m);
        REQUIRE(t.generators.size() == 1);
        CHECK(t.generators[0] == P("y - 2*x - x^2"));
        CHECK(t.at_origin());
    }
    SECTION("already at origin is unchanged") {
        PointedModel m{XY, {P("x*y")}, {Rational(0), Rational(0)}};
        CHECK(translate_to_origin(m).generators[0] == P("x*y"));
    }
    SECTION("point off locus is rejected") {
        PointedModel m{XY, {P("x - 1")}, {Rational(0), Rational(0)}};
        CHECK_THROWS_AS(translate_to_origin(m), InputError);
    }
}

TEST_CASE("translation by p then by -p is the identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial f = random_poly(rng, 2, 3);
        const std::vector<Rational> p = {Rational(coord(rng)), Rational(coord(rng), 2)};
        std::vector<Polynomial> fwd, bwd;
        for (std::size_t i = 0; i < 2; ++i) {
            fwd.push_back(Polynomial::variable(2, i) + Polynomial::constant(2, p[i]));
            bwd.push_back(Polynomial::variable(2, i) - Polynomial::constant(2, p[i]));
        }
        CHECK(f.substitute(fwd).substitute(bwd) == f);
    }
}

TEST_CASE("jacobian_at examples") {
    SECTION("node") {
        PointedModel m{XY, {P("x*y")}, {Rational(0), Rational(0)}};
        const Mat j = jacobian_at(m);
        REQUIRE(j.size() == 1);
        CHECK(j[0] == Vec{Rational(0), Rational(0)});
    }
    SECTION("parabola") {
        PointedModel m{XY, {P("y - x^2")}, {Rational(0), Rational(0)}};
        const Mat j = jacobian_at(m);
        CHECK(j[0] == Vec{Rational(0), Rational(1)});
    }
    SECTION("fat point: all partials in the maximal ideal") {
        PointedModel m{XY, {P("x^2"), P("x*y"), P("y^2")}, {Rational(0), Rational(0)}};
        CHECK(mat_is_zero(jacobian_at(m)));
    }
}

TEST_CASE("jacobian of a linear form is its coefficient row") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a(coeff(rng)), b(coeff(rng), 3);
        Polynomial f =
            Polynomial::variable(2, 0) * a + Polynomial::variable(2, 1) * b;
        PointedModel m{XY, {f}, {Rational(0), Rational(0)}};
        const Mat j = jacobian_at(m);
        CHECK(j[0][0] == a);
        CHECK(j[0][1] == b);
    }
}

TEST_CASE("canonical printing round-trips") {
    const std::vector<std::string> cases = {
        "x^2*y - 3/2*y^3", "0", "1", "-x", "x*y + 1", "2*x^2 - x + 5/7",
    };
    for (const auto& s : cases) {
        const Polynomial f = P(s);
        CHECK(print_polynomial(f, XY) == s);
        CHECK(parse_polynomial(print_polynomial(f, XY), XY) == f);
    }
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial f = random_poly(rng, 2, 4);
        CHECK(parse_polynomial(print_polynomial(f, XY), XY) == f);
    }
}

TEST_CASE("parser rejects bad input with positions") {
    CHECK_THROWS_AS(P("x**2"), ParseError);
    CHECK_THROWS_AS(P("x y"), ParseError);
    CHECK_THROWS_AS(P("z + 1"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    try {
        P("x + q");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
}

TEST_CASE("polynomial ops keep canonical form") {
    const Polynomial f = P("x + y");
    const Polynomial g = P("x - y");
    CHECK((f + g) == P("2*x"));
    CHECK((f * g) == P("x^2 - y^2"));
    CHECK((f - f).is_zero());
    CHECK(P("x*y").derivative(0) == P("y"));
    CHECK(P("x^3").derivative(0) == P("3*x^2"));
    CHECK(P("x^2*y").total_degree() == 3);
    CHECK(P("x^2 + y").homogeneous_part(2) == P("x^2"));
    CHECK(P("x^2 + y").lowest_degree() == 1);
}
