#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "germ/groebner.hpp"
#include "germ/text.hpp"

using namespace germ;

namespace {

const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = XY) {
    return parse_polynomial(s, names);
}

std::vector<Polynomial> ideal(std::initializer_list<const char*> gens,
                              const std::vector<std::string>& names = XY) {
    std::vector<Polynomial> out;
    for (const char* g : gens) out.push_back(P(g, names));
    return out;
}

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, int max_deg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Polynomial f(nvars);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        int budget = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
            const int e = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
            m.e[v] = e;
            budget -= e;
        }
        f.add_term(m, Rational(coeff(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("groebner basis examples") {
    SECTION("linear pair reduces to the variables") {
        auto gb = groebner_basis(ideal({"x + y", "x - y"}));
        REQUIRE(gb.gens.size() == 2);
        CHECK(gb.gens[0] == P("x"));
        CHECK(gb.gens[1] == P("y"));
    }
    SECTION("single monic generator is its own basis") {
        auto gb = groebner_basis(ideal({"x*y"}));
        REQUIRE(gb.gens.size() == 1);
        CHECK(gb.gens[0] == P("x*y"));
    }
    SECTION("monomial ideal is already reduced") {
        auto gb = groebner_basis(ideal({"x^2", "x*y", "y^2"}));
        REQUIRE(gb.gens.size() == 3);
        CHECK(gb.gens[0] == P("x^2"));
        CHECK(gb.gens[1] == P("x*y"));
        CHECK(gb.gens[2] == P("y^2"));
    }
    SECTION("zero ideal yields the empty basis") {
        CHECK(groebner_basis({Polynomial::zero(2)}).gens.empty());
        CHECK(groebner_basis({}).gens.empty());
    }
}

TEST_CASE("normal form examples") {
    SECTION("multiple of generator reduces to zero") {
        auto gb = groebner_basis(ideal({"x*y"}));
        CHECK(normal_form(P("x^2*y"), gb).is_zero());
    }
    SECTION("low degree polynomial is already reduced") {
        auto gb = groebner_basis(ideal({"x*y"}));
        CHECK(normal_form(P("x + y"), gb) == P("x + y"));
    }
    SECTION("parabola membership") {
        auto gb = groebner_basis(ideal({"y - x^2"}));
        CHECK(normal_form(P("x^2"), gb) == P("y"));
        CHECK(normal_form(P("x^2 - y"), gb).is_zero());
    }
}

TEST_CASE("normal form is idempotent and certificate holds") {
    std::mt19937 rng(20250809);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> gens;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, 2, 3));
        auto gb = groebner_basis(gens);
        CHECK(buchberger_certificate(gb));
        const Polynomial f = random_poly(rng, 2, 4);
        const Polynomial r = normal_form(f, gb);
        CHECK(normal_form(r, gb) == r);
        // Membership consistency: members are radical members.
        if (!gb.gens.empty()) {
            Polynomial member = gens[0] * random_poly(rng, 2, 2);
            CHECK(normal_form(member, gb).is_zero());
            CHECK(radical_membership(member, gens));
        }
    }
}

TEST_CASE("determinism: identical inputs give identical bases") {
    auto gens = ideal({"x^2 + y", "x*y - 1", "y^3 - x"});
    auto a = groebner_basis(gens);
    auto b = groebner_basis(gens);
    CHECK(a.gens == b.gens);
}

TEST_CASE("syzygy examples") {
    SECTION("Koszul syzygy of a regular sequence") {
        auto syz = syzygies(ideal({"x", "y"}));
        REQUIRE(syz.size() == 1);
        CHECK(syz[0].comps[0] == P("y"));
        CHECK(syz[0].comps[1] == P("-x"));
    }
    SECTION("fat point has two generating syzygies") {
        const auto gens = ideal({"x^2", "x*y", "y^2"});
        auto syz = syzygies(gens);
        // Each returned syzygy is exact.
        for (const auto& s : syz) {
            Polynomial acc(2);
            for (std::size_t i = 0; i < gens.size(); ++i) acc += s.comps[i] * gens[i];
            CHECK(acc.is_zero());
        }
        // The module they generate equals that generated by the hand pair.
        ModuleElement a{{P("y"), P("-x"), P("0")}};
        ModuleElement b{{P("0"), P("y"), P("-x")}};
        const ModuleOrder order = ModuleOrder::position_over_term();
        auto hand_gb = module_groebner({a, b}, order);
        auto got_gb = module_groebner(syz, order);
        for (const auto& s : syz) CHECK(module_contains(hand_gb, s, order));
        CHECK(module_contains(got_gb, a, order));
        CHECK(module_contains(got_gb, b, order));
        CHECK(syz.size() == 2);
    }
    SECTION("a nonzerodivisor has no syzygies") {
        CHECK(syzygies(ideal({"x^2 + y^2"})).empty());
    }
}

TEST_CASE("syzygy certificate on random inputs") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        const int k = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, 2, 3));
        for (const auto& s : syzygies(gens)) {
            Polynomial acc(2);
            for (std::size_t i = 0; i < gens.size(); ++i) acc += s.comps[i] * gens[i];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("elimination examples") {
    const std::vector<std::string> XYT = {"x", "Y", "t"};
    SECTION("tangent direction of a scaled line") {
        auto out = eliminate(ideal({"Y - t*x", "t"}, XYT), {2});
        REQUIRE(out.size() == 1);
        CHECK(out[0] == P("Y", XYT));
    }
    SECTION("parabola parametrization") {
        const std::vector<std::string> XYT2 = {"x", "y", "t"};
        auto out = eliminate(ideal({"x - t", "y - t^2"}, XYT2), {2});
        auto gb = groebner_basis(out);
        auto expect = groebner_basis(ideal({"y - x^2"}, XYT2));
        CHECK(ideal_equal(gb, expect));
    }
    SECTION("empty block is the identity") {
        auto gens = ideal({"x*y"});
        CHECK(eliminate(gens, {}) == gens);
    }
}

TEST_CASE("radical membership examples") {
    CHECK(radical_membership(P("x"), ideal({"x^2"})));
    CHECK_FALSE(radical_membership(P("x + y"), ideal({"x*y"})));
    CHECK(radical_membership(P("x^3 - 7*y"), ideal({"1"})));
    CHECK(radical_membership(Polynomial::zero(2), ideal({"x*y"})));
}

TEST_CASE("module groebner certificate") {
    const ModuleOrder order = ModuleOrder::position_over_term();
    std::vector<ModuleElement> gens = {
        ModuleElement{{P("x^2"), P("y")}},
        ModuleElement{{P("x*y - 1"), P("x")}},
        ModuleElement{{P("y^2"), P("x + y")}},
    };
    auto gb = module_groebner(gens, order);
    CHECK(module_buchberger_certificate(gb, order));
    for (const auto& g : gens) CHECK(module_contains(gb, g, order));
}
