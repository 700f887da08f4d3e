#include <random>

#include "doctest.h"
#include "powersum/errors.hpp"
#include "powersum/function_field.hpp"
#include "powersum/random_inputs.hpp"

using namespace powersum;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
RationalFunction F(const char* num, const char* den = "1") { return rf_new(P(num), P(den)); }
Place at(const char* pi) { return Place::finite(P(pi)); }
} // namespace

TEST_SUITE("function_field")
{
    TEST_CASE("reduced fractions")
    {
        const auto f = F("x^2 - 1", "x - 1");
        CHECK(f.num() == P("x + 1"));
        CHECK(f.den() == P("1"));
        CHECK(F("2x", "2") == F("x"));
        CHECK(F("0", "x").is_zero());
        CHECK(F("0", "x").den() == P("1"));
        CHECK(F("x", "2x^2 + 2").den() == P("x^2 + 1"));
        CHECK(F("x", "2x^2 + 2").num() == P("x/2"));
        CHECK_THROWS_AS(F("x", "0"), ValidationError);
        CHECK(F("x") / F("x^2") == F("1", "x"));
        CHECK(F("1", "x") + F("1", "x - 1") == F("2x - 1", "x^2 - x"));
        CHECK(pow(F("x + 1", "x"), -2) == F("x^2", "x^2 + 2x + 1"));
        CHECK(compose(P("x^2 + 1"), F("1", "x")) == F("x^2 + 1", "x^2"));
        CHECK_THROWS_AS(F("0").inverse(), ValidationError);
    }

    TEST_CASE("places")
    {
        CHECK_THROWS_AS(at("x^2 - 1"), ValidationError);
        CHECK_THROWS_AS(at("2x + 1"), ValidationError);
        CHECK_THROWS_AS(at("3"), ValidationError);
        CHECK(at("x^2 + 1").degree() == 2);
        CHECK(Place::infinity().degree() == 1);
        CHECK(at("x") < Place::infinity());
        CHECK(at("x + 5") < at("x^2 + 1"));
        CHECK_THROWS_AS(Place::infinity().polynomial(), ValidationError);
    }

    TEST_CASE("valuations")
    {
        const auto f = F("x^2 + 1", "x");
        CHECK(valuation(f, at("x")) == -1);
        CHECK(valuation(f, Place::infinity()) == -1);
        CHECK(valuation(f, at("x^2 + 1")) == 1);
        CHECK(valuation(f, at("x - 1")) == 0);
        for (const auto& v : {at("x"), at("x^2 + 1"), Place::infinity()}) CHECK(valuation(F("-7/3"), v) == 0);
        CHECK(valuation(F("(x-1)^3", "(x+2)^2"), at("x - 1")) == 3);
        CHECK_THROWS_AS(valuation(F("0"), at("x")), ValidationError);
    }

    TEST_CASE("places_of and the sum formula")
    {
        const auto ps = places_of(F("x^2 + 1", "x"));
        REQUIRE(ps.size() == 3);
        CHECK(ps[0].first == at("x"));
        CHECK(ps[0].second == -1);
        CHECK(ps[1].first == at("x^2 + 1"));
        CHECK(ps[1].second == 1);
        CHECK(ps[2].first.is_infinity());
        CHECK(ps[2].second == -1);
        CHECK(places_of(F("5")).empty());
        const auto lin = places_of(F("x - 3"));
        REQUIRE(lin.size() == 2);
        CHECK(lin[0].second == 1);
        CHECK(lin[1].second == -1);

        CHECK(sum_formula_check(F("x^2 + 1", "x")) == 0);
        CHECK(sum_formula_check(F("x^5")) == 0);
        CHECK(sum_formula_check(F("x - 1", "x - 2")) == 0);
        CHECK_THROWS_AS(places_of(F("x^13 + x + 1")), FactorizationInfeasible);
    }

    TEST_CASE("heights")
    {
        CHECK(height(F("x^2 + 1", "x")) == Height(2));
        CHECK(height_fast(F("x^2 + 1", "x")) == Height(2));
        CHECK(height(F("-4")) == Height(0));
        CHECK(height(F("0")) == Height::infinity());
        CHECK(height_fast(F("0")) == Height::infinity());
        CHECK(Height::infinity() > Height(1000000));
        CHECK(height_fast(F("x^20 + 1", "x^3")) == Height(20));
        CHECK_THROWS_AS(height(F("x^20 + 1", "x^3")), FactorizationInfeasible);
    }

    TEST_CASE("S-units")
    {
        SUnitSet s({at("x"), at("x - 1")});
        CHECK(is_s_unit(F("x", "x - 1"), s));
        CHECK(!is_s_unit(F("x^2"), SUnitSet({at("x")})));
        CHECK(is_s_unit(F("3"), SUnitSet()));

        auto s2 = s_unit_set_for({F("x"), F("x + 1")});
        CHECK(s2 == SUnitSet({at("x"), at("x + 1"), Place::infinity()}));
        CHECK(s2.point_count() == 3);
        CHECK(s_unit_set_for({F("5")}).places().empty());
        auto s3 = s_unit_set_for({F("x^2 + 1")});
        CHECK(s3 == SUnitSet({at("x^2 + 1"), Place::infinity()}));
        CHECK(s3.point_count() == 3);
    }

    TEST_CASE("Brownawell-Masser bound")
    {
        CHECK(bm_bound(2, 3) == 3);
        CHECK(bm_bound(1, 17) == 0);
        CHECK(bm_bound(3, 5, 1) == bm_bound(3, 5));
        CHECK(bm_bound(3, 5, 2) == bm_bound(3, 5) + 2 * 3);
        CHECK_THROWS_AS(bm_bound(2, -1), ValidationError);

        const SUnitSet s({at("x"), at("x + 1"), Place::infinity()});
        const auto ok = verify_bm({F("x"), F("-x - 1")}, s);
        CHECK(ok.s_units);
        CHECK(ok.sums_to_zero);
        CHECK(ok.no_vanishing_subsum == true);
        CHECK(ok.max_height == Height(1));
        CHECK(ok.bound == 3);
        CHECK(ok.passed());

        const auto trivial = verify_bm({F("-1")}, SUnitSet());
        CHECK(trivial.passed());
        CHECK(trivial.bound == 0);

        const auto vanishing = verify_bm({F("x"), F("-x"), F("-1")}, SUnitSet({at("x"), Place::infinity()}));
        CHECK(vanishing.sums_to_zero);
        CHECK(vanishing.no_vanishing_subsum == false);
        CHECK(!vanishing.hypotheses_hold());
        CHECK(!vanishing.passed());

        const auto not_units = verify_bm({F("x"), F("-x - 1")}, SUnitSet({at("x")}));
        CHECK(!not_units.s_units);
        CHECK(!verify_bm({F("x"), F("x")}, s).sums_to_zero);

        std::vector<RationalFunction> many(13, F("1"));
        CHECK(!verify_bm(many, SUnitSet()).no_vanishing_subsum.has_value());
    }

    TEST_CASE("height properties on random functions")
    {
        std::mt19937_64 rng(61);
        for (int i = 0; i < 150; ++i) {
            const auto f = random_rational_function(rng, 6, 4);
            const auto g = random_rational_function(rng, 6, 4);
            const auto hf = height(f), hg = height(g);
            CHECK(hf == height_fast(f));
            CHECK(hf == height(f.inverse()));
            if (!(f + g).is_zero()) {
                const auto hs = height(f + g).value();
                CHECK(hf.value() - hg.value() <= hs);
                CHECK(hg.value() - hf.value() <= hs);
                CHECK(hs <= hf.value() + hg.value());
            }
            const auto hp = height_fast(f * g).value();
            CHECK(hf.value() - hg.value() <= hp);
            CHECK(hp <= hf.value() + hg.value());
            const int n = 1 + static_cast<int>(rng() % 12);
            CHECK(height_fast(pow(f, n)).value() == n * hf.value());
            CHECK((hf == Height(0)) == f.is_constant());
            const auto A = random_polynomial(rng, static_cast<int>(rng() % 5), 3);
            CHECK(height_fast(compose(A, f)).value() == A.deg() * hf.value());
            CHECK(sum_formula_check(f) == 0);
            for (const auto& [v, nu] : places_of(f)) CHECK(valuation(f * g, v) == nu + valuation(g, v));
        }
    }
}
