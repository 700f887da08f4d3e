#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "powersum/errors.hpp"
#include "powersum/polynomial.hpp"
#include "powersum/random_inputs.hpp"

using namespace powersum;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
} // namespace

TEST_SUITE("poly_exact")
{
    TEST_CASE("rationals are normalized")
    {
        CHECK(rational_to_string(parse_rational("4/-6")) == "-2/3");
        CHECK(rational_to_string(parse_rational("0/5")) == "0/1");
        CHECK(rational_to_string(parse_rational("7")) == "7/1");
        CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
        CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    }

    TEST_CASE("add")
    {
        CHECK(P("x^2 - 1") + P("1") == P("x^2"));
        CHECK(P("3x+2") + Polynomial() == P("3x+2"));
        CHECK(P("x^2+1") + P("-x^2+1") == P("2"));
        CHECK((P("x") + P("-x")).is_zero());
    }

    TEST_CASE("mul")
    {
        CHECK(P("x+1") * P("x-1") == P("x^2-1"));
        CHECK((P("x^3+2") * Polynomial()).is_zero());
        CHECK(P("2x") * P("x/2") == P("x^2"));
    }

    TEST_CASE("pow")
    {
        CHECK(pow(P("x^2"), 3) == P("x^6"));
        CHECK(pow(P("x^3 - 7x + 1/2"), 0) == P("1"));
        CHECK(pow(P("x+1"), 2) == P("x^2+2x+1"));
        CHECK(pow(Polynomial(), 3).is_zero());
        CHECK_THROWS_AS(pow(Polynomial(), 0), ValidationError);
    }

    TEST_CASE("degree and leading coefficient")
    {
        CHECK(degree(Polynomial()).is_minus_infinity());
        CHECK(degree(P("5")) == 0);
        CHECK(leading_coeff(P("3x^4 - x")) == 3);
        CHECK_THROWS_AS(leading_coeff(Polynomial()), ValidationError);
        CHECK(Polynomial(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}).degree() == 0);
    }

    TEST_CASE("divrem and gcd")
    {
        const auto [q, r] = divrem(P("x^2 - 1"), P("x - 1"));
        CHECK(q == P("x+1"));
        CHECK(r.is_zero());
        CHECK(gcd(P("x^2-1"), P("x^2-2x+1")) == P("x-1"));
        CHECK(gcd(P("3x^2+3"), Polynomial()) == P("x^2+1"));
        CHECK_THROWS_AS(divrem(P("x"), Polynomial()), ValidationError);
        CHECK_THROWS_AS(gcd(Polynomial(), Polynomial()), ValidationError);
        CHECK_THROWS_AS(exact_div(P("x^2+1"), P("x-1")), ValidationError);
    }

    TEST_CASE("parser and printer")
    {
        CHECK(P("(x+1)^3") == P("x^3 + 3x^2 + 3*x + 1"));
        CHECK(P("-(x - 2)(x + 2)") == P("4 - x^2"));
        CHECK(P("3/2*x^2 - x + 1").to_string() == "3/2*x^2 - x + 1");
        CHECK(Polynomial().to_string() == "0");
        CHECK(P("x^2 - 1").to_string() == "x^2 - 1");
        const Polynomial f = P("-2/3x^5 + x^3 - 1/7");
        CHECK(P(f.to_string().c_str()) == f);
        CHECK_THROWS_AS(P("x^"), ValidationError);
        CHECK_THROWS_AS(P("x + y"), ValidationError);
        CHECK_THROWS_AS(P("1/x"), ValidationError);
    }

    TEST_CASE("compose")
    {
        CHECK(compose(P("x^2 + 1"), P("x - 1")) == P("x^2 - 2x + 2"));
        CHECK(compose(P("7"), P("x^3")) == P("7"));
    }

    TEST_CASE("multiplication matches schoolbook product")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            const auto f = random_polynomial(rng, static_cast<int>(rng() % 9), 9);
            const auto g = random_polynomial(rng, static_cast<int>(rng() % 9), 9);
            CHECK(oracle::to_coeffs(f * g) == oracle::mul(oracle::to_coeffs(f), oracle::to_coeffs(g)));
            CHECK(oracle::to_coeffs(f + g) == oracle::add(oracle::to_coeffs(f), oracle::to_coeffs(g)));
        }
    }

    TEST_CASE("properties on random inputs")
    {
        std::mt19937_64 rng(12);
        for (int i = 0; i < 150; ++i) {
            const auto f = random_polynomial(rng, static_cast<int>(rng() % 7), 6);
            const auto g = random_polynomial(rng, 1 + static_cast<int>(rng() % 6), 6);
            // deg(fg) = deg f + deg g
            CHECK((f * g).deg() == f.deg() + g.deg());

            const auto a = rng() % 17, b = rng() % 17;
            CHECK(pow(f, a + b) == pow(f, a) * pow(f, b));
            CHECK(oracle::to_coeffs(pow(g, a)) == oracle::power(oracle::to_coeffs(g), static_cast<std::int64_t>(a)));

            const auto [q, r] = divrem(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());

            const auto h = gcd(f * g, g * g);
            CHECK(h.leading_coeff() == 1);
            CHECK(divrem(f * g, h).remainder.is_zero());
            CHECK(divrem(g * g, h).remainder.is_zero());
        }
    }
}
