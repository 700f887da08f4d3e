#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "powersum/degree_counter.hpp"
#include "powersum/errors.hpp"
#include "powersum/random_inputs.hpp"

using namespace powersum;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }

PowerSumSystem single(const char* a, const char* p, const char* b, const char* q, int base = 1)
{
    return PowerSumSystem({{P(a), P(p)}}, {{P(b), P(q)}}, base);
}

const PowerSumSystem& pillai()
{
    static const PowerSumSystem s = single("1", "x^2", "-1", "x^3");
    return s;
}

const PowerSumSystem& cancel()
{
    static const PowerSumSystem s = single("1", "x^2+1", "-1", "x^2-1");
    return s;
}

void check_report_shape(const CountReport& r)
{
    CHECK(r.a_d == r.rectangle_count + r.small_n_strip + r.small_m_strip +
                       static_cast<std::int64_t>(r.line_pairs_counted.size()));
    std::set<std::pair<std::int64_t, std::int64_t>> counted, zeros;
    for (const auto& p : r.line_pairs_counted) {
        CHECK(p.degree >= 0);
        CHECK(p.degree <= r.d);
        counted.insert({p.n, p.m});
    }
    std::set<std::int64_t> zero_ns;
    for (const auto& z : r.zero_sum_pairs) {
        CHECK(counted.count({z.n, z.m}) == 0);
        // at most one m per n
        CHECK(zero_ns.insert(z.n).second);
    }
}

bool same_report(const CountReport& a, const CountReport& b)
{
    return a.a_d == b.a_d && a.rectangle_count == b.rectangle_count && a.small_n_strip == b.small_n_strip &&
           a.small_m_strip == b.small_m_strip && a.line_pairs_counted == b.line_pairs_counted &&
           a.zero_sum_pairs == b.zero_sum_pairs && a.certified == b.certified;
}
} // namespace

TEST_SUITE("degree_counter")
{
    TEST_CASE("d_value examples")
    {
        CHECK(d_value(single("1", "x^2", "1", "x^3"), 1, 1) == 3);
        CHECK(d_value(pillai(), 3, 2).is_minus_infinity());
        CHECK(d_value(cancel(), 4, 4) == 6);
        CHECK(d_value_expanded(cancel(), 4, 4) == 6);
        CHECK_THROWS_AS(d_value(pillai(), 0, 2), ValidationError);
        CHECK(d_value(pillai().with_exponent_base(0), 0, 0).is_minus_infinity());
    }

    TEST_CASE("fast path agrees with expansion")
    {
        std::mt19937_64 rng(51);
        for (int i = 0; i < 40; ++i) {
            const auto sys = random_system(rng);
            DegreeEvaluator fast(sys), slow(sys);
            for (std::int64_t n = 1; n <= 14; ++n)
                for (std::int64_t m = 1; m <= 14; ++m) {
                    const auto want = oracle::deg(oracle::add(oracle::side(sys.left(), n), oracle::side(sys.right(), m)));
                    const auto got = fast.d_value(n, m);
                    CHECK((got.is_finite() ? got.value() : -1) == want);
                    CHECK(got == slow.d_value_expanded(n, m));
                }
        }
        // Systems built to sit on the degree-matching line with cancelling leads.
        for (int i = 0; i < 40; ++i) {
            const Polynomial r = random_polynomial(rng, 2, 2);
            const Polynomial a = random_polynomial(rng, static_cast<int>(rng() % 2), 2);
            const PowerSumSystem sys({{a, r + random_polynomial(rng, 1, 2)}},
                                     {{-a, r + random_polynomial(rng, static_cast<int>(rng() % 2), 2)}});
            DegreeEvaluator fast(sys);
            for (std::int64_t n = 1; n <= 20; ++n) CHECK(fast.d_value(n, n) == d_value_expanded(sys, n, n));
        }
    }

    TEST_CASE("evaluator statistics")
    {
        const auto sys = single("1", "x^3+x", "-1", "x^2+1");
        DegreeEvaluator ev(sys);
        for (std::int64_t n = 1; n <= 30; ++n)
            for (std::int64_t m = 1; m <= 30; ++m) ev.d_value(n, m);
        const auto& st = ev.stats();
        CHECK(st.calls == 900);
        // 3n = 2m for n = 2, 4, ..., 20; the leading coefficients cancel on every one of them.
        CHECK(st.decided_by_degree == 900 - 10);
        CHECK(st.decided_by_leading_coeff == 0);
        CHECK(st.top_down_scans == 10);
    }

    TEST_CASE("C_BM and the |S| bound")
    {
        const auto ctx = BMContext::from_system(pillai(), 10);
        CHECK(c_bm(ctx) == 16);
        CHECK(s_size_bound(ctx) == 16);

        const PowerSumSystem s21({{P("1"), P("x^3")}, {P("1"), P("x")}}, {{P("1"), P("x^2")}});
        CHECK(c_bm(BMContext::from_system(s21, 0)) == 21);
        CHECK(c_bm(BMContext::from_system(s21, 7)) - c_bm(BMContext::from_system(s21, 0)) == 7 * binom2(3));
        CHECK(c_bm(BMContext::from_system(s21, 5)) == binom2(3) * s_size_bound(BMContext::from_system(s21, 5)));
        // genus 0 and 1 coincide; genus 2 adds 2 binom(k+l, 2)
        CHECK(c_bm(BMContext::from_system(s21, 0, 1)) == 21);
        CHECK(c_bm(BMContext::from_system(s21, 0, 2)) == 21 + 2 * 3);

        BMContext bad = ctx;
        bad.deg_p = {0};
        CHECK_THROWS_AS(bad.validate(), ValidationError);
        bad = ctx;
        bad.deg_b.push_back(1);
        CHECK_THROWS_AS(bad.validate(), ValidationError);
    }

    TEST_CASE("line pairs")
    {
        const std::vector<ExponentPair> want{{3, 2}, {6, 4}, {9, 6}};
        CHECK(line_pairs(pillai(), 9) == want);
        const std::vector<ExponentPair> want0{{0, 0}, {3, 2}, {6, 4}};
        CHECK(line_pairs(pillai().with_exponent_base(0), 8) == want0);
        const auto diag = line_pairs(cancel(), 5);
        REQUIRE(diag.size() == 5);
        for (std::int64_t t = 1; t <= 5; ++t) CHECK(diag[static_cast<std::size_t>(t - 1)] == ExponentPair{t, t});
        CHECK(line_pairs(single("x", "x^2", "1", "x^2"), 50).empty());
        // deg a_1 = 4 shifts the line: 4 + 2n = 3m
        const std::vector<ExponentPair> shifted{{1, 2}, {4, 4}, {7, 6}};
        CHECK(line_pairs(single("x^4", "x^2", "1", "x^3"), 8) == shifted);
    }

    TEST_CASE("Pillai system matches the closed form")
    {
        CHECK(count_certified(pillai(), 240).a_d == 9560);
        for (std::int64_t d = 0; d <= 60; ++d) {
            const auto r = count_certified(pillai(), d);
            CHECK(r.certified);
            CHECK(r.a_d == oracle::pillai_count(d));
            check_report_shape(r);
            const auto caps = candidate_caps(pillai(), d);
            const auto naive = count_naive(pillai(), d, caps.n_max, caps.m_max);
            CHECK(naive.certified);
            CHECK(naive.a_d == r.a_d);
            CHECK(naive.zero_sum_pairs == r.zero_sum_pairs);
        }
    }

    TEST_CASE("cancellation system")
    {
        const auto r = count_certified(cancel(), 20);
        CHECK(r.a_d == 101);
        bool has_11 = false;
        for (const auto& p : r.line_pairs_counted) has_11 = has_11 || (p.n == 11 && p.m == 11 && p.degree == 20);
        CHECK(has_11);
        check_report_shape(r);
        CHECK(oracle::brute_count(cancel(), 20, 30, 30) == 101);
        // Off the diagonal D = 2 max(n, m); on it D = 2n - 2. So a_d = K^2 + 1 with K = floor(d/2).
        for (std::int64_t d = 1; d <= 60; ++d) {
            const std::int64_t K = d / 2;
            CHECK(count_certified(cancel(), d).a_d == K * K + 1);
        }
        CHECK(count_certified(cancel(), 0).a_d == 1);
    }

    TEST_CASE("small count examples")
    {
        const auto xx = single("x", "x", "x", "x");
        CHECK(count_certified(xx, 0).a_d == 0);
        for (std::int64_t d = 1; d <= 12; ++d) CHECK(count_certified(xx, d).a_d == (d - 1) * (d - 1));
        CHECK(count_certified(single("1", "x+1", "1", "x+2"), 10).a_d == 100);
        const auto empty = count_naive(pillai(), 10, 0, 0);
        CHECK(empty.a_d == 0);
        CHECK(!empty.certified);
        CHECK_THROWS_AS(count_certified(pillai(), -1), ValidationError);
    }

    TEST_CASE("certified count against an independent brute force")
    {
        std::mt19937_64 rng(52);
        for (int i = 0; i < 25; ++i) {
            RandomSystemShape shape;
            shape.max_terms = 2;
            shape.max_degree = 3;
            shape.exponent_base = static_cast<int>(rng() % 2);
            const auto sys = random_system(rng, shape);
            const std::int64_t d = static_cast<std::int64_t>(rng() % 16);
            const auto r = count_certified(sys, d);
            // Every root has degree >= 1 and every non-line pair has D >= max of its side degrees,
            // so a window of d + threshold + a margin holds every counted pair.
            const auto nm = dominance_thresholds(sys);
            const std::int64_t w = d + std::max(nm.left, nm.right) + 12;
            CHECK(r.a_d == oracle::brute_count(sys, d, w, w));
            for (const auto& p : r.line_pairs_counted) {
                CHECK(p.n <= w);
                CHECK(p.m <= w);
            }
            check_report_shape(r);
        }
    }

    TEST_CASE("monotone in d, parallel evaluation is deterministic")
    {
        std::mt19937_64 rng(53);
        for (int i = 0; i < 12; ++i) {
            const auto sys = random_system(rng);
            std::int64_t prev = 0;
            for (std::int64_t d = 0; d <= 30; d += 3) {
                const auto r1 = count_certified(sys, d);
                const auto r4 = count_certified(sys, d, {4});
                CHECK(same_report(r1, r4));
                CHECK(r1.a_d >= prev);
                prev = r1.a_d;
                check_report_shape(r1);
            }
            const auto caps = candidate_caps(sys, 6);
            const auto n1 = count_naive(sys, 6, std::min<std::int64_t>(caps.n_max, 25),
                                        std::min<std::int64_t>(caps.m_max, 25));
            const auto n3 = count_naive(sys, 6, std::min<std::int64_t>(caps.n_max, 25),
                                        std::min<std::int64_t>(caps.m_max, 25), {3});
            CHECK(same_report(n1, n3));
        }
    }

    TEST_CASE("nothing counted on the line beyond the cutoff")
    {
        const std::vector<std::pair<PowerSumSystem, std::int64_t>> samples{
            {pillai(), 10}, {pillai(), 25}, {cancel(), 20}, {single("x", "x^2+x", "-x", "x^2+1"), 15}};
        for (const auto& [sys, d] : samples) {
            const std::int64_t cutoff = line_cutoff(sys, d);
            int checked = 0;
            for (const auto& p : line_pairs(sys, 4 * cutoff + 40)) {
                if (std::min(p.n, p.m) <= cutoff) continue;
                const auto D = d_value_expanded(sys, p.n, p.m);
                CHECK(!(D.is_finite() && D.value() <= d));
                if (++checked == 5) break;
            }
            CHECK(checked == 5);
        }
    }

    TEST_CASE("coefficient budget surfaces as an error")
    {
        CHECK_THROWS_AS(count_certified(cancel(), 200, {1, 3}), ResourceCapError);
        CHECK(count_certified(cancel(), 200).a_d == 100 * 100 + 1);
    }

    TEST_CASE("asymptotic series")
    {
        const auto rows = asymptotic_series(pillai(), {30, 60, 120, 240});
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].a_d == 145);
        CHECK(rows[1].a_d == 590);
        CHECK(rows[2].a_d == 2380);
        CHECK(rows[3].a_d == 9560);
        CHECK(rows[3].target == 9600);
        CHECK(rows[3].ratio == Rational(239, 240));
        CHECK(rows[1].ratio == Rational(59, 60));
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
        CHECK_THROWS_AS(asymptotic_series(pillai(), {}), ValidationError);
        CHECK_THROWS_AS(asymptotic_series(pillai(), {60, 30}), ValidationError);
        CHECK_THROWS_AS(asymptotic_series(pillai(), {0, 30}), ValidationError);
    }

    TEST_CASE("decimal rendering")
    {
        CHECK(to_decimal(Rational(29, 30)) == "0.9666666667");
        CHECK(to_decimal(Rational(239, 240)) == "0.9958333333");
        CHECK(to_decimal(Rational(150)) == "150.0000000");
        CHECK(to_decimal(Rational(2, 3)) == "0.6666666667");
        CHECK(to_decimal(Rational(1, 8), 3) == "0.125");
    }
}
