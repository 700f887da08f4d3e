#include "verify_suite.hpp"

#include <functional>
#include <random>

#include "builtin_systems.hpp"
#include "powersum/degree_counter.hpp"
#include "powersum/function_field.hpp"
#include "powersum/random_inputs.hpp"
#include "powersum/serialize.hpp"

namespace powersum::tools {

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe)
    {
        if (ok) {
            ++r_.passed;
            return;
        }
        ++r_.failed;
        if (r_.first_failures.size() < 5) r_.first_failures.push_back(describe());
    }
    SuiteResult take() { return std::move(r_); }

private:
    SuiteResult r_;
};

using RF = RationalFunction;

void height_suites(const VerifyOptions& opts, std::vector<SuiteResult>& out)
{
    std::mt19937_64 rng(opts.seed);
    Recorder a("height_nonneg_inverse"), b("height_sum_bounds"), c("height_product_bounds"), d("height_power"),
        e("height_zero_iff_constant"), f("height_composition"), agree("height_equals_height_fast"),
        additive("valuation_additivity");
    const int cap = opts.factor_cap;
    for (std::size_t i = 0; i < opts.samples; ++i) {
        const RF x = random_rational_function(rng, 8, 5);
        const RF y = random_rational_function(rng, 8, 5);
        const Height hx = height(x, cap), hy = height(y, cap);
        const auto show = [&] { return x.to_string() + " ; " + y.to_string(); };

        agree.check(hx == height_fast(x) && hy == height_fast(y), show);
        a.check(hx >= Height(0) && hx == height(x.inverse(), cap), show);

        const RF s = x + y;
        if (!s.is_zero()) {
            const auto hs = height_fast(s).value();
            b.check(hx.value() - hy.value() <= hs && hs <= hx.value() + hy.value() &&
                        hy.value() - hx.value() <= hs,
                    show);
        }
        const auto hp = height_fast(x * y).value();
        c.check(hx.value() - hy.value() <= hp && hp <= hx.value() + hy.value() && hy.value() - hx.value() <= hp,
                show);

        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        d.check(height_fast(pow(x, n)).value() == n * hx.value() &&
                    height_fast(pow(x, -n)).value() == n * hx.value(),
                show);

        e.check((hx == Height(0)) == x.is_constant(), show);

        const Polynomial outer = random_polynomial(rng, std::uniform_int_distribution<int>(0, 4)(rng), 3);
        f.check(height_fast(compose(outer, x)).value() == outer.deg() * hx.value(), show);

        bool add_ok = true;
        for (const auto& [v, nu] : places_of(x, cap)) add_ok = add_ok && valuation(x * y, v) == nu + valuation(y, v);
        for (const auto& [v, nu] : places_of(y, cap)) add_ok = add_ok && valuation(x * y, v) == nu + valuation(x, v);
        additive.check(add_ok, show);
    }
    for (auto* r : {&a, &b, &c, &d, &e, &f, &agree, &additive}) out.push_back(r->take());

    Recorder sf("sum_formula");
    for (std::size_t i = 0; i < opts.samples / 2; ++i) {
        const RF x = random_rational_function(rng, 8, 5);
        sf.check(sum_formula_check(x, cap) == 0, [&] { return x.to_string(); });
    }
    out.push_back(sf.take());
}

void counting_suites(const VerifyOptions& opts, std::vector<SuiteResult>& out)
{
    const CountOptions copts{opts.threads, opts.budget_bits};
    Recorder oracle("certified_vs_naive_builtin");
    const auto pillai = system_from_json(json::parse(builtin::pillai23));
    const auto cancel = system_from_json(json::parse(builtin::cancel_x2p1_x2m1));
    for (const auto& [sys, d_max] : {std::pair{&pillai, 60}, std::pair{&cancel, 30}}) {
        for (std::int64_t dd = 0; dd <= d_max; ++dd) {
            const auto caps = candidate_caps(*sys, dd);
            const auto naive = count_naive(*sys, dd, caps.n_max, caps.m_max, copts);
            const auto cert = count_certified(*sys, dd, copts);
            oracle.check(naive.certified && naive.a_d == cert.a_d, [&] {
                return "d=" + std::to_string(dd) + " certified " + std::to_string(cert.a_d) + " naive " +
                       std::to_string(naive.a_d);
            });
        }
    }
    out.push_back(oracle.take());

    Recorder ex("builtin_examples");
    ex.check(count_certified(pillai, 240, copts).a_d == 9560, [] { return "pillai a_240 != 9560"; });
    const auto r20 = count_certified(cancel, 20, copts);
    bool has_11 = false;
    for (const auto& p : r20.line_pairs_counted) has_11 = has_11 || (p.n == 11 && p.m == 11);
    ex.check(r20.a_d == 101 && has_11, [] { return "cancellation system a_20 != 101 or (11,11) missing"; });
    ex.check(d_value(pillai, 3, 2).is_minus_infinity(), [] { return "pillai D(3,2) is not -inf"; });
    const auto ctx = BMContext::from_system(pillai, 10);
    ex.check(c_bm(ctx) == 16 && s_size_bound(ctx) == 16, [] { return "pillai C_BM / |S| bound at d=10"; });
    out.push_back(ex.take());
}

} // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opts)
{
    std::vector<SuiteResult> out;
    height_suites(opts, out);
    counting_suites(opts, out);
    return out;
}

} // namespace powersum::tools
