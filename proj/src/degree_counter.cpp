#include "powersum/degree_counter.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "powersum/errors.hpp"

namespace powersum {

// ---------------------------------------------------------------- C_BM and |S|

BMContext BMContext::from_system(const PowerSumSystem& sys, std::int64_t d, std::int64_t genus)
{
    BMContext ctx;
    ctx.k = static_cast<std::int64_t>(sys.left().size());
    ctx.l = static_cast<std::int64_t>(sys.right().size());
    ctx.d = d;
    ctx.genus = genus;
    for (const auto& t : sys.left()) {
        ctx.deg_a.push_back(t.coeff.deg());
        ctx.deg_p.push_back(t.root.deg());
    }
    for (const auto& t : sys.right()) {
        ctx.deg_b.push_back(t.coeff.deg());
        ctx.deg_q.push_back(t.root.deg());
    }
    ctx.validate();
    return ctx;
}

void BMContext::validate() const
{
    if (k < 1 || l < 1) throw ValidationError("BM context needs k, l >= 1");
    if (d < 0) throw ValidationError("BM context needs d >= 0");
    if (genus < 0) throw ValidationError("genus must be nonnegative");
    auto sz = [](const std::vector<std::int64_t>& v) { return static_cast<std::int64_t>(v.size()); };
    if (sz(deg_a) != k || sz(deg_p) != k || sz(deg_b) != l || sz(deg_q) != l)
        throw ValidationError("BM context degree lists do not match k and l");
    auto all_at_least = [](const std::vector<std::int64_t>& v, std::int64_t lo) {
        return std::all_of(v.begin(), v.end(), [lo](std::int64_t x) { return x >= lo; });
    };
    if (!all_at_least(deg_a, 0) || !all_at_least(deg_b, 0))
        throw ValidationError("coefficient degrees must be nonnegative");
    if (!all_at_least(deg_p, 1) || !all_at_least(deg_q, 1))
        throw ValidationError("root degrees must be positive (roots are non-constant)");
}

std::int64_t s_size_bound(const BMContext& ctx)
{
    ctx.validate();
    auto sum = [](const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    return 1 + ctx.d + sum(ctx.deg_a) + sum(ctx.deg_p) + sum(ctx.deg_b) + sum(ctx.deg_q);
}

std::int64_t c_bm(const BMContext& ctx)
{
    return binom2(ctx.k + ctx.l) * (s_size_bound(ctx) + std::max<std::int64_t>(0, 2 * ctx.genus - 2));
}

// ---------------------------------------------------------------- the line

namespace {

// x with a x = 1 mod m, gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    std::int64_t r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return ((t0 % m) + m) % m;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t min_root_degree(const PowerSumSystem& sys)
{
    std::int64_t md = sys.left().front().root.deg();
    for (const auto& t : sys.left()) md = std::min(md, t.root.deg());
    for (const auto& t : sys.right()) md = std::min(md, t.root.deg());
    return md;
}

} // namespace

std::vector<ExponentPair> line_pairs(const PowerSumSystem& sys, std::int64_t n_cap)
{
    const std::int64_t base = sys.exponent_base();
    const std::int64_t da = sys.left_dominant().coeff.deg(), dp = sys.left_dominant().root.deg();
    const std::int64_t db = sys.right_dominant().coeff.deg(), dq = sys.right_dominant().root.deg();
    // n dp - m dq = db - da
    const std::int64_t c = db - da;
    const std::int64_t g = std::gcd(dp, dq);
    std::vector<ExponentPair> out;
    if (c % g != 0) return out;
    const std::int64_t step_n = dq / g;
    const std::int64_t residue = step_n == 1 ? 0 : (((c / g) % step_n + step_n) % step_n) * mod_inverse(dp / g, step_n) % step_n;
    // m >= base  <=>  n >= (db + base dq - da) / dp
    std::int64_t n = std::max(base, ceil_div(db + base * dq - da, dp));
    n += ((residue - n) % step_n + step_n) % step_n;
    for (; n <= n_cap; n += step_n) {
        const std::int64_t m = (da + n * dp - db) / dq;
        out.push_back({n, m});
    }
    return out;
}

std::int64_t line_cutoff(const PowerSumSystem& sys, std::int64_t d)
{
    return 2 * c_bm(BMContext::from_system(sys, d)) / min_root_degree(sys);
}

// ---------------------------------------------------------------- D(n, m)

DegreeEvaluator::DegreeEvaluator(const PowerSumSystem& sys, std::size_t budget_bits)
    : sys_(&sys), budget_bits_(budget_bits), nm_(dominance_thresholds(sys))
{
}

const Polynomial& DegreeEvaluator::left_expansion(std::int64_t n)
{
    auto it = left_cache_.find(n);
    if (it == left_cache_.end()) it = left_cache_.emplace(n, eval_left(*sys_, n)).first;
    return it->second;
}

const Polynomial& DegreeEvaluator::right_expansion(std::int64_t m)
{
    auto it = right_cache_.find(m);
    if (it == right_cache_.end()) it = right_cache_.emplace(m, eval_right(*sys_, m)).first;
    return it->second;
}

namespace {

Rational dominant_lead(const PowerTerm& t, std::int64_t e)
{
    const Rational& lp = t.root.leading_coeff();
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), lp.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), lp.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(num, den);
    return r * t.coeff.leading_coeff();
}

} // namespace

DegreeEvaluator::Side DegreeEvaluator::left_side(std::int64_t n)
{
    if (n >= nm_.left) return {ExtDegree(left_closed_degree(*sys_, n)), Rational(0)};
    const Polynomial& e = left_expansion(n);
    return {e.degree(), e.is_zero() ? Rational(0) : e.leading_coeff()};
}

DegreeEvaluator::Side DegreeEvaluator::right_side(std::int64_t m)
{
    if (m >= nm_.right) return {ExtDegree(right_closed_degree(*sys_, m)), Rational(0)};
    const Polynomial& e = right_expansion(m);
    return {e.degree(), e.is_zero() ? Rational(0) : e.leading_coeff()};
}

ExtDegree DegreeEvaluator::d_value(std::int64_t n, std::int64_t m)
{
    ++stats_.calls;
    const int base = sys_->exponent_base();
    if (n < base || m < base) throw ValidationError("exponent below exponent_base");
    Side l = left_side(n), r = right_side(m);
    if (l.degree != r.degree || l.degree.is_minus_infinity()) {
        ++stats_.decided_by_degree;
        return max(l.degree, r.degree);
    }
    // Closed-form sides get their leading coefficient lazily: only ties need it.
    if (n >= nm_.left) l.lead = dominant_lead(sys_->left_dominant(), n);
    if (m >= nm_.right) r.lead = dominant_lead(sys_->right_dominant(), m);
    if (sgn(l.lead + r.lead) != 0) {
        ++stats_.decided_by_leading_coeff;
        return l.degree;
    }
    ++stats_.top_down_scans;
    std::vector<ExponentTerm> terms;
    for (const auto& t : sys_->left()) terms.push_back({&t.coeff, &t.root, static_cast<std::uint64_t>(n)});
    for (const auto& t : sys_->right()) terms.push_back({&t.coeff, &t.root, static_cast<std::uint64_t>(m)});
    return top_down_degree(terms, budget_bits_);
}

ExtDegree DegreeEvaluator::d_value_expanded(std::int64_t n, std::int64_t m)
{
    return (left_expansion(n) + right_expansion(m)).degree();
}

ExtDegree d_value(const PowerSumSystem& sys, std::int64_t n, std::int64_t m)
{
    return DegreeEvaluator(sys).d_value(n, m);
}

ExtDegree d_value_expanded(const PowerSumSystem& sys, std::int64_t n, std::int64_t m)
{
    return (eval_left(sys, n) + eval_right(sys, m)).degree();
}

// ---------------------------------------------------------------- counting

namespace {

enum class Region { rectangle, n_strip, m_strip, line };

struct Task {
    std::int64_t n, m;
    Region region;
};

struct Geometry {
    std::int64_t base, da, dp, db, dq;
    Thresholds nm;
    std::int64_t rect_n, rect_m; // floor((d - deg a_1)/deg p_1), floor((d - deg b_1)/deg q_1)
    std::int64_t c_bm, cutoff;

    Geometry(const PowerSumSystem& sys, std::int64_t d)
        : base(sys.exponent_base()), da(sys.left_dominant().coeff.deg()), dp(sys.left_dominant().root.deg()),
          db(sys.right_dominant().coeff.deg()), dq(sys.right_dominant().root.deg()), nm(dominance_thresholds(sys)),
          rect_n(floor_div(d - da, dp)), rect_m(floor_div(d - db, dq)),
          c_bm(powersum::c_bm(BMContext::from_system(sys, d))), cutoff(line_cutoff(sys, d))
    {
    }

    // Beyond these, the closed-form side alone exceeds max(d, strip degree).
    std::int64_t strip_m_top(std::int64_t d, ExtDegree strip) const
    {
        const std::int64_t top = strip.is_finite() ? std::max(d, strip.value()) : d;
        return std::max(nm.right - 1, floor_div(top - db, dq));
    }
    std::int64_t strip_n_top(std::int64_t d, ExtDegree strip) const
    {
        const std::int64_t top = strip.is_finite() ? std::max(d, strip.value()) : d;
        return floor_div(top - da, dp);
    }
    // min(n, m) <= cutoff on the line means n <= line_n_cap.
    std::int64_t line_n_cap() const { return std::max(cutoff, floor_div(db + cutoff * dq - da, dp)); }
    std::int64_t line_m_cap() const { return std::max(cutoff, floor_div(da + cutoff * dp - db, dq)); }
};

void check_d(std::int64_t d)
{
    if (d < 0) throw ValidationError("d must be nonnegative");
}

template <class Fn>
auto parallel_chunks(std::size_t count, unsigned threads, Fn fn)
{
    using Result = decltype(fn(std::size_t{0}, std::size_t{0}));
    threads = std::max(1U, threads);
    const std::size_t chunk = std::max<std::size_t>(1, (count + threads - 1) / threads);
    std::vector<Result> parts;
    if (threads == 1 || count <= 1) {
        parts.push_back(fn(0, count));
        return parts;
    }
    std::vector<std::future<Result>> futures;
    for (std::size_t lo = 0; lo < count; lo += chunk)
        futures.push_back(std::async(std::launch::async, fn, lo, std::min(count, lo + chunk)));
    for (auto& f : futures) parts.push_back(f.get());
    return parts;
}

std::vector<ExtDegree> evaluate_tasks(const PowerSumSystem& sys, const std::vector<Task>& tasks,
                                      const CountOptions& opts)
{
    auto parts = parallel_chunks(tasks.size(), opts.threads, [&](std::size_t lo, std::size_t hi) {
        DegreeEvaluator ev(sys, opts.budget_bits);
        std::vector<ExtDegree> out;
        out.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) out.push_back(ev.d_value(tasks[i].n, tasks[i].m));
        return out;
    });
    std::vector<ExtDegree> all;
    all.reserve(tasks.size());
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

std::vector<Polynomial> expansion_range(const std::vector<PowerTerm>& terms, std::int64_t lo, std::int64_t hi)
{
    std::vector<Polynomial> out;
    if (hi < lo) return out;
    std::vector<Polynomial> powers;
    for (const auto& t : terms) powers.push_back(pow(t.root, static_cast<std::uint64_t>(lo)));
    for (std::int64_t e = lo; e <= hi; ++e) {
        Polynomial acc;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            acc += terms[i].coeff * powers[i];
            powers[i] = powers[i] * terms[i].root;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

ExtDegree degree_of_sum(const Polynomial& f, const Polynomial& g)
{
    const auto a = f.coefficients(), b = g.coefficients();
    Rational s;
    for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
        s = (i < a.size() ? a[i] : Rational(0)) + (i < b.size() ? b[i] : Rational(0));
        if (sgn(s) != 0) return ExtDegree(static_cast<std::int64_t>(i));
    }
    return ExtDegree::minus_infinity();
}

} // namespace

CandidateCaps candidate_caps(const PowerSumSystem& sys, std::int64_t d)
{
    check_d(d);
    const Geometry g(sys, d);
    CandidateCaps caps{std::max(g.nm.left - 1, g.rect_n), std::max(g.nm.right - 1, g.rect_m)};
    for (std::int64_t n = g.base; n < g.nm.left; ++n)
        caps.m_max = std::max(caps.m_max, g.strip_m_top(d, eval_left(sys, n).degree()));
    for (std::int64_t m = g.base; m < g.nm.right; ++m)
        caps.n_max = std::max(caps.n_max, g.strip_n_top(d, eval_right(sys, m).degree()));
    caps.n_max = std::max(caps.n_max, g.line_n_cap());
    caps.m_max = std::max(caps.m_max, g.line_m_cap());
    return caps;
}

CountReport count_certified(const PowerSumSystem& sys, std::int64_t d, const CountOptions& opts)
{
    check_d(d);
    const Geometry g(sys, d);
    CountReport rep;
    rep.d = d;
    rep.thresholds = g.nm;
    rep.c_bm = g.c_bm;
    rep.line_cutoff = g.cutoff;

    std::vector<Task> tasks;

    // Case 1: inside the rectangle every off-line pair has D = max(...) <= d.
    // Only the degree-matching pairs need a look, to drop zero sums.
    std::int64_t rect_size = 0;
    if (g.rect_n >= g.nm.left && g.rect_m >= g.nm.right) {
        rect_size = (g.rect_n - g.nm.left + 1) * (g.rect_m - g.nm.right + 1);
        for (const auto& p : line_pairs(sys, g.rect_n))
            if (p.n >= g.nm.left && p.m >= g.nm.right && p.m <= g.rect_m) tasks.push_back({p.n, p.m, Region::rectangle});
    }

    // Strips below the thresholds: evaluated pair by pair.
    for (std::int64_t n = g.base; n < g.nm.left; ++n) {
        const std::int64_t m_top = g.strip_m_top(d, eval_left(sys, n).degree());
        for (std::int64_t m = g.base; m <= m_top; ++m) tasks.push_back({n, m, Region::n_strip});
    }
    for (std::int64_t m = g.base; m < g.nm.right; ++m) {
        const std::int64_t n_top = g.strip_n_top(d, eval_right(sys, m).degree());
        for (std::int64_t n = g.nm.left; n <= n_top; ++n) tasks.push_back({n, m, Region::m_strip});
    }

    // Cases 2 and 3 contribute nothing: the larger closed-form side exceeds d.
    // Case 4: degree-matching pairs beyond the rectangle, complete up to the
    // Brownawell-Masser cutoff on min(n, m).
    for (const auto& p : line_pairs(sys, g.line_n_cap())) {
        if (p.n < g.nm.left || p.m < g.nm.right || p.n <= g.rect_n) continue;
        if (std::min(p.n, p.m) > g.cutoff) continue;
        tasks.push_back({p.n, p.m, Region::line});
    }

    const auto degrees = evaluate_tasks(sys, tasks, opts);

    rep.rectangle_count = rect_size;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        const ExtDegree D = degrees[i];
        if (D.is_minus_infinity()) {
            rep.zero_sum_pairs.push_back({t.n, t.m});
            if (t.region == Region::rectangle) --rep.rectangle_count;
            continue;
        }
        switch (t.region) {
        case Region::rectangle:
            if (D > d) throw std::logic_error("rectangle pair with D > d");
            break;
        case Region::n_strip:
            if (D <= d) ++rep.small_n_strip;
            break;
        case Region::m_strip:
            if (D <= d) ++rep.small_m_strip;
            break;
        case Region::line:
            if (D <= d) rep.line_pairs_counted.push_back({t.n, t.m, D.value()});
            break;
        }
    }
    std::sort(rep.zero_sum_pairs.begin(), rep.zero_sum_pairs.end());
    rep.a_d = rep.rectangle_count + rep.small_n_strip + rep.small_m_strip +
              static_cast<std::int64_t>(rep.line_pairs_counted.size());
    rep.certified = true;
    return rep;
}

CountReport count_naive(const PowerSumSystem& sys, std::int64_t d, std::int64_t n_max, std::int64_t m_max,
                        const CountOptions& opts)
{
    check_d(d);
    const Geometry g(sys, d);
    CountReport rep;
    rep.d = d;
    rep.thresholds = g.nm;
    rep.c_bm = g.c_bm;
    rep.line_cutoff = g.cutoff;
    const auto caps = candidate_caps(sys, d);
    rep.certified = n_max >= caps.n_max && m_max >= caps.m_max;

    const auto lefts = expansion_range(sys.left(), g.base, n_max);
    const auto rights = expansion_range(sys.right(), g.base, m_max);

    struct Slice {
        std::int64_t rect = 0, n_strip = 0, m_strip = 0;
        std::vector<CountedPair> line;
        std::vector<ExponentPair> zeros;
    };
    auto slices = parallel_chunks(lefts.size(), opts.threads, [&](std::size_t lo, std::size_t hi) {
        Slice s;
        for (std::size_t i = lo; i < hi; ++i) {
            const std::int64_t n = g.base + static_cast<std::int64_t>(i);
            for (std::size_t j = 0; j < rights.size(); ++j) {
                const std::int64_t m = g.base + static_cast<std::int64_t>(j);
                const ExtDegree D = degree_of_sum(lefts[i], rights[j]);
                if (D.is_minus_infinity()) {
                    s.zeros.push_back({n, m});
                    continue;
                }
                if (D > d) continue;
                if (n < g.nm.left) ++s.n_strip;
                else if (m < g.nm.right) ++s.m_strip;
                else if (n <= g.rect_n && m <= g.rect_m) ++s.rect;
                else s.line.push_back({n, m, D.value()});
            }
        }
        return s;
    });
    for (auto& s : slices) {
        rep.rectangle_count += s.rect;
        rep.small_n_strip += s.n_strip;
        rep.small_m_strip += s.m_strip;
        rep.line_pairs_counted.insert(rep.line_pairs_counted.end(), s.line.begin(), s.line.end());
        rep.zero_sum_pairs.insert(rep.zero_sum_pairs.end(), s.zeros.begin(), s.zeros.end());
    }
    rep.a_d = rep.rectangle_count + rep.small_n_strip + rep.small_m_strip +
              static_cast<std::int64_t>(rep.line_pairs_counted.size());
    return rep;
}

std::vector<SeriesRow> asymptotic_series(const PowerSumSystem& sys, const std::vector<std::int64_t>& d_list,
                                         const CountOptions& opts)
{
    if (d_list.empty()) throw ValidationError("d list is empty");
    for (std::size_t i = 0; i < d_list.size(); ++i) {
        if (d_list[i] <= 0) throw ValidationError("series needs positive d values");
        if (i > 0 && d_list[i] <= d_list[i - 1]) throw ValidationError("d list must be strictly ascending");
    }
    const std::int64_t dp = sys.left_dominant().root.deg(), dq = sys.right_dominant().root.deg();
    std::vector<SeriesRow> rows;
    for (std::int64_t d : d_list) {
        const auto rep = count_certified(sys, d, opts);
        Rational target(Integer(d) * d, Integer(dp) * dq);
        target.canonicalize();
        Rational ratio = Rational(Integer(rep.a_d)) / target;
        rows.push_back({d, rep.a_d, target, ratio});
    }
    return rows;
}

std::string to_decimal(const Rational& q, int significant)
{
    if (significant < 1) throw ValidationError("need at least one significant digit");
    if (sgn(q) == 0) return "0";
    Rational a = abs(q);
    // 10^e <= a < 10^(e+1)
    long e = 0;
    auto power10 = [](long k) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
        return k < 0 ? Rational(Integer(1), r) : Rational(r);
    };
    while (a >= power10(e + 1)) ++e;
    while (a < power10(e)) --e;
    // round(a * 10^(sig-1-e)) half up
    Rational scaled = a * power10(significant - 1 - e);
    Integer r = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
    Integer limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(significant));
    if (r >= limit) {
        r /= 10;
        ++e;
    }
    std::string digits = r.get_str();
    std::string out;
    if (e >= significant - 1) {
        out = digits + std::string(static_cast<std::size_t>(e - (significant - 1)), '0');
    } else if (e < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    } else {
        out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." + digits.substr(static_cast<std::size_t>(e + 1));
    }
    return (sgn(q) < 0 ? "-" : "") + out;
}

} // namespace powersum
