#ifndef POWERSUM_DEGREE_COUNTER_HPP
#define POWERSUM_DEGREE_COUNTER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "powersum/power_sum.hpp"
#include "powersum/top_down.hpp"

namespace powersum {

/// Degree data entering C_BM and the |S| bound.
struct BMContext {
    std::int64_t k = 1;
    std::int64_t l = 1;
    std::int64_t d = 0;
    std::vector<std::int64_t> deg_a, deg_p, deg_b, deg_q;
    std::int64_t genus = 0;

    static BMContext from_system(const PowerSumSystem& sys, std::int64_t d, std::int64_t genus = 0);
    /// Throws ValidationError on inconsistent lengths or impossible degrees.
    void validate() const;
};

/// 1 + d + sum deg a_i + sum deg p_i + sum deg b_j + sum deg q_j
std::int64_t s_size_bound(const BMContext& ctx);
/// binom(k+l, 2) * (s_size_bound + max(0, 2 genus - 2)); genus 0 is the plain product.
std::int64_t c_bm(const BMContext& ctx);

constexpr std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

struct ExponentPair {
    std::int64_t n;
    std::int64_t m;
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
    friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
};

/// Pairs on the degree-matching line deg a_1 + n deg p_1 = deg b_1 + m deg q_1
/// with exponent_base <= n <= n_cap and m >= exponent_base, ascending in n.
/// Solved as a linear congruence; m is never searched.
std::vector<ExponentPair> line_pairs(const PowerSumSystem& sys, std::int64_t n_cap);

/// Largest exponent on either side of a line pair that can still satisfy
/// 0 <= D <= d: floor(2 C_BM / min(min deg p_i, min deg q_j)).
std::int64_t line_cutoff(const PowerSumSystem& sys, std::int64_t d);

/*
 * Memoizing evaluator of D(n, m) = deg(L(n) + R(m)). Not thread-safe; give
 * each worker its own instance.
 */
class DegreeEvaluator {
public:
    explicit DegreeEvaluator(const PowerSumSystem& sys,
                             std::size_t budget_bits = default_coefficient_budget_bits);

    /// Fast path: closed-form degrees decide unless they tie, then the
    /// leading coefficients decide unless they cancel, then the top-down scan.
    ExtDegree d_value(std::int64_t n, std::int64_t m);
    /// deg of the fully expanded sum, sides memoized per exponent.
    ExtDegree d_value_expanded(std::int64_t n, std::int64_t m);

    const Polynomial& left_expansion(std::int64_t n);
    const Polynomial& right_expansion(std::int64_t m);

    const Thresholds& thresholds() const { return nm_; }

    struct Stats {
        std::size_t calls = 0;
        std::size_t decided_by_degree = 0;
        std::size_t decided_by_leading_coeff = 0;
        std::size_t top_down_scans = 0;
    };
    const Stats& stats() const { return stats_; }

private:
    struct Side {
        ExtDegree degree;
        Rational lead; // meaningful when degree is finite
    };
    Side left_side(std::int64_t n);
    Side right_side(std::int64_t m);

    const PowerSumSystem* sys_;
    std::size_t budget_bits_;
    Thresholds nm_;
    std::map<std::int64_t, Polynomial> left_cache_, right_cache_;
    Stats stats_;
};

ExtDegree d_value(const PowerSumSystem& sys, std::int64_t n, std::int64_t m);
ExtDegree d_value_expanded(const PowerSumSystem& sys, std::int64_t n, std::int64_t m);

struct CountedPair {
    std::int64_t n;
    std::int64_t m;
    std::int64_t degree;
    friend bool operator==(const CountedPair&, const CountedPair&) = default;
};

/*
 * A_d with its region breakdown. The regions are disjoint:
 *   rectangle   N <= n <= (d - deg a_1)/deg p_1,  M <= m <= (d - deg b_1)/deg q_1
 *   n strip     n < N (any m)
 *   m strip     m < M, n >= N
 *   line        degree-matching pairs beyond the rectangle
 * and a_d = rectangle_count + small_n_strip + small_m_strip + |line_pairs_counted|.
 */
struct CountReport {
    std::int64_t d = 0;
    std::int64_t a_d = 0;
    std::int64_t rectangle_count = 0;
    std::int64_t small_n_strip = 0;
    std::int64_t small_m_strip = 0;
    std::vector<CountedPair> line_pairs_counted;
    std::vector<ExponentPair> zero_sum_pairs;
    bool certified = false;

    Thresholds thresholds{1, 1};
    std::int64_t c_bm = 0;
    std::int64_t line_cutoff = 0;
};

struct CountOptions {
    unsigned threads = 1;
    std::size_t budget_bits = default_coefficient_budget_bits;
};

/// Exponent caps that contain every pair which can satisfy 0 <= D <= d.
struct CandidateCaps {
    std::int64_t n_max;
    std::int64_t m_max;
};
CandidateCaps candidate_caps(const PowerSumSystem& sys, std::int64_t d);

/// Exact A_d following the region decomposition above; always certified.
CountReport count_certified(const PowerSumSystem& sys, std::int64_t d, const CountOptions& opts = {});

/// Brute force over [base, n_max] x [base, m_max] with full expansion.
/// certified iff the grid contains candidate_caps(sys, d).
CountReport count_naive(const PowerSumSystem& sys, std::int64_t d, std::int64_t n_max, std::int64_t m_max,
                        const CountOptions& opts = {});

struct SeriesRow {
    std::int64_t d;
    std::int64_t a_d;
    Rational target; // d^2 / (deg p_1 deg q_1)
    Rational ratio;  // a_d / target
};

/// d_list must be nonempty, strictly ascending and positive.
std::vector<SeriesRow> asymptotic_series(const PowerSumSystem& sys, const std::vector<std::int64_t>& d_list,
                                         const CountOptions& opts = {});

/// Fixed-point rendering with exactly `significant` significant digits, rounded half up.
std::string to_decimal(const Rational& q, int significant = 10);

} // namespace powersum

#endif
