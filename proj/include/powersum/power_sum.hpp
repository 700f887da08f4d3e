#ifndef POWERSUM_POWER_SUM_HPP
#define POWERSUM_POWER_SUM_HPP

#include <cstdint>
#include <vector>

#include "powersum/polynomial.hpp"

namespace powersum {

/// One summand coeff(x) * root(x)^n of a polynomial power sum.
struct PowerTerm {
    Polynomial coeff; // a_i or b_j, nonzero
    Polynomial root;  // p_i or q_j, non-constant
};

struct Thresholds {
    std::int64_t left;  // N
    std::int64_t right; // M
};

/*
 * The pair of power sums
 *
 *     L(n) = sum_i a_i p_i^n,    R(m) = sum_j b_j q_j^m
 *
 * with dominant first terms: deg p_1 > deg p_i and deg q_1 > deg q_j for
 * every i, j >= 2. Construction validates this and throws ValidationError
 * naming the offending side and (1-based) term index.
 */
class PowerSumSystem {
public:
    PowerSumSystem(std::vector<PowerTerm> left, std::vector<PowerTerm> right, int exponent_base = 1);

    const std::vector<PowerTerm>& left() const { return left_; }
    const std::vector<PowerTerm>& right() const { return right_; }
    int exponent_base() const { return exponent_base_; }

    /// Same terms, different smallest exponent.
    PowerSumSystem with_exponent_base(int base) const;

    const PowerTerm& left_dominant() const { return left_.front(); }
    const PowerTerm& right_dominant() const { return right_.front(); }

private:
    std::vector<PowerTerm> left_;
    std::vector<PowerTerm> right_;
    int exponent_base_;
};

/// Smallest N >= max(1, exponent_base) such that the first term strictly
/// dominates in degree for every n >= N (and likewise M on the right).
Thresholds dominance_thresholds(const PowerSumSystem& sys);

/// Full expansion of sum coeff * root^e.
Polynomial eval_terms(const std::vector<PowerTerm>& terms, std::uint64_t e);
Polynomial eval_left(const PowerSumSystem& sys, std::int64_t n);
Polynomial eval_right(const PowerSumSystem& sys, std::int64_t m);

/// deg a_1 + n deg p_1, valid for n >= N.
std::int64_t left_closed_degree(const PowerSumSystem& sys, std::int64_t n);
std::int64_t right_closed_degree(const PowerSumSystem& sys, std::int64_t m);

/// Closed form when n >= N, degree of the expansion otherwise.
ExtDegree left_degree(const PowerSumSystem& sys, std::int64_t n);
ExtDegree right_degree(const PowerSumSystem& sys, std::int64_t m);

/// Least d at which all four validity conditions of the counting argument
/// hold (strip degrees below d, both rectangle sides longer than N+2, M+2).
std::int64_t d_min_valid(const PowerSumSystem& sys);

/// The four conditions evaluated at a given d.
bool validity_conditions_hold(const PowerSumSystem& sys, std::int64_t d);

/// floor(a / b) for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

} // namespace powersum

#endif
