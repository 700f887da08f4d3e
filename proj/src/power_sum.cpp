#include "powersum/power_sum.hpp"

#include <algorithm>
#include <string>

#include "powersum/errors.hpp"

namespace powersum {

namespace {

void validate_side(const std::vector<PowerTerm>& terms, const char* side, const char* coeff_name,
                   const char* root_name)
{
    if (terms.empty()) throw ValidationError(std::string(side) + " power sum has no terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = std::string(side) + " term " + std::to_string(i + 1);
        if (terms[i].coeff.is_zero()) throw ValidationError(where + ": coefficient " + coeff_name + " is zero");
        if (terms[i].root.is_constant())
            throw ValidationError(where + ": root " + root_name + " must be non-constant");
    }
    const std::int64_t dominant = terms.front().root.deg();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].root.deg() >= dominant)
            throw ValidationError(std::string(side) + " term " + std::to_string(i + 1) + ": deg " + root_name +
                                  " = " + std::to_string(terms[i].root.deg()) +
                                  " is not below the dominant degree " + std::to_string(dominant));
    }
}

std::int64_t threshold(const std::vector<PowerTerm>& terms, int base)
{
    std::int64_t t = std::max(1, base);
    const std::int64_t da1 = terms.front().coeff.deg();
    const std::int64_t dp1 = terms.front().root.deg();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        // da1 + n dp1 > dai + n dpi  <=>  n > (dai - da1) / (dp1 - dpi)
        const std::int64_t num = terms[i].coeff.deg() - da1;
        const std::int64_t den = dp1 - terms[i].root.deg();
        t = std::max(t, floor_div(num, den) + 1);
    }
    return t;
}

// Largest finite degree among the expansions for exponents in [base, limit).
ExtDegree strip_max_degree(const std::vector<PowerTerm>& terms, int base, std::int64_t limit)
{
    ExtDegree best;
    for (std::int64_t e = base; e < limit; ++e)
        best = max(best, eval_terms(terms, static_cast<std::uint64_t>(e)).degree());
    return best;
}

struct ValidityData {
    Thresholds nm;
    ExtDegree left_strip, right_strip;
};

ValidityData validity_data(const PowerSumSystem& sys)
{
    const auto nm = dominance_thresholds(sys);
    return {nm, strip_max_degree(sys.left(), sys.exponent_base(), nm.left),
            strip_max_degree(sys.right(), sys.exponent_base(), nm.right)};
}

bool conditions_hold(const PowerSumSystem& sys, const ValidityData& v, std::int64_t d)
{
    const auto& l = sys.left_dominant();
    const auto& r = sys.right_dominant();
    return v.left_strip < d && v.right_strip < d &&
           d - l.coeff.deg() > (v.nm.left + 2) * l.root.deg() &&
           d - r.coeff.deg() > (v.nm.right + 2) * r.root.deg();
}

} // namespace

PowerSumSystem::PowerSumSystem(std::vector<PowerTerm> left, std::vector<PowerTerm> right, int exponent_base)
    : left_(std::move(left)), right_(std::move(right)), exponent_base_(exponent_base)
{
    if (exponent_base_ != 0 && exponent_base_ != 1)
        throw ValidationError("exponent_base must be 0 or 1, got " + std::to_string(exponent_base_));
    validate_side(left_, "left", "a", "p");
    validate_side(right_, "right", "b", "q");
}

PowerSumSystem PowerSumSystem::with_exponent_base(int base) const
{
    return PowerSumSystem(left_, right_, base);
}

Thresholds dominance_thresholds(const PowerSumSystem& sys)
{
    return {threshold(sys.left(), sys.exponent_base()), threshold(sys.right(), sys.exponent_base())};
}

Polynomial eval_terms(const std::vector<PowerTerm>& terms, std::uint64_t e)
{
    Polynomial acc;
    for (const auto& t : terms) acc += t.coeff * pow(t.root, e);
    return acc;
}

static void require_exponent(const PowerSumSystem& sys, std::int64_t e)
{
    if (e < sys.exponent_base())
        throw ValidationError("exponent " + std::to_string(e) + " below exponent_base " +
                              std::to_string(sys.exponent_base()));
}

Polynomial eval_left(const PowerSumSystem& sys, std::int64_t n)
{
    require_exponent(sys, n);
    return eval_terms(sys.left(), static_cast<std::uint64_t>(n));
}

Polynomial eval_right(const PowerSumSystem& sys, std::int64_t m)
{
    require_exponent(sys, m);
    return eval_terms(sys.right(), static_cast<std::uint64_t>(m));
}

std::int64_t left_closed_degree(const PowerSumSystem& sys, std::int64_t n)
{
    return sys.left_dominant().coeff.deg() + n * sys.left_dominant().root.deg();
}

std::int64_t right_closed_degree(const PowerSumSystem& sys, std::int64_t m)
{
    return sys.right_dominant().coeff.deg() + m * sys.right_dominant().root.deg();
}

ExtDegree left_degree(const PowerSumSystem& sys, std::int64_t n)
{
    require_exponent(sys, n);
    if (n >= dominance_thresholds(sys).left) return ExtDegree(left_closed_degree(sys, n));
    return eval_left(sys, n).degree();
}

ExtDegree right_degree(const PowerSumSystem& sys, std::int64_t m)
{
    require_exponent(sys, m);
    if (m >= dominance_thresholds(sys).right) return ExtDegree(right_closed_degree(sys, m));
    return eval_right(sys, m).degree();
}

bool validity_conditions_hold(const PowerSumSystem& sys, std::int64_t d)
{
    return conditions_hold(sys, validity_data(sys), d);
}

std::int64_t d_min_valid(const PowerSumSystem& sys)
{
    const auto v = validity_data(sys);
    // Every condition is monotone in d, so the scan stops at the first hit.
    std::int64_t d = 0;
    while (!conditions_hold(sys, v, d)) ++d;
    return d;
}

} // namespace powersum
