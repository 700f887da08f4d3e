#ifndef POWERSUM_TOP_DOWN_HPP
#define POWERSUM_TOP_DOWN_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "powersum/polynomial.hpp"

namespace powersum {

inline constexpr std::size_t default_coefficient_budget_bits = std::size_t{1} << 20;

/// coeff * root^exponent, referenced rather than owned.
struct ExponentTerm {
    const Polynomial* coeff;
    const Polynomial* root;
    std::uint64_t exponent;
};

/*
 * Exact degree of sum_t coeff_t * root_t^exponent_t, computed from the top
 * coefficient downwards without forming the powers.
 *
 * The top coefficients of a*p^e are the low coefficients of
 * rev(a) * rev(p)^e, and the power series g = f^e (f = rev(p), f_0 != 0)
 * satisfies
 *
 *     k f_0 g_k = sum_{j=1..k} ((e+1) j - k) f_j g_{k-j},
 *
 * so each further coefficient costs O(deg p). The scan stops at the first
 * degree whose summed coefficient is nonzero; a zero sum costs a full pass.
 *
 * Throws ResourceCapError if an intermediate coefficient needs more than
 * budget_bits bits (numerator plus denominator).
 */
ExtDegree top_down_degree(std::span<const ExponentTerm> terms,
                          std::size_t budget_bits = default_coefficient_budget_bits);

} // namespace powersum

#endif
