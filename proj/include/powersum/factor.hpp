#ifndef POWERSUM_FACTOR_HPP
#define POWERSUM_FACTOR_HPP

#include <vector>

#include "powersum/polynomial.hpp"

namespace powersum {

struct FactorPower {
    Polynomial factor; // monic
    int multiplicity;

    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Yun's algorithm: f = lc(f) * prod g_i^i, g_i monic squarefree and pairwise coprime.
/// Only nonconstant g_i are listed, ascending by multiplicity.
std::vector<FactorPower> squarefree_decomposition(const Polynomial& f);

inline constexpr int default_factor_degree_cap = 12;

struct Factorization {
    Rational constant;
    std::vector<FactorPower> factors; // monic irreducible over Q

    /// constant * prod factor^multiplicity
    Polynomial expand() const;
};

/// Complete factorization over Q: rational roots first, then Kronecker's
/// interpolation search on what remains. Factors are sorted by (degree,
/// coefficients). Throws FactorizationInfeasible when deg f > degree_cap.
Factorization factor(const Polynomial& f, int degree_cap = default_factor_degree_cap);

/// All rational roots of f (f != 0), ascending, without multiplicity.
std::vector<Rational> rational_roots(const Polynomial& f);

/// Total order used for sorting factors and places: degree first, then
/// coefficients from the top down.
bool polynomial_less(const Polynomial& f, const Polynomial& g);

} // namespace powersum

#endif
