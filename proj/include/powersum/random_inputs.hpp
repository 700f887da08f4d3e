#ifndef POWERSUM_RANDOM_INPUTS_HPP
#define POWERSUM_RANDOM_INPUTS_HPP

#include <random>

#include "powersum/function_field.hpp"
#include "powersum/power_sum.hpp"

namespace powersum {

// Input generators shared by the property suites and `powersum verify`.

/// Degree exactly `degree`, integer coefficients in [-bound, bound], nonzero leading coefficient.
Polynomial random_polynomial(std::mt19937_64& rng, int degree, int bound);

/// num and den of degree up to max_degree each, reduced; never zero.
RationalFunction random_rational_function(std::mt19937_64& rng, int max_degree, int bound);

struct RandomSystemShape {
    int max_terms = 3;
    int max_degree = 4;
    int coeff_bound = 2;
    int exponent_base = 1;
};

/// A valid system: dominant roots of strictly largest degree on each side.
PowerSumSystem random_system(std::mt19937_64& rng, const RandomSystemShape& shape = {});

} // namespace powersum

#endif
