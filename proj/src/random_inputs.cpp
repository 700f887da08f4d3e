#include "powersum/random_inputs.hpp"

namespace powersum {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

int nonzero(std::mt19937_64& rng, int bound)
{
    int v = 0;
    while (v == 0) v = uniform(rng, -bound, bound);
    return v;
}

std::vector<PowerTerm> random_side(std::mt19937_64& rng, const RandomSystemShape& shape)
{
    const int k = uniform(rng, 1, shape.max_terms);
    const int dominant = uniform(rng, k >= 2 ? 2 : 1, shape.max_degree);
    std::vector<PowerTerm> terms;
    for (int i = 0; i < k; ++i) {
        const int dp = i == 0 ? dominant : uniform(rng, 1, dominant - 1);
        terms.push_back({random_polynomial(rng, uniform(rng, 0, shape.max_degree), shape.coeff_bound),
                         random_polynomial(rng, dp, shape.coeff_bound)});
    }
    return terms;
}

} // namespace

Polynomial random_polynomial(std::mt19937_64& rng, int degree, int bound)
{
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = uniform(rng, -bound, bound);
    c[static_cast<std::size_t>(degree)] = nonzero(rng, bound);
    return Polynomial(std::move(c));
}

RationalFunction random_rational_function(std::mt19937_64& rng, int max_degree, int bound)
{
    return rf_new(random_polynomial(rng, uniform(rng, 0, max_degree), bound),
                  random_polynomial(rng, uniform(rng, 0, max_degree), bound));
}

PowerSumSystem random_system(std::mt19937_64& rng, const RandomSystemShape& shape)
{
    auto left = random_side(rng, shape);
    auto right = random_side(rng, shape);
    return PowerSumSystem(std::move(left), std::move(right), shape.exponent_base);
}

} // namespace powersum
