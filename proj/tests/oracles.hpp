#ifndef POWERSUM_TESTS_ORACLES_HPP
#define POWERSUM_TESTS_ORACLES_HPP

// Reference computations that share no code with the library: plain
// coefficient vectors, schoolbook products, closed forms.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "powersum/power_sum.hpp"

namespace oracle {

using Coeffs = std::vector<mpq_class>; // ascending

inline void trim(Coeffs& c)
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Coeffs to_coeffs(const powersum::Polynomial& f)
{
    return Coeffs(f.coefficients().begin(), f.coefficients().end());
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b)
{
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

inline Coeffs add(Coeffs a, const Coeffs& b)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

// Repeated multiplication, no squaring.
inline Coeffs power(const Coeffs& f, std::int64_t e)
{
    Coeffs r{mpq_class(1)};
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, f);
    return r;
}

// -1 stands for the zero polynomial.
inline std::int64_t deg(const Coeffs& c) { return static_cast<std::int64_t>(c.size()) - 1; }

inline Coeffs side(const std::vector<powersum::PowerTerm>& terms, std::int64_t e)
{
    Coeffs acc;
    for (const auto& t : terms) acc = add(acc, mul(to_coeffs(t.coeff), power(to_coeffs(t.root), e)));
    return acc;
}

inline std::int64_t pillai_count(std::int64_t d) { return (d / 2) * (d / 3) - d / 6; }

/// Brute force over [base, n_max] x [base, m_max]; zero sums are not counted.
inline std::int64_t brute_count(const powersum::PowerSumSystem& sys, std::int64_t d, std::int64_t n_max,
                                std::int64_t m_max)
{
    const int base = sys.exponent_base();
    std::vector<Coeffs> rights;
    for (std::int64_t m = base; m <= m_max; ++m) rights.push_back(side(sys.right(), m));
    std::int64_t count = 0;
    for (std::int64_t n = base; n <= n_max; ++n) {
        const Coeffs l = side(sys.left(), n);
        for (const auto& r : rights) {
            const std::int64_t D = deg(add(l, r));
            if (D >= 0 && D <= d) ++count;
        }
    }
    return count;
}

} // namespace oracle

#endif
