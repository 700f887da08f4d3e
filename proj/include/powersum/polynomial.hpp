#ifndef POWERSUM_POLYNOMIAL_HPP
#define POWERSUM_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "powersum/ext_degree.hpp"

namespace powersum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws ValidationError.
Rational parse_rational(std::string_view text);
/// Canonical "num/den" rendering (den always printed).
std::string rational_to_string(const Rational& q);

/*
 * Dense univariate polynomial over Q, coefficients ascending by exponent.
 * The coefficient vector never carries trailing zeros, so the zero
 * polynomial is the empty vector and equality is plain vector equality.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t exponent);
    static Polynomial x() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    ExtDegree degree() const {
        return is_zero() ? ExtDegree::minus_infinity()
                         : ExtDegree(static_cast<std::int64_t>(coeffs_.size()) - 1);
    }
    /// Degree of a nonzero polynomial; throws ValidationError on zero.
    std::int64_t deg() const;
    /// Throws ValidationError on the zero polynomial.
    const Rational& leading_coeff() const;
    /// Coefficient of x^i, zero past the end.
    Rational coeff(std::size_t i) const;
    /// Largest t with x^t dividing f. Zero polynomial is rejected.
    std::size_t order_at_zero() const;

    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& at) const;

    Polynomial derivative() const;
    /// f / lc(f). The zero polynomial stays zero.
    Polynomial monic() const;
    /// x^deg f * f(1/x); the leading coefficient becomes the constant term.
    Polynomial reversed() const;

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
    friend Polynomial operator-(Polynomial f);

    friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.coeffs_ == g.coeffs_; }

    /// Human-readable form, e.g. "3/2*x^2 - x + 1".
    std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

inline Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline ExtDegree degree(const Polynomial& f) { return f.degree(); }
inline const Rational& leading_coeff(const Polynomial& f) { return f.leading_coeff(); }

/// f^n by binary exponentiation. pow(0, 0) is rejected.
Polynomial pow(const Polynomial& f, std::uint64_t n);

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};
/// f = q*g + r with deg r < deg g. Throws ValidationError if g = 0.
DivRem divrem(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(f, 0) = monic(f). gcd(0, 0) is rejected.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// Exact quotient f / g; throws ValidationError when g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
/// A(f) = sum A_i f^i.
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

/// Parses expressions in x such as "x^2 - 1", "(x+1)^3", "3/2 x - 1/2".
Polynomial parse_polynomial(std::string_view text);

/// Multiply out denominators and divide by the integer content; returns the
/// primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer_part(const Polynomial& f);
Polynomial from_integers(std::span<const Integer> coeffs);

} // namespace powersum

#endif
