#ifndef POWERSUM_FUNCTION_FIELD_HPP
#define POWERSUM_FUNCTION_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "powersum/factor.hpp"
#include "powersum/polynomial.hpp"

namespace powersum {

class RationalFunction;

/*
 * Places of Q(x): one per monic irreducible polynomial, plus infinity.
 * A finite place of degree r bundles r conjugate complex points, so every
 * sum over places (sum formula, height, |S|) is weighted by degree().
 */
class Place {
public:
    /// Validates that pi is monic, non-constant and irreducible over Q.
    static Place finite(Polynomial pi, int degree_cap = default_factor_degree_cap);
    static Place infinity() { return Place(); }

    bool is_infinity() const { return !pi_.has_value(); }
    /// Throws ValidationError for the infinite place.
    const Polynomial& polynomial() const;
    /// Number of complex points: deg pi, or 1 at infinity.
    std::int64_t degree() const;

    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) { return a.pi_ == b.pi_; }
    /// Finite places by (degree, coefficients); infinity last.
    friend bool operator<(const Place& a, const Place& b);

private:
    Place() = default;
    explicit Place(Polynomial pi) : pi_(std::move(pi)) {}

    friend std::vector<std::pair<Place, std::int64_t>> places_of(const RationalFunction& f, int degree_cap);

    std::optional<Polynomial> pi_;
};

/// Reduced fraction num/den with den monic; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
    /// Reduces; throws ValidationError if den = 0.
    RationalFunction(const Polynomial& num, const Polynomial& den);
    static RationalFunction from_polynomial(const Polynomial& p);
    static RationalFunction constant(const Rational& c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator-(const RationalFunction& f);
    friend bool operator==(const RationalFunction& f, const RationalFunction& g) = default;

    std::string to_string() const;

private:
    struct Coprime {};
    // num and den already coprime; only normalizes den to monic.
    RationalFunction(Polynomial num, Polynomial den, Coprime);

    friend RationalFunction pow(const RationalFunction& f, std::int64_t e);
    friend RationalFunction compose(const Polynomial& outer, const RationalFunction& f);

    Polynomial num_, den_;
};

RationalFunction rf_new(const Polynomial& num, const Polynomial& den);
/// f^e for any integer e; 0^e needs e > 0.
RationalFunction pow(const RationalFunction& f, std::int64_t e);
/// A(f) = sum A_i f^i.
RationalFunction compose(const Polynomial& outer, const RationalFunction& f);

/// Height value; +infinity only for the zero function.
class Height {
public:
    constexpr explicit Height(std::int64_t v) : value_(v), finite_(true) {}
    static constexpr Height infinity() { return Height(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr std::int64_t value() const { return value_; }

    constexpr bool operator==(const Height& o) const
    {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    constexpr std::strong_ordering operator<=>(const Height& o) const
    {
        if (!finite_ || !o.finite_) return o.finite_ <=> finite_;
        return value_ <=> o.value_;
    }
    std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

private:
    constexpr Height() = default;
    std::int64_t value_ = 0;
    bool finite_ = false;
};

/// nu_pi(f) or nu_inf(f) = deg den - deg num. f must be nonzero.
std::int64_t valuation(const RationalFunction& f, const Place& v);

/// Every place with nonzero valuation, sorted, infinity last.
std::vector<std::pair<Place, std::int64_t>> places_of(const RationalFunction& f,
                                                      int degree_cap = default_factor_degree_cap);

/// sum_v deg(v) nu_v(f); zero for every nonzero f.
std::int64_t sum_formula_check(const RationalFunction& f, int degree_cap = default_factor_degree_cap);

/// sum_v deg(v) max(0, nu_v(f)) over the factored places.
Height height(const RationalFunction& f, int degree_cap = default_factor_degree_cap);
/// max(deg num, deg den), no factorization.
Height height_fast(const RationalFunction& f);

class SUnitSet {
public:
    SUnitSet() = default;
    explicit SUnitSet(std::set<Place> places) : places_(std::move(places)) {}

    const std::set<Place>& places() const { return places_; }
    bool contains(const Place& v) const { return places_.count(v) != 0; }
    void insert(const Place& v) { places_.insert(v); }
    /// Complex points covered: sum of deg pi over finite places, +1 for infinity.
    std::int64_t point_count() const;

    friend bool operator==(const SUnitSet&, const SUnitSet&) = default;

private:
    std::set<Place> places_;
};

bool is_s_unit(const RationalFunction& f, const SUnitSet& s, int degree_cap = default_factor_degree_cap);
/// Smallest S for which every listed function is an S-unit.
SUnitSet s_unit_set_for(const std::vector<RationalFunction>& fs, int degree_cap = default_factor_degree_cap);

/// binom(k, 2) (s_count + max(0, 2 genus - 2))
std::int64_t bm_bound(std::int64_t k, std::int64_t s_count, std::int64_t genus = 0);

inline constexpr std::size_t max_subsum_check_terms = 12;

struct BmReport {
    bool s_units = false;
    bool sums_to_zero = false;
    std::optional<bool> no_vanishing_subsum; // empty: more than 12 units, not checked
    Height max_height = Height(0);
    std::int64_t bound = 0;
    bool bound_holds = false;

    /// Hypotheses (a)-(c) hold, so the bound must hold for this input.
    bool hypotheses_hold() const { return s_units && sums_to_zero && no_vanishing_subsum.value_or(false); }
    bool passed() const { return hypotheses_hold() && bound_holds; }
};

/// Checks 1 + u_1 + ... + u_k = 0 against the Brownawell-Masser height bound.
/// Violated preconditions show up as false verdicts, not exceptions.
BmReport verify_bm(const std::vector<RationalFunction>& units, const SUnitSet& s, std::int64_t genus = 0,
                   int degree_cap = default_factor_degree_cap);

} // namespace powersum

#endif
