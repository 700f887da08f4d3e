#include "powersum/function_field.hpp"

#include <algorithm>

#include "powersum/errors.hpp"

namespace powersum {

// ---------------------------------------------------------------- places

Place Place::finite(Polynomial pi, int degree_cap)
{
    if (pi.is_constant()) throw ValidationError("place polynomial must be non-constant");
    if (pi.leading_coeff() != 1) throw ValidationError("place polynomial must be monic: " + pi.to_string());
    const auto fz = factor(pi, degree_cap);
    if (fz.factors.size() != 1 || fz.factors.front().multiplicity != 1)
        throw ValidationError("place polynomial is reducible: " + pi.to_string());
    return Place(std::move(pi));
}

const Polynomial& Place::polynomial() const
{
    if (!pi_) throw ValidationError("the infinite place has no polynomial");
    return *pi_;
}

std::int64_t Place::degree() const { return pi_ ? pi_->deg() : 1; }

std::string Place::to_string() const { return pi_ ? pi_->to_string() : "inf"; }

bool operator<(const Place& a, const Place& b)
{
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return polynomial_less(*a.pi_, *b.pi_);
}

// ---------------------------------------------------------------- Q(x)

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero()) throw ValidationError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    const Polynomial g = gcd(num, den);
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
    const Rational lc = den_.leading_coeff();
    num_ *= Rational(1) / lc;
    den_ = den_.monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Coprime)
    : num_(std::move(num)), den_(std::move(den))
{
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        num_ *= Rational(1) / lc;
        den_ = den_.monic();
    }
}

RationalFunction RationalFunction::from_polynomial(const Polynomial& p)
{
    return RationalFunction(p, Polynomial::constant(Rational(1)));
}

RationalFunction RationalFunction::constant(const Rational& c)
{
    return from_polynomial(Polynomial::constant(c));
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero()) throw ValidationError("inverse of the zero function");
    return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g)
{
    return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g)
{
    return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g)
{
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g)
{
    return f * g.inverse();
}

RationalFunction operator-(const RationalFunction& f)
{
    RationalFunction r = f;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::to_string() const
{
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction rf_new(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

RationalFunction pow(const RationalFunction& f, std::int64_t e)
{
    if (f.is_zero() && e <= 0) throw ValidationError("0 raised to a non-positive power");
    const auto n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    if (e < 0) return RationalFunction(pow(f.den(), n), pow(f.num(), n), RationalFunction::Coprime{});
    return RationalFunction(pow(f.num(), n), pow(f.den(), n), RationalFunction::Coprime{});
}

RationalFunction compose(const Polynomial& outer, const RationalFunction& f)
{
    // A(u/v) = sum A_i u^i v^(r-i) / v^r; the numerator is A_r u^r mod v, hence coprime to v.
    const auto c = outer.coefficients();
    if (c.empty()) return RationalFunction();
    const std::size_t r = c.size() - 1;
    Polynomial num = Polynomial::constant(c[r]);
    Polynomial vpow = Polynomial::constant(Rational(1));
    for (std::size_t i = r; i-- > 0;) {
        vpow = vpow * f.den();
        num = num * f.num() + c[i] * vpow;
    }
    return RationalFunction(std::move(num), std::move(vpow), RationalFunction::Coprime{});
}

// ---------------------------------------------------------------- valuations

namespace {

std::int64_t multiplicity(Polynomial f, const Polynomial& pi)
{
    std::int64_t k = 0;
    while (!f.is_constant()) {
        auto [q, r] = divrem(f, pi);
        if (!r.is_zero()) break;
        f = std::move(q);
        ++k;
    }
    return k;
}

void require_nonzero(const RationalFunction& f, const char* what)
{
    if (f.is_zero()) throw ValidationError(std::string(what) + " of the zero function");
}

} // namespace

std::int64_t valuation(const RationalFunction& f, const Place& v)
{
    require_nonzero(f, "valuation");
    if (v.is_infinity()) return f.den().deg() - f.num().deg();
    return multiplicity(f.num(), v.polynomial()) - multiplicity(f.den(), v.polynomial());
}

std::vector<std::pair<Place, std::int64_t>> places_of(const RationalFunction& f, int degree_cap)
{
    require_nonzero(f, "places");
    std::vector<std::pair<Place, std::int64_t>> out;
    // factor() already certifies irreducibility, so skip the check in Place::finite.
    for (const auto& fp : factor(f.num(), degree_cap).factors) out.emplace_back(Place(fp.factor), fp.multiplicity);
    for (const auto& fp : factor(f.den(), degree_cap).factors) out.emplace_back(Place(fp.factor), -fp.multiplicity);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::int64_t at_inf = f.den().deg() - f.num().deg();
    if (at_inf != 0) out.emplace_back(Place::infinity(), at_inf);
    return out;
}

std::int64_t sum_formula_check(const RationalFunction& f, int degree_cap)
{
    std::int64_t total = 0;
    for (const auto& [v, nu] : places_of(f, degree_cap)) total += v.degree() * nu;
    return total;
}

Height height(const RationalFunction& f, int degree_cap)
{
    if (f.is_zero()) return Height::infinity();
    std::int64_t h = 0;
    for (const auto& [v, nu] : places_of(f, degree_cap)) h += v.degree() * std::max<std::int64_t>(0, nu);
    return Height(h);
}

Height height_fast(const RationalFunction& f)
{
    if (f.is_zero()) return Height::infinity();
    return Height(std::max(f.num().deg(), f.den().deg()));
}

// ---------------------------------------------------------------- S-units

std::int64_t SUnitSet::point_count() const
{
    std::int64_t c = 0;
    for (const auto& v : places_) c += v.degree();
    return c;
}

bool is_s_unit(const RationalFunction& f, const SUnitSet& s, int degree_cap)
{
    require_nonzero(f, "S-unit test");
    const auto ps = places_of(f, degree_cap);
    return std::all_of(ps.begin(), ps.end(), [&](const auto& vp) { return s.contains(vp.first); });
}

SUnitSet s_unit_set_for(const std::vector<RationalFunction>& fs, int degree_cap)
{
    SUnitSet s;
    for (const auto& f : fs)
        for (const auto& [v, nu] : places_of(f, degree_cap)) s.insert(v);
    return s;
}

std::int64_t bm_bound(std::int64_t k, std::int64_t s_count, std::int64_t genus)
{
    if (k < 0 || s_count < 0 || genus < 0) throw ValidationError("bm_bound arguments must be nonnegative");
    const std::int64_t pairs = k < 2 ? 0 : k * (k - 1) / 2;
    return pairs * (s_count + std::max<std::int64_t>(0, 2 * genus - 2));
}

BmReport verify_bm(const std::vector<RationalFunction>& units, const SUnitSet& s, std::int64_t genus,
                   int degree_cap)
{
    BmReport rep;
    const auto k = static_cast<std::int64_t>(units.size());

    rep.s_units = std::all_of(units.begin(), units.end(), [&](const RationalFunction& u) {
        return !u.is_zero() && is_s_unit(u, s, degree_cap);
    });

    const RationalFunction one = RationalFunction::constant(Rational(1));
    RationalFunction total = one;
    for (const auto& u : units) total = total + u;
    rep.sums_to_zero = total.is_zero();

    if (units.size() <= max_subsum_check_terms) {
        // Item 0 is the constant 1; masks run over proper nonempty subsets.
        std::vector<RationalFunction> items{one};
        items.insert(items.end(), units.begin(), units.end());
        const std::uint32_t full = (std::uint32_t{1} << items.size()) - 1;
        bool none = true;
        for (std::uint32_t mask = 1; mask < full && none; ++mask) {
            RationalFunction sub;
            for (std::size_t i = 0; i < items.size(); ++i)
                if (mask & (std::uint32_t{1} << i)) sub = sub + items[i];
            none = !sub.is_zero();
        }
        rep.no_vanishing_subsum = none;
    }

    rep.max_height = Height(0);
    for (const auto& u : units) rep.max_height = std::max(rep.max_height, height(u, degree_cap));
    rep.bound = bm_bound(k, s.point_count(), genus);
    rep.bound_holds = rep.max_height <= Height(rep.bound);
    return rep;
}

} // namespace powersum
