#include "powersum/factor.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "powersum/errors.hpp"

namespace powersum {

namespace {

using IntPoly = std::vector<Integer>; // ascending, primitive

// Largest integer we are willing to factor by trial division.
const Integer& trial_division_limit()
{
    static const Integer limit("100000000000000", 10);
    return limit;
}

std::vector<Integer> positive_divisors(Integer n)
{
    if (n < 0) n = -n;
    if (n == 0) throw ValidationError("divisors of zero");
    if (n > trial_division_limit())
        throw FactorizationInfeasible("factorization infeasible: integer " + n.get_str() +
                                      " too large for trial division");
    std::vector<std::pair<Integer, int>> primes;
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
            m /= p;
            ++e;
        }
        if (e > 0) primes.emplace_back(p, e);
    }
    if (m > 1) primes.emplace_back(m, 1);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : primes) {
        const std::size_t count = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer eval_int(const IntPoly& g, const Integer& x)
{
    Integer acc = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Evaluates x^n g(p/q), which is an integer.
Integer eval_homogeneous(const IntPoly& g, const Integer& p, const Integer& q)
{
    Integer acc = 0, qpow = 1;
    // Horner in p with the q powers pulled along from the top.
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
        acc = acc * p + *it * qpow;
        qpow *= q;
    }
    return acc;
}

std::optional<IntPoly> int_exact_div(const IntPoly& f, const IntPoly& g)
{
    Polynomial pf = from_integers(f), pg = from_integers(g);
    auto [q, r] = divrem(pf, pg);
    if (!r.is_zero()) return std::nullopt;
    IntPoly out;
    for (const auto& c : q.coefficients()) {
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return out;
}

// Searches for a factor of exact degree s with positive leading coefficient.
class KroneckerSearch {
public:
    KroneckerSearch(const IntPoly& g, int s) : g_(g), s_(s)
    {
        for (long t = 0; static_cast<int>(nodes_.size()) <= s; t = t > 0 ? -t : -t + 1) {
            Integer x = t;
            Integer v = eval_int(g_, x);
            if (v == 0) continue; // integer root; caller removed these, but stay safe
            nodes_.push_back(x);
            values_.push_back(positive_divisors(v));
        }
        for (long t : {7L, -7L, 11L, -11L}) {
            Integer x = t;
            Integer v = eval_int(g_, x);
            if (v != 0) checks_.emplace_back(x, v);
        }
        newton_.resize(static_cast<std::size_t>(s) + 1);
    }

    std::optional<IntPoly> run() { return descend(0); }

private:
    // P(x) = sum_{i<level} c_i prod_{t<i} (x - x_t)
    Integer partial_value(std::size_t level, const Integer& x) const
    {
        Integer acc = 0;
        for (std::size_t i = level; i-- > 0;) acc = acc * (x - nodes_[i]) + newton_[i];
        return acc;
    }

    std::optional<IntPoly> descend(std::size_t level)
    {
        const Integer& xj = nodes_[level];
        Integer denom = 1;
        for (std::size_t t = 0; t < level; ++t) denom *= xj - nodes_[t];
        const Integer base = partial_value(level, xj);
        for (const auto& d : values_[level]) {
            for (int sign : {1, -1}) {
                Integer num = sign > 0 ? Integer(d - base) : Integer(-d - base);
                if (mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t()) == 0) continue;
                mpz_divexact(newton_[level].get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
                if (level == static_cast<std::size_t>(s_)) {
                    const Integer& lc = newton_[level];
                    if (lc <= 0 || mpz_divisible_p(g_.back().get_mpz_t(), lc.get_mpz_t()) == 0) continue;
                    if (auto h = accept()) return h;
                } else if (auto h = descend(level + 1)) {
                    return h;
                }
            }
        }
        return std::nullopt;
    }

    std::optional<IntPoly> accept() const
    {
        // Newton form to monomial basis.
        IntPoly h{newton_[static_cast<std::size_t>(s_)]};
        for (std::size_t i = static_cast<std::size_t>(s_); i-- > 0;) {
            // h <- h * (x - x_i) + c_i
            IntPoly next(h.size() + 1);
            for (std::size_t k = 0; k < h.size(); ++k) {
                next[k + 1] += h[k];
                next[k] -= h[k] * nodes_[i];
            }
            next[0] += newton_[i];
            h = std::move(next);
        }
        for (const auto& [x, v] : checks_) {
            Integer hv = eval_int(h, x);
            if (hv == 0 || mpz_divisible_p(v.get_mpz_t(), hv.get_mpz_t()) == 0) return std::nullopt;
        }
        if (!int_exact_div(g_, h)) return std::nullopt;
        return h;
    }

    const IntPoly& g_;
    int s_;
    std::vector<Integer> nodes_;
    std::vector<std::vector<Integer>> values_;
    std::vector<std::pair<Integer, Integer>> checks_;
    std::vector<Integer> newton_;
};

// g: primitive, squarefree, no rational roots.
std::vector<IntPoly> split_rootfree(IntPoly g)
{
    std::vector<IntPoly> out;
    int s = 2;
    while (static_cast<int>(g.size()) - 1 >= 2 * s) {
        if (auto h = KroneckerSearch(g, s).run()) {
            g = *int_exact_div(g, *h);
            out.push_back(std::move(*h));
        } else {
            ++s;
        }
    }
    if (g.size() >= 2) out.push_back(std::move(g));
    return out;
}

} // namespace

bool polynomial_less(const Polynomial& f, const Polynomial& g)
{
    const auto a = f.coefficients(), b = g.coefficients();
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

std::vector<FactorPower> squarefree_decomposition(const Polynomial& f)
{
    if (f.is_zero()) throw ValidationError("squarefree decomposition of the zero polynomial");
    std::vector<FactorPower> out;
    if (f.is_constant()) return out;
    const Polynomial fm = f.monic();
    const Polynomial df = fm.derivative();
    const Polynomial a0 = gcd(fm, df);
    Polynomial b = exact_div(fm, a0);
    Polynomial c = exact_div(df, a0);
    Polynomial d = c - b.derivative();
    for (int i = 1; !b.is_constant(); ++i) {
        Polynomial a = gcd(b, d);
        if (!a.is_constant()) out.push_back({a, i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

std::vector<Rational> rational_roots(const Polynomial& f)
{
    if (f.is_zero()) throw ValidationError("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    if (f.is_constant()) return roots;
    IntPoly g = primitive_integer_part(f);
    std::size_t shift = 0;
    while (g[shift] == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    if (g.size() >= 2) {
        const auto ps = positive_divisors(g.front());
        const auto qs = positive_divisors(g.back());
        for (const auto& q : qs) {
            for (const auto& p : ps) {
                if (gcd(p, q) != 1) continue;
                for (int sign : {1, -1}) {
                    Integer sp = sign * p;
                    if (eval_homogeneous(g, sp, q) == 0) roots.emplace_back(sp, q);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Polynomial Factorization::expand() const
{
    Polynomial acc = Polynomial::constant(constant);
    for (const auto& fp : factors) acc = acc * pow(fp.factor, static_cast<std::uint64_t>(fp.multiplicity));
    return acc;
}

Factorization factor(const Polynomial& f, int degree_cap)
{
    if (f.is_zero()) throw ValidationError("factorization of the zero polynomial");
    if (f.deg() > degree_cap)
        throw FactorizationInfeasible("factorization infeasible: degree " + std::to_string(f.deg()) +
                                      " exceeds cap " + std::to_string(degree_cap));
    Factorization out{f.leading_coeff(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        Polynomial rest = part;
        for (const auto& r : rational_roots(part)) {
            Polynomial lin(std::vector<Rational>{-r, Rational(1)});
            rest = exact_div(rest, lin);
            out.factors.push_back({lin, mult});
        }
        if (rest.is_constant()) continue;
        for (auto& h : split_rootfree(primitive_integer_part(rest)))
            out.factors.push_back({from_integers(h).monic(), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return polynomial_less(a.factor, b.factor); });
    return out;
}

} // namespace powersum
