#include "powersum/top_down.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "powersum/errors.hpp"

namespace powersum {

namespace {

class TermStream {
public:
    TermStream(const ExponentTerm& t, std::size_t budget_bits) : exponent_(t.exponent), budget_bits_(budget_bits)
    {
        const auto a = t.coeff->coefficients();
        const auto p = t.root->coefficients();
        ra_.assign(a.rbegin(), a.rend());
        f_.assign(p.rbegin(), p.rend());
        for (std::size_t j = 1; j < f_.size(); ++j)
            if (sgn(f_[j]) != 0) f_support_.push_back(j);
        const auto e = static_cast<std::int64_t>(exponent_);
        top_ = t.coeff->deg() + e * t.root->deg();
        low_ = static_cast<std::int64_t>(t.coeff->order_at_zero()) +
               e * static_cast<std::int64_t>(t.root->order_at_zero());
        Integer num, den;
        mpz_pow_ui(num.get_mpz_t(), f_[0].get_num_mpz_t(), exponent_);
        mpz_pow_ui(den.get_mpz_t(), f_[0].get_den_mpz_t(), exponent_);
        g_.emplace_back(num, den);
        check(g_.back());
    }

    std::int64_t top() const { return top_; }
    std::int64_t low() const { return low_; }

    /// Coefficient of x^(top - k) in coeff * root^exponent.
    Rational coefficient(std::size_t k)
    {
        while (g_.size() <= k) extend();
        Rational h(0);
        const std::size_t jmax = std::min(k, ra_.size() - 1);
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (sgn(ra_[j]) == 0) continue;
            h += ra_[j] * g_[k - j];
        }
        return h;
    }

private:
    void extend()
    {
        const std::size_t k = g_.size();
        Rational acc(0);
        for (std::size_t j : f_support_) {
            if (j > k) break;
            if (sgn(g_[k - j]) == 0) continue;
            const auto w = static_cast<long>((exponent_ + 1) * j) - static_cast<long>(k);
            if (w == 0) continue;
            acc += Rational(w) * f_[j] * g_[k - j];
        }
        acc /= f_[0] * Rational(static_cast<unsigned long>(k));
        check(acc);
        g_.push_back(std::move(acc));
    }

    void check(const Rational& q) const
    {
        const std::size_t bits =
            mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
        if (bits > budget_bits_)
            throw ResourceCapError("coefficient budget exceeded: " + std::to_string(bits) + " bits > " +
                                   std::to_string(budget_bits_));
    }

    std::uint64_t exponent_;
    std::size_t budget_bits_;
    std::vector<Rational> ra_, f_, g_;
    std::vector<std::size_t> f_support_;
    std::int64_t top_ = 0, low_ = 0;
};

} // namespace

ExtDegree top_down_degree(std::span<const ExponentTerm> terms, std::size_t budget_bits)
{
    std::vector<TermStream> streams;
    streams.reserve(terms.size());
    for (const auto& t : terms) {
        if (t.coeff->is_zero()) continue;
        if (t.root->is_zero()) {
            if (t.exponent == 0) throw ValidationError("0^0 is undefined");
            continue;
        }
        streams.emplace_back(t, budget_bits);
    }
    if (streams.empty()) return ExtDegree::minus_infinity();

    std::int64_t c = 0;
    for (const auto& s : streams) c = std::max(c, s.top());
    Rational sum;
    while (c >= 0) {
        bool active = false;
        sum = 0;
        for (auto& s : streams) {
            if (c > s.top() || c < s.low()) continue;
            active = true;
            sum += s.coefficient(static_cast<std::size_t>(s.top() - c));
        }
        if (active) {
            if (sgn(sum) != 0) return ExtDegree(c);
            --c;
            continue;
        }
        // Nothing lives at c: jump to the next term that starts below it.
        std::optional<std::int64_t> next;
        for (const auto& s : streams)
            if (s.top() < c && (!next || s.top() > *next)) next = s.top();
        if (!next) break;
        c = *next;
    }
    return ExtDegree::minus_infinity();
}

} // namespace powersum
