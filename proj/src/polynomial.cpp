#include "powersum/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "powersum/errors.hpp"

namespace powersum {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ValidationError("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (t.size() > 1 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ValidationError("malformed rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t exponent)
{
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::deg() const
{
    if (is_zero()) throw ValidationError("degree of the zero polynomial is -inf");
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

const Rational& Polynomial::leading_coeff() const
{
    if (is_zero()) throw ValidationError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

std::size_t Polynomial::order_at_zero() const
{
    if (is_zero()) throw ValidationError("order at zero of the zero polynomial");
    std::size_t i = 0;
    while (sgn(coeffs_[i]) == 0) ++i;
    return i;
}

Rational Polynomial::operator()(const Rational& at) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return {};
    Polynomial r = *this;
    const Rational lc = coeffs_.back();
    for (auto& c : r.coeffs_) c /= lc;
    return r;
}

Polynomial Polynomial::reversed() const
{
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& g)
{
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g)
{
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Rational> v(f.coeffs_.size() + g.coeffs_.size() - 1);
    Rational t;
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (sgn(f.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            t = f.coeffs_[i] * g.coeffs_[j];
            v[i + j] += t;
        }
    }
    Polynomial r;
    r.coeffs_ = std::move(v);
    r.normalize();
    return r;
}

Polynomial operator-(Polynomial f)
{
    for (auto& c : f.coeffs_) c = -c;
    return f;
}

std::string Polynomial::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = a == 1;
        if (k == 0 || !unit) {
            os << a.get_str();
            if (k > 0) os << "*";
        }
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

Polynomial pow(const Polynomial& f, std::uint64_t n)
{
    if (n == 0) {
        if (f.is_zero()) throw ValidationError("0^0 is undefined");
        return Polynomial::constant(Rational(1));
    }
    Polynomial result = Polynomial::constant(Rational(1));
    Polynomial base = f;
    while (true) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n == 0) break;
        base = base * base;
    }
    return result;
}

DivRem divrem(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero()) throw ValidationError("division by the zero polynomial");
    auto fc = f.coefficients();
    std::vector<Rational> r(fc.begin(), fc.end());
    const auto gc = g.coefficients();
    const std::size_t dg = gc.size() - 1;
    if (r.size() < gc.size()) return {Polynomial(), f};
    std::vector<Rational> q(r.size() - dg);
    const Rational& lc = gc.back();
    for (std::size_t k = r.size(); k-- > dg;) {
        if (sgn(r[k]) == 0) continue;
        Rational c = r[k] / lc;
        for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= c * gc[j];
        q[k - dg] = std::move(c);
    }
    r.resize(dg);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() && g.is_zero()) throw ValidationError("gcd(0, 0) is undefined");
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = divrem(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g)
{
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw ValidationError("polynomial division is not exact");
    return q;
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner)
{
    Polynomial acc;
    const auto c = outer.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * inner;
        acc += Polynomial::constant(c[k]);
    }
    return acc;
}

std::vector<Integer> primitive_integer_part(const Polynomial& f)
{
    if (f.is_zero()) throw ValidationError("primitive part of the zero polynomial");
    Integer l = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    z.reserve(f.coefficients().size());
    Integer content = 0;
    for (const auto& c : f.coefficients()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (z.back() < 0) content = -content;
    for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return z;
}

Polynomial from_integers(std::span<const Integer> coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/' | implicit) unary)*
// unary  := '-' unary | '+' unary | power
// power  := atom ('^' integer)?
// atom   := number | 'x' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ValidationError("cannot parse polynomial '" + std::string(s_) + "': " + msg +
                              " at offset " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr()
    {
        Polynomial acc = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Polynomial t = term();
            if (c == '+') acc += t;
            else acc -= t;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc *= Rational(1) / d.leading_coeff();
            } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    Polynomial unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const auto e = std::stoull(std::string(s_.substr(start, pos_ - start)));
            return pow(base, e);
        }
        return base;
    }

    Polynomial atom()
    {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return Polynomial::x();
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Polynomial::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        fail("expected number, 'x' or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace powersum
