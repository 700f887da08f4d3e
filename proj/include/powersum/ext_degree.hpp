#ifndef POWERSUM_EXT_DEGREE_HPP
#define POWERSUM_EXT_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace powersum {

/// Degree with the convention deg 0 = -infinity. Orders below every finite degree.
class ExtDegree {
public:
    constexpr ExtDegree() = default; // -inf
    constexpr explicit ExtDegree(std::int64_t d) : value_(d), finite_(true) {}

    static constexpr ExtDegree minus_infinity() { return ExtDegree(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_minus_infinity() const { return !finite_; }
    /// Only meaningful when is_finite().
    constexpr std::int64_t value() const { return value_; }

    constexpr bool operator==(const ExtDegree& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    constexpr std::strong_ordering operator<=>(const ExtDegree& o) const {
        if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
        return value_ <=> o.value_;
    }
    constexpr bool operator==(std::int64_t d) const { return finite_ && value_ == d; }
    constexpr std::strong_ordering operator<=>(std::int64_t d) const {
        return *this <=> ExtDegree(d);
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    std::int64_t value_ = 0;
    bool finite_ = false;
};

constexpr ExtDegree max(ExtDegree a, ExtDegree b) { return a < b ? b : a; }

} // namespace powersum

#endif
