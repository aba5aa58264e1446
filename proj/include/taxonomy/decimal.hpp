// Exact non-negative decimal amounts. Balances are compared and summed
// without any binary-float rounding so the 60% ownership threshold cannot
// flap at the boundary.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace taxonomy {

class Decimal {
public:
    using Int = boost::multiprecision::cpp_int;

    Decimal() = default;

    // Accepts [0-9]+ with an optional fractional part ("61", "60.000001",
    // "0.5"). No sign, no exponent; rejects everything else.
    static std::optional<Decimal> parse(std::string_view s);

    static Decimal from_units(Int units, int scale) {
        Decimal d;
        d.units_ = std::move(units);
        d.scale_ = scale;
        d.strip_zeros();
        return d;
    }

    bool is_zero() const { return units_ == 0; }

    // Value as units * 10^-scale; scale is normalized (no trailing zeros).
    const Int& units() const { return units_; }
    int scale() const { return scale_; }

    std::string to_string() const;
    double to_double() const;

    Decimal add(const Decimal& other) const;

    std::strong_ordering operator<=>(const Decimal& other) const;
    bool operator==(const Decimal& other) const {
        return (*this <=> other) == std::strong_ordering::equal;
    }

    // numerator/denominator as integers at a common scale, for exact
    // cross-multiplication tests like 5*top > 3*sum.
    static std::pair<Int, Int> aligned(const Decimal& a, const Decimal& b);

    // 100*a/b as a percentage with two decimals, round half up ("61.00").
    // b must be non-zero.
    static std::string percent(const Decimal& a, const Decimal& b);

private:
    void strip_zeros();

    Int units_ = 0;
    int scale_ = 0;
};

}  // namespace taxonomy
