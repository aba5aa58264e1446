#include "taxonomy/decimal.hpp"

#include <algorithm>
#include <cctype>

namespace taxonomy {

namespace {

Decimal::Int pow10(int n) {
    Decimal::Int v = 1;
    for (int i = 0; i < n; ++i) v *= 10;
    return v;
}

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t dot = s.find('.');
    std::string_view whole = (dot == std::string_view::npos) ? s : s.substr(0, dot);
    std::string_view frac = (dot == std::string_view::npos) ? "" : s.substr(dot + 1);
    if (whole.empty()) return std::nullopt;
    if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
    auto all_digits = [](std::string_view part) {
        return std::all_of(part.begin(), part.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    };
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;

    Int units = 0;
    for (char c : whole) units = units * 10 + (c - '0');
    for (char c : frac) units = units * 10 + (c - '0');
    return from_units(std::move(units), static_cast<int>(frac.size()));
}

void Decimal::strip_zeros() {
    if (units_ == 0) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && units_ % 10 == 0) {
        units_ /= 10;
        --scale_;
    }
}

std::string Decimal::to_string() const {
    std::string digits = units_.str();
    if (scale_ == 0) return digits;
    if (static_cast<int>(digits.size()) <= scale_) {
        digits.insert(0, static_cast<std::size_t>(scale_) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale_), 1, '.');
    return digits;
}

double Decimal::to_double() const {
    double v = units_.convert_to<double>();
    for (int i = 0; i < scale_; ++i) v /= 10.0;
    return v;
}

std::pair<Decimal::Int, Decimal::Int> Decimal::aligned(const Decimal& a,
                                                       const Decimal& b) {
    int scale = std::max(a.scale_, b.scale_);
    return {a.units_ * pow10(scale - a.scale_), b.units_ * pow10(scale - b.scale_)};
}

Decimal Decimal::add(const Decimal& other) const {
    auto [x, y] = aligned(*this, other);
    return from_units(x + y, std::max(scale_, other.scale_));
}

std::strong_ordering Decimal::operator<=>(const Decimal& other) const {
    auto [x, y] = aligned(*this, other);
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Decimal::percent(const Decimal& a, const Decimal& b) {
    auto [num, den] = aligned(a, b);
    // round(num/den * 10000) half up = (2*num*10000 + den) / (2*den)
    Int centi = (num * 20000 + den) / (den * 2);
    Int whole = centi / 100;
    Int rem = centi % 100;
    std::string frac = rem.str();
    if (frac.size() < 2) frac.insert(0, 2 - frac.size(), '0');
    return whole.str() + "." + frac;
}

}  // namespace taxonomy
