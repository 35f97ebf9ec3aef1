#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bubblegrid {

/// Exact rational with a positive denominator, always stored reduced.
/// Arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error when a result does not fit back into 64 bits.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    /// Largest integer <= value.
    std::int64_t floor() const;
    /// Smallest integer >= value.
    std::int64_t ceil() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q" when fractional, "p" when integral.
    std::string to_string() const;
    /// Accepts "p", "p/q", "-p/q".
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace bubblegrid
