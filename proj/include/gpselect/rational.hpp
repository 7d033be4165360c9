#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gpsel {

// Exact rational with 64-bit numerator/denominator, always in lowest terms
// with a positive denominator. Arithmetic is carried out in 128 bits and
// throws ErrorKind::overflow if the reduced result does not fit.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

    // Accepts "[-]digits" or "[-]digits/digits".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Largest rational with the given denominator not exceeding `value`.
    static Rational floor_of(double value, std::int64_t den);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace gpsel
