#include "gpselect/rational.hpp"

#include <charconv>
#include <cmath>

#include "common/wide.hpp"

namespace gpsel {

using detail::i128;

Rational Rational::from_wide(i128 num, i128 den) {
    if (den == 0) fail(ErrorKind::precondition, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i128 g = detail::gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = detail::narrow64(num, "rational overflow");
    r.den_ = detail::narrow64(den, "rational overflow");
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s, bool allow_sign) -> std::int64_t {
        if (s.empty()) fail(ErrorKind::parse, "empty number in '" + std::string(text) + "'");
        if (!allow_sign && (s.front() == '-' || s.front() == '+'))
            fail(ErrorKind::parse, "signed denominator in '" + std::string(text) + "'");
        if (s.front() == '+') s.remove_prefix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc::result_out_of_range) fail(ErrorKind::parse, "number out of range: '" + std::string(text) + "'");
        if (ec != std::errc() || ptr != s.data() + s.size())
            fail(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    const std::int64_t num = parse_int(text.substr(0, slash), true);
    const std::int64_t den = parse_int(text.substr(slash + 1), false);
    if (den == 0) fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::from_wide(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorKind::precondition, "division by zero rational");
    return Rational::from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

Rational Rational::operator-() const { return from_wide(-i128(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 l = i128(a.num_) * b.den_;
    const i128 r = i128(b.num_) * a.den_;
    return l <=> r;
}

Rational Rational::floor_of(double value, std::int64_t den) {
    require(den > 0, "floor_of needs a positive denominator");
    require(std::isfinite(value), "floor_of needs a finite value");
    return Rational(static_cast<std::int64_t>(std::floor(value * static_cast<double>(den))), den);
}

}  // namespace gpsel
