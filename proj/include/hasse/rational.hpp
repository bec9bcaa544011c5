#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hasse/arith.hpp"

namespace hasse {

// Reduced fraction num/den with den > 0. Arithmetic is exact; any result that
// does not fit in 64 bits raises std::overflow_error.
class Rational {
public:
    Rational() = default;
    Rational(i64 n) : num_(n) {}  // NOLINT: integers convert implicitly
    Rational(i64 n, i64 d);

    [[nodiscard]] i64 num() const noexcept { return num_; }
    [[nodiscard]] i64 den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] Rational inverse() const;

    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational::raw(-a.num_, a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Parses "n" or "n/d".
    static Rational parse(std::string_view text);

private:
    static Rational raw(i64 n, i64 d) noexcept
    {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    static Rational from_wide(i128 n, i128 d);

    i64 num_ = 0;
    i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hasse
