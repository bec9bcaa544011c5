#include "hasse/rational.hpp"

#include <charconv>
#include <ostream>

namespace hasse {

namespace {

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 narrow(i128 x)
{
    if (x > INT64_MAX || x < -INT64_MAX) throw std::overflow_error("rational component exceeds 64 bits");
    return static_cast<i64>(x);
}

i64 parse_int(std::string_view s)
{
    i64 v = 0;
    const auto* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational Rational::from_wide(i128 n, i128 d)
{
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return raw(narrow(n), narrow(d));
}

Rational::Rational(i64 n, i64 d) { *this = from_wide(n, d); }

Rational Rational::inverse() const
{
    if (num_ == 0) throw std::domain_error("inverse of zero");
    return from_wide(den_, num_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::string Rational::str() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hasse
