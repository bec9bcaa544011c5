#include "hasse/isomorphism.hpp"

#include <array>
#include <utility>

namespace hasse {

namespace {

bool is_integer_pth_power(i64 n, unsigned p)
{
    // p is odd, so -t^p = (-t)^p
    const u64 m = n < 0 ? -static_cast<u64>(n) : static_cast<u64>(n);
    const u64 root = integer_root(m, p);
    u128 acc = 1;
    for (unsigned i = 0; i < p; ++i) acc *= root;
    return acc == m;
}

}  // namespace

bool is_pth_power_rational(const Rational& x, PrimeExponent p)
{
    if (x.is_zero()) throw std::invalid_argument("is_pth_power_rational: zero is excluded");
    const auto e = static_cast<unsigned>(p.value());
    return is_integer_pth_power(x.num(), e) && is_integer_pth_power(x.den(), e);
}

IsoVerdict are_isomorphic(const Rational& b, const Rational& c, const Rational& b2, const Rational& c2, PrimeExponent p)
{
    if (p.value() < 5) throw std::invalid_argument("isomorphism criterion requires p >= 5");
    for (const auto* x : {&b, &c, &b2, &c2})
        if (x->is_zero()) throw std::invalid_argument("coefficients must be nonzero");

    const std::array<std::pair<Rational, Rational>, 6> couples{{
        {b / b2, c / c2},
        {b / c2, b2 / c},
        {c * b2, b / (c * c2)},
        {b * c2, b2 / (c * c2)},
        {b * c2 / c, c * b2 / c2},
        {c * c2, c * b2 / b},
    }};
    for (std::size_t i = 0; i < couples.size(); ++i) {
        if (is_pth_power_rational(couples[i].first, p) && is_pth_power_rational(couples[i].second, p))
            return {true, static_cast<int>(i + 1)};
    }
    return {};
}

IsoVerdict are_isomorphic(const FermatCurve& lhs, const FermatCurve& rhs)
{
    if (lhs.p() != rhs.p()) throw std::invalid_argument("curves have different exponents");
    return are_isomorphic(lhs[1] / lhs[0], lhs[2] / lhs[0], rhs[1] / rhs[0], rhs[2] / rhs[0], lhs.p());
}

bool pairwise_distinct(std::span<const FermatCurve> curves)
{
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (are_isomorphic(curves[i], curves[j]).isomorphic) return false;
    return true;
}

}  // namespace hasse
