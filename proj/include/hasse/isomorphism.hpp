#pragma once

// Q-isomorphism of x^p + b y^p + c z^p = 0 and x^p + b' y^p + c' z^p = 0 for
// p >= 5. The curves are isomorphic iff one of six couples built from
// b, c, b', c' has both entries in (Q^*)^p:
//
//   1 (b/b', c/c')      2 (b/c', b'/c)       3 (c b', b/(c c'))
//   4 (b c', b'/(c c')) 5 (b c'/c, c b'/c')  6 (c c', c b'/b)

#include <optional>
#include <span>

#include "hasse/padic.hpp"
#include "hasse/rational.hpp"

namespace hasse {

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<int> matched_couple;  // 1..6, first match
};

[[nodiscard]] bool is_pth_power_rational(const Rational& x, PrimeExponent p);

/// Throws std::invalid_argument for p = 3.
[[nodiscard]] IsoVerdict are_isomorphic(const Rational& b, const Rational& c, const Rational& b2, const Rational& c2,
                                        PrimeExponent p);

/// General (a, b, c) curves, compared through (b/a, c/a).
[[nodiscard]] IsoVerdict are_isomorphic(const FermatCurve& lhs, const FermatCurve& rhs);

/// True iff no two curves in the list are isomorphic. All must share p.
[[nodiscard]] bool pairwise_distinct(std::span<const FermatCurve> curves);

}  // namespace hasse
