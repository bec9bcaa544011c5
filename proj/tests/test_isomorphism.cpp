#include <gtest/gtest.h>

#include <algorithm>

#include "hasse/isomorphism.hpp"
#include "oracles.hpp"

using namespace hasse;

namespace {

Rational random_rational()
{
    static constexpr std::array<i64, 5> kPrimes{2, 3, 5, 7, 11};
    i64 num = oracle::uniform(0, 1) ? 1 : -1, den = 1;
    for (i64 q : kPrimes) {
        const i64 e = oracle::uniform(-1, 1);
        for (i64 k = 0; k < e; ++k) num *= q;
        for (i64 k = 0; k < -e; ++k) den *= q;
    }
    return {num, den};
}

Rational small_power(i64 p)
{
    Rational base(oracle::uniform(1, 3) * (oracle::uniform(0, 1) ? 1 : -1), oracle::uniform(1, 3));
    Rational out(1);
    for (i64 i = 0; i < p; ++i) out = out * base;
    return out;
}

}  // namespace

TEST(PthPowerRational, Examples)
{
    EXPECT_TRUE(is_pth_power_rational(32, PrimeExponent(5)));
    EXPECT_TRUE(is_pth_power_rational(Rational(-1, 243), PrimeExponent(5)));
    EXPECT_FALSE(is_pth_power_rational(Rational(7, 29), PrimeExponent(5)));
    EXPECT_THROW((void)is_pth_power_rational(0, PrimeExponent(5)), std::invalid_argument);
}

TEST(PthPowerRational, MatchesFactorization)
{
    for (i64 n = -20000; n <= 20000; ++n) {
        if (n == 0) continue;
        for (unsigned p : {3u, 5u, 7u})
            ASSERT_EQ(is_pth_power_rational(n, PrimeExponent(p)), oracle::factor_pth_power(n, p)) << n;
    }
    EXPECT_TRUE(is_pth_power_rational(Rational(-(i64{1} << 60), 3 * 3 * 3 * 3 * 3), PrimeExponent(5)));
    EXPECT_TRUE(is_pth_power_rational(i64{3'404'825'447}, PrimeExponent(7)));  // 23^7
}

TEST(Isomorphic, Examples)
{
    const PrimeExponent five(5);
    const auto same = are_isomorphic(7, 29, 7, 29, five);
    EXPECT_TRUE(same.isomorphic);
    EXPECT_EQ(same.matched_couple, 1);
    const auto swapped = are_isomorphic(7, 29, 29, 7, five);
    EXPECT_TRUE(swapped.isomorphic);
    EXPECT_EQ(swapped.matched_couple, 2);
    const auto prop2 = are_isomorphic(7, 29, 11, 29, five);
    EXPECT_FALSE(prop2.isomorphic);
    EXPECT_FALSE(prop2.matched_couple);
    EXPECT_THROW((void)are_isomorphic(7, 29, 11, 29, PrimeExponent(3)), std::invalid_argument);
    EXPECT_THROW((void)are_isomorphic(0, 29, 11, 29, five), std::invalid_argument);
}

TEST(Isomorphic, MatchedCouplePresentIffIsomorphic)
{
    for (int i = 0; i < 500; ++i) {
        const auto v = are_isomorphic(random_rational(), random_rational(), random_rational(), random_rational(), PrimeExponent(5));
        EXPECT_EQ(v.isomorphic, v.matched_couple.has_value());
        if (v.matched_couple) {
            EXPECT_GE(*v.matched_couple, 1);
            EXPECT_LE(*v.matched_couple, 6);
        }
    }
}

TEST(Isomorphic, ReflexiveAndSymmetric)
{
    for (int i = 0; i < 500; ++i) {
        const PrimeExponent p(i % 2 ? 5 : 7);
        const Rational b = random_rational(), c = random_rational();
        EXPECT_TRUE(are_isomorphic(b, c, b, c, p).isomorphic);
        // Every fourth case is a related curve, so both verdicts occur.
        Rational b2 = random_rational(), c2 = random_rational();
        if (i % 4 == 0) {
            b2 = c * small_power(p);
            c2 = b * small_power(p);
        }
        EXPECT_EQ(are_isomorphic(b, c, b2, c2, p).isomorphic, are_isomorphic(b2, c2, b, c, p).isomorphic);
    }
}

TEST(Isomorphic, PowerRescalingKeepsClass)
{
    for (int i = 0; i < 500; ++i) {
        const PrimeExponent p(i % 2 ? 5 : 7);
        const Rational b = random_rational(), c = random_rational();
        EXPECT_TRUE(are_isomorphic(b, c, b * small_power(p), c * small_power(p), p).isomorphic);
    }
}

TEST(Isomorphic, CoordinatePermutations)
{
    // Each permutation of (1, b, c), rescaled to leading coefficient 1, is the same curve.
    std::set<int> couples_used;
    for (int i = 0; i < 500; ++i) {
        const PrimeExponent p(i % 2 ? 5 : 7);
        const std::array<Rational, 3> coeffs{Rational(1), random_rational(), random_rational()};
        std::array<int, 3> perm{0, 1, 2};
        do {
            const Rational a = coeffs[perm[0]];
            const auto v = are_isomorphic(coeffs[1], coeffs[2], coeffs[perm[1]] / a, coeffs[perm[2]] / a, p);
            ASSERT_TRUE(v.isomorphic);
            couples_used.insert(*v.matched_couple);
            const FermatCurve lhs(p, coeffs[0], coeffs[1], coeffs[2]);
            const FermatCurve rhs(p, coeffs[perm[0]], coeffs[perm[1]], coeffs[perm[2]]);
            EXPECT_TRUE(are_isomorphic(lhs, rhs).isomorphic);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    EXPECT_EQ(couples_used, (std::set<int>{1, 2, 3, 4, 5, 6}));
}

TEST(Isomorphic, DistinctPrimeTwistsDiffer)
{
    const auto primes = oracle::sieve(2000);
    for (int i = 0; i < 100; ++i) {
        const i64 p = i % 2 ? 5 : 7;
        u64 q = 0, q2 = 0, r = 0;
        while (q == q2 || q == r || q2 == r || q == static_cast<u64>(p) || q2 == static_cast<u64>(p) ||
               r == static_cast<u64>(p)) {
            q = primes[static_cast<std::size_t>(oracle::uniform(0, static_cast<i64>(primes.size()) - 1))];
            q2 = primes[static_cast<std::size_t>(oracle::uniform(0, static_cast<i64>(primes.size()) - 1))];
            r = primes[static_cast<std::size_t>(oracle::uniform(0, static_cast<i64>(primes.size()) - 1))];
        }
        EXPECT_FALSE(are_isomorphic(static_cast<i64>(q), static_cast<i64>(r), static_cast<i64>(q2), static_cast<i64>(r), PrimeExponent(p)).isomorphic)
            << q << ' ' << q2 << ' ' << r;
    }
}

TEST(PairwiseDistinct, Examples)
{
    const PrimeExponent five(5);
    const std::vector<FermatCurve> family{{five, 1, 7, 29}, {five, 1, 13, 29}, {five, 1, 23, 29}};
    EXPECT_TRUE(pairwise_distinct(family));
    const std::vector<FermatCurve> repeated{{five, 1, 7, 29}, {five, 1, 13, 29}, {five, 1, 7, 29}};
    EXPECT_FALSE(pairwise_distinct(repeated));
    const std::vector<FermatCurve> rescaled{{five, 1, 7, 29}, {five, 1, 7 * 32, 29}};
    EXPECT_FALSE(pairwise_distinct(rescaled));
    const std::vector<FermatCurve> mixed{{five, 1, 7, 29}, {PrimeExponent(7), 1, 13, 29}};
    EXPECT_THROW((void)pairwise_distinct(mixed), std::invalid_argument);
}
