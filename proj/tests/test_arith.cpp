#include <gtest/gtest.h>

#include "hasse/arith.hpp"
#include "hasse/primes.hpp"
#include "hasse/rational.hpp"
#include "oracles.hpp"

using namespace hasse;

TEST(PrimeExponent, AcceptsOddPrimes)
{
    EXPECT_EQ(PrimeExponent(3).value(), 3);
    EXPECT_EQ(PrimeExponent(19).squared(), 361);
    EXPECT_THROW(PrimeExponent(4), std::invalid_argument);
    EXPECT_THROW(PrimeExponent(2), std::invalid_argument);
    EXPECT_THROW(PrimeExponent(1), std::invalid_argument);
    EXPECT_THROW(PrimeExponent(-5), std::invalid_argument);
}

TEST(ResidueClass, RequiresEqualModuli)
{
    const ResidueClass a(3, 7), b(5, 7), c(1, 8);
    EXPECT_EQ((a * b).value, 1u);
    EXPECT_EQ((a + b).value, 1u);
    EXPECT_THROW((void)(a * c), std::invalid_argument);
    EXPECT_THROW((void)(a + c), std::invalid_argument);
    EXPECT_EQ(ResidueClass(-1, 5).value, 4u);
}

TEST(PowMod, Examples)
{
    EXPECT_EQ(pow_mod(29, 4, 25).value, 6u);
    EXPECT_EQ(pow_mod(29, 4, 25).modulus, 25u);
    EXPECT_EQ(pow_mod(7, 6, 49).value, oracle::naive_pow_mod(7, 6, 49));
    EXPECT_EQ(pow_mod(7, 6, 49).value, 0u);
    for (i64 x : {1, 2, 3, 4, 6, 8, 9}) EXPECT_EQ(pow_mod(x, 0, 25).value, 1u);
    EXPECT_EQ(pow_mod(5, 3, 1).value, 0u);
}

TEST(PowMod, MatchesRepeatedMultiplication)
{
    for (int i = 0; i < 2000; ++i) {
        const i64 base = oracle::uniform(-1'000'000, 1'000'000);
        const u64 exp = static_cast<u64>(oracle::uniform(0, 60));
        const u64 m = static_cast<u64>(oracle::uniform(1, i64{1} << 40));
        EXPECT_EQ(pow_mod(base, exp, m).value, oracle::naive_pow_mod(base, exp, m)) << base << '^' << exp << " mod " << m;
    }
}

TEST(PowMod, LargeModulusDoesNotOverflow)
{
    const u64 m = (u64{1} << 61) - 1;
    EXPECT_EQ(pow_mod(3, m - 1, m).value, 1u);
    EXPECT_EQ(pow_mod(-2, 3, m).value, m - 8);
}

TEST(Valuation, Examples)
{
    EXPECT_EQ(valuation(250, 5).v, 3);
    EXPECT_EQ(valuation(7, 5).v, 0);
    EXPECT_EQ(valuation(-125, 5).v, 3);
    EXPECT_THROW((void)valuation(0, 5), std::domain_error);
    EXPECT_TRUE(valuation(0, 5, ZeroPolicy::Infinite).infinite);
}

TEST(Valuation, AdditiveOverProducts)
{
    for (int i = 0; i < 3000; ++i) {
        const i64 a = oracle::uniform(1, 3'000'000) * (oracle::uniform(0, 1) ? 1 : -1);
        const i64 b = oracle::uniform(1, 3'000'000);
        for (u64 l : {2u, 3u, 5u, 7u, 11u}) {
            const auto va = valuation(a, l), vb = valuation(b, l), vab = valuation(a * b, l);
            EXPECT_EQ(vab.v, va.v + vb.v);
            u64 pw = 1;
            for (int k = 0; k < vab.v; ++k) pw *= l;
            const u64 n = static_cast<u64>(a < 0 ? -(a * b) : a * b);
            EXPECT_EQ(n % pw, 0u);
            EXPECT_NE(n % (pw * l), 0u);
        }
    }
}

TEST(PthPowerMod, Examples)
{
    EXPECT_FALSE(is_pth_power_mod(29, PrimeExponent(5), 25));
    for (i64 p : {3, 5, 7, 11, 13}) EXPECT_TRUE(is_pth_power_mod(1, PrimeExponent(p), static_cast<u64>(p * p)));
    const auto fifth = oracle::unit_pth_powers(5, 11);
    EXPECT_EQ(fifth, (std::set<u64>{1, 10}));
    for (i64 a = 1; a < 11; ++a) EXPECT_EQ(is_pth_power_mod(a, PrimeExponent(5), 11), fifth.count(static_cast<u64>(a)) == 1);
}

TEST(PthPowerMod, RejectsBadInput)
{
    EXPECT_THROW((void)is_pth_power_mod(5, PrimeExponent(5), 25), std::invalid_argument);
    EXPECT_THROW((void)is_pth_power_mod(2, PrimeExponent(5), 5), std::invalid_argument);
    EXPECT_THROW((void)is_pth_power_mod(2, PrimeExponent(5), 15), std::invalid_argument);
    EXPECT_THROW((void)is_pth_power_mod(2, PrimeExponent(5), 125), std::invalid_argument);
}

TEST(PthPowerMod, BijectiveWhenNotOneModP)
{
    for (i64 p : {3, 5, 7, 11}) {
        const PrimeExponent pe(p);
        for (u64 l : oracle::sieve(500)) {
            if (l == static_cast<u64>(p) || l % static_cast<u64>(p) == 1) continue;
            for (u64 a = 1; a < l; ++a) ASSERT_TRUE(is_pth_power_mod(static_cast<i64>(a), pe, l)) << a << " mod " << l;
        }
    }
}

TEST(PthPowerMod, ModPSquaredMatchesEnumeration)
{
    for (i64 p : {5, 7}) {
        const u64 m = static_cast<u64>(p * p);
        const auto powers = oracle::unit_pth_powers(static_cast<u64>(p), m);
        EXPECT_EQ(powers.size(), static_cast<std::size_t>(p - 1));
        for (u64 a = 1; a < m; ++a) {
            if (a % static_cast<u64>(p) == 0) continue;
            EXPECT_EQ(is_pth_power_mod(static_cast<i64>(a), PrimeExponent(p), m), powers.count(a) == 1) << a;
            EXPECT_EQ(is_pth_power_mod(static_cast<i64>(a) - static_cast<i64>(m) * 3, PrimeExponent(p), m),
                      powers.count(a) == 1);
        }
    }
}

TEST(PthPowerMod, PrimeAndPrimeSquaredModuliMatchEnumeration)
{
    for (i64 p : {3, 5, 7}) {
        for (u64 l : oracle::sieve(200)) {
            if (l % static_cast<u64>(p) != 1) continue;
            const auto powers = oracle::unit_pth_powers(static_cast<u64>(p), l);
            for (u64 a = 1; a < l; ++a)
                ASSERT_EQ(is_pth_power_mod(static_cast<i64>(a), PrimeExponent(p), l), powers.count(a) == 1);
            if (l * l > 5000) continue;
            const auto sq = oracle::unit_pth_powers(static_cast<u64>(p), l * l);
            for (u64 a = 1; a < l * l; ++a) {
                if (a % l == 0) continue;
                ASSERT_EQ(is_pth_power_mod(static_cast<i64>(a), PrimeExponent(p), l * l), sq.count(a) == 1);
            }
        }
    }
}

TEST(EulerPhi, Examples)
{
    EXPECT_EQ(euler_phi(25), 20u);
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(49), 42u);
    for (u64 m = 1; m < 400; ++m) {
        u64 count = 0;
        for (u64 k = 1; k <= m; ++k) count += gcd(k, m) == 1;
        EXPECT_EQ(euler_phi(m), count) << m;
    }
}

TEST(Factorize, ReconstructsInput)
{
    for (int i = 0; i < 300; ++i) {
        const u64 n = static_cast<u64>(oracle::uniform(2, i64{1} << 50));
        u64 prod = 1;
        for (auto [q, e] : factorize(n)) {
            EXPECT_TRUE(oracle::trial_prime(q) || q > 1'000'000'000) << q;
            EXPECT_TRUE(is_prime(q));
            for (int k = 0; k < e; ++k) prod *= q;
        }
        EXPECT_EQ(prod, n);
    }
    EXPECT_EQ(factorize(1'000'000'007ull * 998'244'353ull).size(), 2u);
}

TEST(Crt, CombinesCoprimeModuli)
{
    for (int i = 0; i < 500; ++i) {
        const u64 m1 = static_cast<u64>(oracle::uniform(2, 100'000));
        const u64 m2 = static_cast<u64>(oracle::uniform(2, 100'000));
        if (gcd(m1, m2) != 1) continue;
        const u64 r1 = static_cast<u64>(oracle::uniform(0, static_cast<i64>(m1) - 1));
        const u64 r2 = static_cast<u64>(oracle::uniform(0, static_cast<i64>(m2) - 1));
        const u64 x = crt(r1, m1, r2, m2);
        EXPECT_LT(x, m1 * m2);
        EXPECT_EQ(x % m1, r1);
        EXPECT_EQ(x % m2, r2);
    }
}

TEST(InverseMod, InvertsUnits)
{
    EXPECT_EQ(inverse_mod(29, 25), 19u);  // 4 * 19 = 76 = 1 mod 25
    EXPECT_EQ(mul_mod(inverse_mod(-3, 49), reduce(-3, 49), 49), 1u);
    EXPECT_THROW((void)inverse_mod(10, 25), std::domain_error);
}

TEST(CheckedArithmetic, DetectsOverflow)
{
    EXPECT_EQ(checked_pow(19, 3), 6859u);
    EXPECT_EQ(checked_mul(1u << 31, 1u << 31), u64{1} << 62);
    EXPECT_THROW((void)checked_pow(2, 64), std::overflow_error);
    EXPECT_THROW((void)checked_mul(u64{1} << 40, u64{1} << 40), std::overflow_error);
}

TEST(IntegerRoot, Exact)
{
    EXPECT_EQ(integer_root(243, 5), 3u);
    EXPECT_EQ(integer_root(242, 5), 2u);
    EXPECT_EQ(integer_root(u64{1} << 62, 2), u64{1} << 31);
    EXPECT_EQ(integer_root(0, 7), 0u);
}

TEST(PrimitiveRoot, GeneratesUnitGroup)
{
    for (u64 l : oracle::sieve(300)) {
        if (l == 2) continue;
        const u64 g = primitive_root(l);
        std::set<u64> seen;
        u64 x = 1;
        for (u64 k = 0; k + 1 < l; ++k) {
            seen.insert(x);
            x = x * g % l;
        }
        EXPECT_EQ(seen.size(), l - 1) << l;
    }
}

TEST(Rational, Arithmetic)
{
    const Rational a(3, 2), b(-4, 6);
    EXPECT_EQ(b.num(), -2);
    EXPECT_EQ(b.den(), 3);
    EXPECT_EQ(a * b, Rational(-1));
    EXPECT_EQ(a + b, Rational(5, 6));
    EXPECT_EQ(a / b, Rational(-9, 4));
    EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
    EXPECT_LT(b, a);
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_EQ(Rational(5, 10).str(), "1/2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW((void)Rational(0).inverse(), std::domain_error);
    EXPECT_THROW((void)Rational::parse("1/x"), std::invalid_argument);
    EXPECT_THROW((void)(Rational(i64{1} << 62) * Rational(8)), std::overflow_error);
}
