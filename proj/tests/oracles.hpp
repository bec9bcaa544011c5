#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library's algorithms; each routine is the most direct enumeration
// of the definition it checks.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 naive_pow_mod(i64 base, u64 exp, u64 m)
{
    i64 b = base % static_cast<i64>(m);
    if (b < 0) b += static_cast<i64>(m);
    u64 r = 1 % m;
    for (u64 i = 0; i < exp; ++i) r = static_cast<u64>((static_cast<unsigned __int128>(r) * static_cast<u64>(b)) % m);
    return r;
}

inline std::vector<u64> sieve(u64 limit)  // primes <= limit
{
    std::vector<char> is(limit + 1, 1);
    std::vector<u64> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (!is[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) is[j] = 0;
    }
    return out;
}

inline bool trial_prime(u64 n)
{
    if (n < 4) return n >= 2;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (u64 d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

/// {x^p mod m : x in (Z/mZ)^*} by enumeration.
inline std::set<u64> unit_pth_powers(u64 p, u64 m)
{
    std::set<u64> out;
    for (u64 x = 1; x < m; ++x) {
        u64 a = x, b = m;
        while (b) {
            const u64 t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) out.insert(naive_pow_mod(static_cast<i64>(x), p, m));
    }
    return out;
}

/// Does u x^p + v y^p + w z^p = 0 have a nonzero solution in F_l^3?
inline bool brute_has_zero(u64 u, u64 v, u64 w, u64 p, u64 l)
{
    std::vector<u64> pw(l);
    for (u64 t = 0; t < l; ++t) pw[t] = naive_pow_mod(static_cast<i64>(t), p, l);
    for (u64 x = 0; x < l; ++x)
        for (u64 y = 0; y < l; ++y)
            for (u64 z = 0; z < l; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if ((u * pw[x] + v * pw[y] + w * pw[z]) % l == 0) return true;
            }
    return false;
}

/// Every (u, v, w) in (F_l^*)^3 with no nontrivial zero.
inline std::vector<std::array<u64, 3>> brute_failing_triples(u64 p, u64 l)
{
    std::vector<u64> pw(l);
    for (u64 t = 0; t < l; ++t) pw[t] = naive_pow_mod(static_cast<i64>(t), p, l);
    std::vector<std::array<u64, 3>> out;
    for (u64 u = 1; u < l; ++u)
        for (u64 v = 1; v < l; ++v)
            for (u64 w = 1; w < l; ++w) {
                bool found = false;
                for (u64 x = 0; x < l && !found; ++x)
                    for (u64 y = 0; y < l && !found; ++y)
                        for (u64 z = 0; z < l && !found; ++z) {
                            if (x == 0 && y == 0 && z == 0) continue;
                            found = (u * pw[x] + v * pw[y] + w * pw[z]) % l == 0;
                        }
                if (!found) out.push_back({u, v, w});
            }
    return out;
}

/// Solvability of a x^p + b y^p + c z^p = 0 mod m with some coordinate equal to 1.
inline bool congruence_solvable_with_unit(std::array<i64, 3> coeffs, u64 p, u64 m)
{
    std::array<u64, 3> c{};
    for (int i = 0; i < 3; ++i) {
        i64 r = coeffs[i] % static_cast<i64>(m);
        c[i] = static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
    }
    std::vector<u64> pw(m);
    for (u64 t = 0; t < m; ++t) {
        unsigned __int128 acc = 1;
        for (u64 k = 0; k < p; ++k) acc = acc * t % m;
        pw[t] = static_cast<u64>(acc);
    }
    for (int one = 0; one < 3; ++one) {
        const int j = (one + 1) % 3, k = (one + 2) % 3;
        std::unordered_set<u64> last;
        for (u64 t = 0; t < m; ++t) last.insert(static_cast<u64>(static_cast<unsigned __int128>(c[k]) * pw[t] % m));
        for (u64 t = 0; t < m; ++t) {
            const u64 s = static_cast<u64>((c[one] + static_cast<unsigned __int128>(c[j]) * pw[t]) % m);
            if (last.count((m - s) % m)) return true;
        }
    }
    return false;
}

/// Primitive points of height <= H by a full triple loop (small H only).
inline std::set<std::array<i64, 3>> brute_points(std::array<i64, 3> c, unsigned p, i64 H)
{
    auto pw = [p](i64 t) {
        __int128 r = 1;
        for (unsigned i = 0; i < p; ++i) r *= t;
        return r;
    };
    auto g = [](i64 a, i64 b) {
        a = a < 0 ? -a : a;
        b = b < 0 ? -b : b;
        while (b) {
            const i64 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    std::set<std::array<i64, 3>> out;
    for (i64 x = -H; x <= H; ++x)
        for (i64 y = -H; y <= H; ++y)
            for (i64 z = -H; z <= H; ++z) {
                if (g(g(x, y), z) != 1) continue;
                if (c[0] * pw(x) + c[1] * pw(y) + c[2] * pw(z) != 0) continue;
                std::array<i64, 3> pt{x, y, z};
                for (i64 t : pt) {
                    if (t == 0) continue;
                    if (t < 0)
                        for (auto& s : pt) s = -s;
                    break;
                }
                out.insert(pt);
            }
    return out;
}

/// Is n (nonzero) = +-t^p, decided through its prime factorization.
inline bool factor_pth_power(i64 n, unsigned p)
{
    u64 m = n < 0 ? static_cast<u64>(-n) : static_cast<u64>(n);
    for (u64 d = 2; d * d <= m; ++d) {
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e % p) return false;
    }
    return m == 1;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240229);
    return gen;
}

inline i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng()); }

}  // namespace oracle
