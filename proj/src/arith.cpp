#include "hasse/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "hasse/primes.hpp"

namespace hasse {

PrimeExponent::PrimeExponent(i64 p) : p_(p)
{
    if (p < 3 || !is_prime(static_cast<u64>(p)))
        throw std::invalid_argument("exponent must be a prime >= 3, got " + std::to_string(p));
}

ResidueClass::ResidueClass(i64 v, u64 m) : value(0), modulus(m)
{
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    value = reduce(v, m);
}

ResidueClass operator*(const ResidueClass& a, const ResidueClass& b)
{
    if (a.modulus != b.modulus) throw std::invalid_argument("residue classes have different moduli");
    ResidueClass r;
    r.modulus = a.modulus;
    r.value = mul_mod(a.value, b.value, a.modulus);
    return r;
}

ResidueClass operator+(const ResidueClass& a, const ResidueClass& b)
{
    if (a.modulus != b.modulus) throw std::invalid_argument("residue classes have different moduli");
    ResidueClass r;
    r.modulus = a.modulus;
    r.value = static_cast<u64>((static_cast<u128>(a.value) + b.value) % a.modulus);
    return r;
}

u64 pow_mod_raw(u64 base, u64 exp, u64 m) noexcept
{
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

ResidueClass pow_mod(i64 base, u64 exp, u64 m)
{
    if (m == 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    ResidueClass r;
    r.modulus = m;
    r.value = pow_mod_raw(reduce(base, m), exp, m);
    return r;
}

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

i64 gcd_signed(i64 a, i64 b) noexcept
{
    return static_cast<i64>(std::gcd(a < 0 ? -static_cast<u64>(a) : static_cast<u64>(a),
                                      b < 0 ? -static_cast<u64>(b) : static_cast<u64>(b)));
}

u64 inverse_mod(i64 a, u64 m)
{
    if (m == 1) return 0;
    i128 old_r = reduce(a, m), r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) throw std::domain_error("value is not invertible modulo " + std::to_string(m));
    old_s %= static_cast<i128>(m);
    if (old_s < 0) old_s += m;
    return static_cast<u64>(old_s);
}

u64 crt(u64 r1, u64 m1, u64 r2, u64 m2)
{
    if (gcd(m1, m2) != 1) throw std::invalid_argument("crt: moduli are not coprime");
    const u64 m = checked_mul(m1, m2);
    // x = r1 + m1 * t with t = (r2 - r1) / m1 mod m2
    const u64 diff = reduce(static_cast<i64>(r2 % m2) - static_cast<i64>(r1 % m2), m2);
    const u64 t = mul_mod(diff, inverse_mod(static_cast<i64>(m1 % m2), m2), m2);
    return static_cast<u64>((static_cast<u128>(m1) * t + r1 % m1) % m);
}

u64 checked_mul(u64 a, u64 b)
{
    const u128 r = static_cast<u128>(a) * b;
    if (r > static_cast<u128>(INT64_MAX)) throw std::overflow_error("integer product exceeds 2^63");
    return static_cast<u64>(r);
}

u64 checked_pow(u64 l, unsigned k)
{
    u64 r = 1;
    for (unsigned i = 0; i < k; ++i) r = checked_mul(r, l);
    return r;
}

Valuation valuation(i64 n, u64 prime, ZeroPolicy zero)
{
    if (prime < 2) throw std::invalid_argument("valuation: prime must be >= 2");
    if (n == 0) {
        if (zero == ZeroPolicy::Reject) throw std::domain_error("valuation of zero is infinite");
        return {prime, 0, true};
    }
    u64 m = n < 0 ? -static_cast<u64>(n) : static_cast<u64>(n);
    int v = 0;
    while (m % prime == 0) {
        m /= prime;
        ++v;
    }
    return {prime, v, false};
}

bool is_pth_power_mod(i64 a, PrimeExponent p, u64 m)
{
    const u64 pp = static_cast<u64>(p.value());
    if (gcd(reduce(a, m), m) != 1) throw std::invalid_argument("is_pth_power_mod: value not coprime to modulus");
    if (m == pp * pp) return pow_mod_raw(reduce(a, m), pp - 1, m) == 1;

    u64 l = m;
    if (!is_prime(m)) {
        l = integer_root(m, 2);
        if (l * l != m || !is_prime(l))
            throw std::invalid_argument("is_pth_power_mod: modulus must be p^2, a prime, or a prime square");
    }
    if (l == pp) throw std::invalid_argument("is_pth_power_mod: modulus p requires p^2");
    // A unit mod l^2 (l != p) is a p-th power iff it is one mod l, by Hensel.
    if ((l - 1) % pp != 0) return true;
    return pow_mod_raw(reduce(a, l), (l - 1) / pp, l) == 1;
}

namespace {

u64 pollard_brent(u64 n)
{
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return static_cast<u64>((static_cast<u128>(x) * x + c) % n); };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 block = 128;
        u64 r = 1;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::map<u64, int>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n)
{
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::map<u64, int> acc;
    for (u64 d = 2; d < 1000 && d * d <= n; ++d) {
        while (n % d == 0) {
            ++acc[d];
            n /= d;
        }
    }
    factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

u64 euler_phi(u64 m)
{
    if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
    u64 phi = m;
    for (const auto& [q, e] : factorize(m)) phi = phi / q * (q - 1);
    return phi;
}

u64 integer_root(u64 n, unsigned k) noexcept
{
    if (k == 1 || n < 2) return n;
    auto pow_le = [&](u64 x) {  // x^k <= n without overflow
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= x;
            if (acc > n) return false;
        }
        return true;
    };
    u64 x = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
    while (x > 0 && !pow_le(x)) --x;
    while (pow_le(x + 1)) ++x;
    return x;
}

u64 primitive_root(u64 l)
{
    if (l == 2) return 1;
    const auto fs = factorize(l - 1);
    for (u64 g = 2; g < l; ++g) {
        const bool ok = std::all_of(fs.begin(), fs.end(),
                                    [&](const auto& f) { return pow_mod_raw(g, (l - 1) / f.first, l) != 1; });
        if (ok) return g;
    }
    throw std::invalid_argument("primitive_root: modulus is not prime");
}

}  // namespace hasse
