#pragma once

// Exact integer and modular arithmetic shared by every stage of the pipeline.
//
// All moduli are at most 2^63. Products are formed in 128-bit arithmetic, so
// mul_mod / pow_mod never overflow for any modulus in range.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hasse {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Raised when a computation would exceed a configured size budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A prime exponent p >= 3. Construction validates primality.
class PrimeExponent {
public:
    explicit PrimeExponent(i64 p);

    [[nodiscard]] i64 value() const noexcept { return p_; }
    [[nodiscard]] i64 squared() const noexcept { return p_ * p_; }
    operator i64() const noexcept { return p_; }  // NOLINT: used as an integer throughout

    friend bool operator==(PrimeExponent, PrimeExponent) = default;

private:
    i64 p_;
};

/// An element of Z/mZ, stored as its least non-negative representative.
struct ResidueClass {
    u64 value = 0;
    u64 modulus = 1;

    ResidueClass() = default;
    ResidueClass(i64 v, u64 m);

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

ResidueClass operator*(const ResidueClass& a, const ResidueClass& b);
ResidueClass operator+(const ResidueClass& a, const ResidueClass& b);

/// v_l(n). `infinite` is set only for n = 0 under ZeroPolicy::Infinite.
struct Valuation {
    u64 prime = 2;
    int v = 0;
    bool infinite = false;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

enum class ZeroPolicy { Reject, Infinite };

// -- primitives ------------------------------------------------------------

[[nodiscard]] constexpr u64 mul_mod(u64 a, u64 b, u64 m) noexcept
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// Least non-negative residue of a signed value.
[[nodiscard]] constexpr u64 reduce(i64 a, u64 m) noexcept
{
    const i128 r = static_cast<i128>(a) % static_cast<i128>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i128>(m) : r);
}

[[nodiscard]] u64 pow_mod_raw(u64 base, u64 exp, u64 m) noexcept;

/// base^exp mod m, O(log exp) multiplications. m >= 1.
[[nodiscard]] ResidueClass pow_mod(i64 base, u64 exp, u64 m);

[[nodiscard]] u64 gcd(u64 a, u64 b) noexcept;
[[nodiscard]] i64 gcd_signed(i64 a, i64 b) noexcept;

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
[[nodiscard]] u64 inverse_mod(i64 a, u64 m);

/// x with x = r1 mod m1 and x = r2 mod m2 for coprime moduli; result mod m1*m2.
[[nodiscard]] u64 crt(u64 r1, u64 m1, u64 r2, u64 m2);

/// Exact l^k, throwing std::overflow_error past 2^63.
[[nodiscard]] u64 checked_pow(u64 l, unsigned k);
[[nodiscard]] u64 checked_mul(u64 a, u64 b);

[[nodiscard]] Valuation valuation(i64 n, u64 prime, ZeroPolicy zero = ZeroPolicy::Reject);

/// Is `a` a p-th power in (Z/mZ)*? m must be p^2, a prime l != p, or l^2 for such l.
[[nodiscard]] bool is_pth_power_mod(i64 a, PrimeExponent p, u64 m);

/// Prime factorization in increasing order of primes.
[[nodiscard]] std::vector<std::pair<u64, int>> factorize(u64 n);

[[nodiscard]] u64 euler_phi(u64 m);

/// floor(n^(1/k)) for k >= 1.
[[nodiscard]] u64 integer_root(u64 n, unsigned k) noexcept;

/// Smallest primitive root modulo the prime l.
[[nodiscard]] u64 primitive_root(u64 l);

}  // namespace hasse
