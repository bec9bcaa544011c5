#include "hasse/primes.hpp"

#include <algorithm>
#include <array>

namespace hasse {

bool is_prime(u64 n) noexcept
{
    if (n < 2) return false;
    constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n % w == 0) return n == w;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        u64 x = pow_mod_raw(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> small_primes(u64 limit)
{
    std::vector<u64> out;
    if (limit <= 2) return out;
    std::vector<bool> composite(limit, false);
    for (u64 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

PrimeStream::PrimeStream(u64 from) : low_(std::max<u64>(from, 2)) {}

u64 PrimeStream::next()
{
    while (pos_ == buffer_.size()) sieve_next_segment();
    return buffer_[pos_++];
}

void PrimeStream::sieve_next_segment()
{
    const u64 lo = low_;
    const u64 hi = lo + kSegment;  // exclusive
    const u64 need = integer_root(hi, 2) + 1;
    if (need >= base_limit_) {
        base_limit_ = std::max<u64>(need * 2, 1024);
        base_ = small_primes(base_limit_);
    }
    std::vector<char> composite(kSegment, 0);
    for (u64 q : base_) {
        if (q * q >= hi) break;
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        for (u64 j = start; j < hi; j += q) composite[j - lo] = 1;
    }
    buffer_.clear();
    pos_ = 0;
    for (u64 i = 0; i < kSegment; ++i) {
        if (!composite[i] && lo + i >= 2) buffer_.push_back(lo + i);
    }
    low_ = hi;
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& f)
{
    if (hi < 2 || lo > hi) return;
    PrimeStream stream(lo);
    for (u64 q = stream.next(); q <= hi; q = stream.next()) f(q);
}

std::vector<u64> primes_in_class(i64 a, u64 m, u64 from, std::size_t count)
{
    if (m == 0) throw std::invalid_argument("primes_in_class: modulus must be positive");
    const u64 residue = reduce(a, m);
    if (gcd(residue, m) != 1)
        throw std::invalid_argument("primes_in_class: gcd(a, m) != 1, the progression holds at most one prime");

    std::vector<u64> out;
    out.reserve(count);
    if (count == 0) return out;

    // Dense progressions go through the sieve; sparse ones (large m) step the
    // progression directly with the deterministic primality test.
    constexpr u64 kSieveModulusLimit = 4096;
    if (m <= kSieveModulusLimit) {
        PrimeStream stream(from);
        while (out.size() < count) {
            const u64 q = stream.next();
            if (q % m == residue) out.push_back(q);
        }
        return out;
    }
    const u64 start = std::max<u64>(from, 2);
    u64 x = start - start % m + residue;
    if (x < start) x += m;
    for (; out.size() < count; x += m) {
        if (x > static_cast<u64>(INT64_MAX) - m) throw std::overflow_error("primes_in_class: search passed 2^63");
        if (is_prime(x)) out.push_back(x);
    }
    return out;
}

}  // namespace hasse
