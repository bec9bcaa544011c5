#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hasse/arith.hpp"

namespace hasse {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
[[nodiscard]] bool is_prime(u64 n) noexcept;

/// All primes below `limit` (plain Eratosthenes; used for base primes).
[[nodiscard]] std::vector<u64> small_primes(u64 limit);

// Streams primes >= `from` in increasing order using a segmented sieve.
// Base primes are extended on demand, so the stream is unbounded.
class PrimeStream {
public:
    static constexpr std::size_t kSegment = std::size_t{1} << 18;

    explicit PrimeStream(u64 from = 2);

    u64 next();

private:
    void sieve_next_segment();

    u64 low_;  // start of the next segment to sieve
    std::vector<u64> base_;
    u64 base_limit_ = 0;
    std::vector<u64> buffer_;
    std::size_t pos_ = 0;
};

/// Calls f(q) for every prime q in [lo, hi].
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& f);

/// First `count` primes >= from with q = a (mod m), increasing.
/// Throws std::invalid_argument when gcd(a, m) != 1.
[[nodiscard]] std::vector<u64> primes_in_class(i64 a, u64 m, u64 from, std::size_t count);

}  // namespace hasse
