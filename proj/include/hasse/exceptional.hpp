#pragma once

// Exceptional primes for an exponent p: primes l != p for which some diagonal
// curve u x^p + v y^p + w z^p = 0 with u, v, w in F_l^* has no F_l-point.
// Weil's bound confines them below ((p-1)(p-2))^2.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hasse/arith.hpp"

namespace hasse {

using Triple = std::array<u64, 3>;

struct ExceptionalCheck {
    bool exceptional = false;
    std::optional<Triple> witness;  // lexicographically least (u, v, w), u = 1
};

struct ExceptionalSet {
    PrimeExponent p;
    u64 bound;                       // ((p-1)(p-2))^2
    std::vector<u64> members;        // sorted
    std::map<u64, Triple> witnesses;

    [[nodiscard]] bool contains(u64 l) const;
};

struct ExceptionalOptions {
    i64 max_p = 31;
    unsigned jobs = 1;
};

class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] u64 weil_bound(PrimeExponent p);

/// Throws std::invalid_argument when l == p or l is not prime.
[[nodiscard]] ExceptionalCheck is_exceptional(u64 l, PrimeExponent p);

/// Unordered coset-representative pairs (i, j), i <= j, such that
/// x^p + g^i y^p + g^j z^p = 0 has no nontrivial point mod l (g the least
/// primitive root). Empty when l is not exceptional.
[[nodiscard]] std::vector<std::pair<unsigned, unsigned>> failing_coset_pairs(u64 l, PrimeExponent p);

/// Does u x^p + v y^p + w z^p = 0 have a nontrivial solution over F_l?
[[nodiscard]] bool has_nontrivial_zero(const Triple& coeffs, PrimeExponent p, u64 l);

/// Throws ResourceError when p exceeds options.max_p.
[[nodiscard]] ExceptionalSet exceptional_set(PrimeExponent p, const ExceptionalOptions& options = {});

// Fixture files: a two-line header naming the format and the bound, then one
// "p l u v w" record per exceptional prime.
void write_fixture(const ExceptionalSet& set, std::ostream& os);
[[nodiscard]] ExceptionalSet read_fixture(std::istream& is, PrimeExponent expected_p);
[[nodiscard]] std::filesystem::path fixture_path(const std::filesystem::path& dir, PrimeExponent p);

/// Reads the fixture for p from dir, computing and writing it when absent or
/// when refresh is set.
[[nodiscard]] ExceptionalSet load_or_compute(PrimeExponent p, const std::filesystem::path& dir, bool refresh,
                                             const ExceptionalOptions& options = {});

}  // namespace hasse
