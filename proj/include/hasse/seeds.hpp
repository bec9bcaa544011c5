#pragma once

// Seed primes r and the candidate pipeline over the curves x^p + q y^p + r z^p = 0.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hasse/arith.hpp"
#include "hasse/exceptional.hpp"
#include "hasse/oracle.hpp"
#include "hasse/padic.hpp"

namespace hasse {

enum class SeedMode {
    ModP,  // r = -1 mod p and r^(p-1) != 1 mod p^2
    ModN,  // r = -1 mod N and r^(p-1) != 1 mod p^2
};

struct SeedPrime {
    PrimeExponent p;
    u64 r;
    std::optional<u64> N;  // absent when N does not fit in 63 bits
    bool satisfies_mod_p = false;
    bool satisfies_mod_N = false;
    bool wieferich_free = false;
};

enum class Classification { Rejected, InS, InS0Certified, Conditional };

[[nodiscard]] std::string_view to_string(Classification c) noexcept;

struct OracleEvidence {
    bool q_divides_f = false;
    bool ideal_power_principal = true;
    bool assumes_grh = true;
};

struct CandidateStatus {
    u64 q = 0;
    bool in_progression = false;  // q != 1 mod p
    bool in_B = false;
    bool locally_solvable_everywhere = false;
    std::map<u64, Verdict> verdicts;
    std::optional<Point> rational_point;
    std::optional<OracleEvidence> oracle;
    Classification classification = Classification::Rejected;
    std::string reason;
};

class OracleMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// N = p * prod S(p). Throws std::overflow_error past 2^63.
[[nodiscard]] u64 compute_N(PrimeExponent p, const ExceptionalSet& exceptional);

/// Residue class c mod N*p whose members x satisfy x = -1 mod N and
/// x^(p-1) != 1 mod p^2.
[[nodiscard]] ResidueClass seed_residue(PrimeExponent p, u64 N);

/// Evaluates all seed flags for a given r.
[[nodiscard]] SeedPrime classify_seed(PrimeExponent p, u64 r, const ExceptionalSet& exceptional);

[[nodiscard]] std::vector<SeedPrime> find_seeds(PrimeExponent p, const ExceptionalSet& exceptional, SeedMode mode,
                                                u64 start, std::size_t count);

/// q or q/r is a p-th power mod p^2. Requires q != 1 mod p and q not in {p, r}.
[[nodiscard]] bool in_B(u64 q, PrimeExponent p, u64 r);

/// Runs the pipeline for every prime q < q_limit with q != 1 mod p. The seed
/// must satisfy r = -1 mod p and r^(p-1) != 1 mod p^2.
[[nodiscard]] std::vector<CandidateStatus> scan_candidates(const SeedPrime& seed, const ExceptionalSet& exceptional,
                                                           u64 q_limit, const OracleReport* oracle = nullptr,
                                                           const LocalOptions& options = {});

}  // namespace hasse
