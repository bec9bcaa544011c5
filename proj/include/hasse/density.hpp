#pragma once

// Residue-class counting mod p^2 for the set B of primes q != 1 mod p such
// that q or q/r is a p-th power mod p^2, and empirical prime densities.

#include <map>
#include <optional>
#include <vector>

#include "hasse/arith.hpp"
#include "hasse/rational.hpp"

namespace hasse {

struct EmpiricalDensity {
    u64 cutoff = 0;          // X
    u64 primes = 0;          // primes <= X other than p and r
    u64 hits = 0;            // of those, members of B
    double ratio = 0.0;      // hits / primes
    std::map<u64, u64> class_hits;  // qualifying class -> count

    // Present when local solvability at p was measured.
    std::optional<u64> solvable_hits;     // q != 1 mod p, solvable at p
    std::optional<double> solvable_ratio;
    u64 b_members_obstructed = 0;         // B-members obstructed at p; 0 if B is inside S
};

struct DensityReport {
    PrimeExponent p;
    u64 r;
    std::vector<u64> qualifying_classes;
    Rational exact_density;  // |classes| / phi(p^2)
    std::optional<EmpiricalDensity> empirical;
};

/// Units c mod p^2 with c != 1 mod p and c or c/r a p-th power; sorted.
/// Throws std::invalid_argument when p divides r.
[[nodiscard]] std::vector<u64> qualifying_classes(PrimeExponent p, u64 r);

/// Exact class data only.
[[nodiscard]] DensityReport exact_density(PrimeExponent p, u64 r);

/// Counts primes q <= X in the qualifying classes. With measure_solvable, also
/// runs the local decision at p on x^p + q y^p + r z^p for every q != 1 mod p.
[[nodiscard]] DensityReport empirical_density(PrimeExponent p, u64 r, u64 X, bool measure_solvable = false);

struct DensityThreshold {
    Rational threshold;    // 1/p
    Rational lower_bound;  // 2(p-2)/(p(p-1))
    bool exceeds = false;  // lower_bound > threshold
};

/// Throws std::invalid_argument for p = 3.
[[nodiscard]] DensityThreshold theorem2_threshold(PrimeExponent p);

}  // namespace hasse
