#pragma once

// Local solvability of diagonal curves a x^p + b y^p + c z^p = 0 over Q_l,
// and a bounded search for global points.
//
// decide_local is exact. With m = v_l(p) + max v_l(coeff) on the normalized
// model and K = 2m + 1, the curve has a Q_l-point iff some triple mod l^K with
// one coordinate equal to 1 satisfies the congruence: at that coordinate the
// derivative has valuation <= m, so Hensel's lemma lifts any such solution.

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "hasse/arith.hpp"
#include "hasse/exceptional.hpp"
#include "hasse/rational.hpp"

namespace hasse {

class FermatCurve {
public:
    FermatCurve(PrimeExponent p, Rational a, Rational b, Rational c);

    [[nodiscard]] PrimeExponent p() const noexcept { return p_; }
    [[nodiscard]] const std::array<Rational, 3>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Integer coefficients; throws std::logic_error unless all are integers.
    [[nodiscard]] std::array<i64, 3> integer_coeffs() const;

    friend bool operator==(const FermatCurve&, const FermatCurve&) = default;

private:
    PrimeExponent p_;
    std::array<Rational, 3> coeffs_;
};

/// Coprime integer coefficients, each free of p-th powers. Preserves the
/// solvability of the equation over Q and every Q_l.
[[nodiscard]] FermatCurve normalize(const FermatCurve& curve);
[[nodiscard]] bool is_normalized(const FermatCurve& curve);

enum class Verdict { Solvable, Obstructed };

enum class Justification {
    GoodReduction,      // l does not divide p*a*b*c and is not exceptional
    PowerMapBijective,  // l != 1 mod p: every unit is a p-th power
    UnitPowerAtP,       // l = p and some -c_i/c_j is a p-th power mod p^2
    LiftingSearch,      // exhaustive search mod l^K
    GlobalPoint,        // the curve has an evident rational point
};

[[nodiscard]] std::string_view to_string(Verdict v) noexcept;
[[nodiscard]] std::string_view to_string(Justification j) noexcept;

struct LocalVerdict {
    u64 prime = 0;
    Verdict verdict = Verdict::Solvable;
    Justification reason = Justification::LiftingSearch;
    unsigned precision = 0;  // K; set when the lifting search ran
    u64 modulus = 0;         // l^K
    std::optional<std::array<u64, 3>> witness;

    [[nodiscard]] bool solvable() const noexcept { return verdict == Verdict::Solvable; }
};

struct LocalOptions {
    const ExceptionalSet* exceptional = nullptr;  // enables the good-reduction shortcut
    bool shortcuts = true;
    u64 budget = u64{1} << 24;  // largest l^K the search may enumerate
};

/// K = 2 (v_l(p) + max_i v_l(c_i)) + 1 for a normalized curve.
[[nodiscard]] unsigned lifting_precision(const FermatCurve& normalized, u64 l);

/// Exhaustive search mod l^precision over triples with a coordinate equal to 1.
/// Throws ResourceError when l^precision exceeds budget.
[[nodiscard]] LocalVerdict lifting_search(const FermatCurve& normalized, u64 l, unsigned precision, u64 budget);

[[nodiscard]] std::optional<LocalVerdict> good_reduction_shortcut(const FermatCurve& normalized, u64 l,
                                                                  const ExceptionalSet& exceptional);
[[nodiscard]] std::optional<LocalVerdict> bijective_shortcut(const FermatCurve& normalized, u64 l);
[[nodiscard]] std::optional<LocalVerdict> unit_power_shortcut(const FermatCurve& normalized, u64 l);

/// Decides whether curve(Q_l) is nonempty. The curve is normalized first.
[[nodiscard]] LocalVerdict decide_local(const FermatCurve& curve, u64 l, const LocalOptions& options = {});

using Point = std::array<i64, 3>;

/// A point with coordinates in {0, 1, -1} on the normalized model, if any.
[[nodiscard]] std::optional<Point> obvious_rational_point(const FermatCurve& normalized);

struct LocalReport {
    FermatCurve curve;  // normalized model
    std::vector<u64> checked_primes;
    std::map<u64, LocalVerdict> verdicts;
    std::optional<Point> global_point;

    [[nodiscard]] bool globally_solvable() const;
    [[nodiscard]] std::vector<u64> obstructions() const;
};

/// Verdicts at {p} u S(p) u {primes dividing the normalized a*b*c}; every
/// other prime is solvable by the good-reduction argument.
[[nodiscard]] LocalReport local_report(const FermatCurve& curve, const ExceptionalSet& exceptional,
                                       const LocalOptions& options = {});

/// Primitive integer points with max(|x|,|y|,|z|) <= height, first nonzero
/// coordinate positive, sorted.
[[nodiscard]] std::vector<Point> search_rational_points(const FermatCurve& curve, i64 height);

}  // namespace hasse
