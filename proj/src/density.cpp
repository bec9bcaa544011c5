#include "hasse/density.hpp"

#include <unordered_map>

#include "hasse/padic.hpp"
#include "hasse/primes.hpp"

namespace hasse {

std::vector<u64> qualifying_classes(PrimeExponent p, u64 r)
{
    const u64 pp = static_cast<u64>(p.value());
    const u64 p2 = pp * pp;
    if (r % pp == 0) throw std::invalid_argument("qualifying_classes: p divides r");
    const u64 r_inv = inverse_mod(static_cast<i64>(r % p2), p2);
    std::vector<u64> out;
    for (u64 c = 1; c < p2; ++c) {
        if (c % pp == 0 || c % pp == 1) continue;
        if (pow_mod_raw(c, pp - 1, p2) == 1 || pow_mod_raw(mul_mod(c, r_inv, p2), pp - 1, p2) == 1) out.push_back(c);
    }
    return out;
}

DensityReport exact_density(PrimeExponent p, u64 r)
{
    DensityReport rep{p, r, qualifying_classes(p, r), Rational{}, std::nullopt};
    const u64 phi = euler_phi(static_cast<u64>(p.squared()));
    rep.exact_density = Rational(static_cast<i64>(rep.qualifying_classes.size()), static_cast<i64>(phi));
    return rep;
}

DensityReport empirical_density(PrimeExponent p, u64 r, u64 X, bool measure_solvable)
{
    DensityReport rep = exact_density(p, r);
    const u64 pp = static_cast<u64>(p.value());
    const u64 p2 = pp * pp;
    const u64 p3 = p2 * pp;

    std::vector<char> qualifies(p2, 0);
    for (u64 c : rep.qualifying_classes) qualifies[c] = 1;

    EmpiricalDensity emp;
    emp.cutoff = X;
    for (u64 c : rep.qualifying_classes) emp.class_hits[c] = 0;

    // The curve x^p + q y^p + r z^p has unit coefficients at p, so the lifting
    // precision is 3 and solvability at p depends only on q mod p^3.
    std::unordered_map<u64, bool> solvable_by_class;
    auto solvable_at_p = [&](u64 q) {
        const u64 key = q % p3;
        if (auto it = solvable_by_class.find(key); it != solvable_by_class.end()) return it->second;
        const FermatCurve curve(p, 1, static_cast<i64>(key), static_cast<i64>(r % p3));
        const bool ok = decide_local(curve, pp).solvable();
        solvable_by_class.emplace(key, ok);
        return ok;
    };
    u64 s_hits = 0;

    for_each_prime(2, X, [&](u64 q) {
        if (q == pp || q == r) return;
        ++emp.primes;
        const bool in_b = qualifies[q % p2] != 0;
        if (in_b) {
            ++emp.hits;
            ++emp.class_hits[q % p2];
        }
        if (measure_solvable && q % pp != 1) {
            const bool ok = solvable_at_p(q);
            if (ok) ++s_hits;
            if (in_b && !ok) ++emp.b_members_obstructed;
        }
    });
    emp.ratio = emp.primes ? static_cast<double>(emp.hits) / static_cast<double>(emp.primes) : 0.0;
    if (measure_solvable) {
        emp.solvable_hits = s_hits;
        emp.solvable_ratio = emp.primes ? static_cast<double>(s_hits) / static_cast<double>(emp.primes) : 0.0;
    }
    rep.empirical = emp;
    return rep;
}

DensityThreshold theorem2_threshold(PrimeExponent p)
{
    if (p.value() < 5) throw std::invalid_argument("density threshold requires p >= 5");
    const i64 pv = p.value();
    DensityThreshold t{Rational(1, pv), Rational(2 * (pv - 2), pv * (pv - 1)), false};
    t.exceeds = t.lower_bound > t.threshold;
    return t;
}

}  // namespace hasse
