#include "hasse/seeds.hpp"

#include "hasse/primes.hpp"

namespace hasse {

std::string_view to_string(Classification c) noexcept
{
    switch (c) {
    case Classification::Rejected: return "REJECTED";
    case Classification::InS: return "IN_S";
    case Classification::InS0Certified: return "IN_S0_CERTIFIED";
    case Classification::Conditional: return "CONDITIONAL";
    }
    return "?";
}

u64 compute_N(PrimeExponent p, const ExceptionalSet& exceptional)
{
    if (exceptional.p != p) throw std::invalid_argument("compute_N: exceptional set is for a different exponent");
    u64 n = static_cast<u64>(p.value());
    for (u64 l : exceptional.members) n = checked_mul(n, l);
    return n;
}

ResidueClass seed_residue(PrimeExponent p, u64 N)
{
    const u64 pp = static_cast<u64>(p.value());
    const u64 p2 = pp * pp;
    if (N % pp != 0) throw std::invalid_argument("seed_residue: N must be divisible by p");
    const u64 cofactor = N / pp;
    if (cofactor % pp == 0) throw std::invalid_argument("seed_residue: N/p must be prime to p");

    // Among the p lifts -1 + lambda*p of -1 to Z/p^2, at most p-1 are p-th powers.
    std::optional<u64> lift;
    for (u64 lambda = 0; lambda < pp; ++lambda) {
        const u64 a = (p2 - 1 + lambda * pp) % p2;
        if (pow_mod_raw(a, pp - 1, p2) != 1) {
            lift = a;
            break;
        }
    }
    if (!lift) throw std::logic_error("seed_residue: every lift of -1 is a p-th power mod p^2");

    const u64 modulus = checked_mul(N, pp);
    const u64 c = crt(cofactor - 1, cofactor, *lift, p2);
    ResidueClass out;
    out.modulus = modulus;
    out.value = c % modulus;
    return out;
}

SeedPrime classify_seed(PrimeExponent p, u64 r, const ExceptionalSet& exceptional)
{
    if (exceptional.p != p) throw std::invalid_argument("classify_seed: exceptional set is for a different exponent");
    const u64 pp = static_cast<u64>(p.value());
    SeedPrime s{p, r, std::nullopt};
    try {
        s.N = compute_N(p, exceptional);
    } catch (const std::overflow_error&) {
        s.N.reset();
    }
    s.satisfies_mod_p = r % pp == pp - 1;
    s.satisfies_mod_N = s.satisfies_mod_p;
    for (u64 l : exceptional.members) s.satisfies_mod_N = s.satisfies_mod_N && r % l == l - 1;
    s.wieferich_free = r % pp != 0 && pow_mod_raw(r % (pp * pp), pp - 1, pp * pp) != 1;
    return s;
}

std::vector<SeedPrime> find_seeds(PrimeExponent p, const ExceptionalSet& exceptional, SeedMode mode, u64 start,
                                  std::size_t count)
{
    if (count == 0) throw std::invalid_argument("find_seeds: count must be >= 1");
    std::vector<SeedPrime> out;
    if (mode == SeedMode::ModN) {
        u64 N = 0, modulus = 0;
        try {
            N = compute_N(p, exceptional);
            modulus = checked_mul(N, static_cast<u64>(p.value()));
        } catch (const std::overflow_error&) {
            throw ResourceError("find_seeds: N*p exceeds 63 bits for p = " + std::to_string(p.value()));
        }
        const ResidueClass c = seed_residue(p, N);
        for (u64 r : primes_in_class(static_cast<i64>(c.value), modulus, start, count))
            out.push_back(classify_seed(p, r, exceptional));
        return out;
    }

    const u64 pp = static_cast<u64>(p.value());
    PrimeStream stream(start);
    while (out.size() < count) {
        const u64 r = stream.next();
        if (r % pp != pp - 1) continue;
        SeedPrime s = classify_seed(p, r, exceptional);
        if (s.wieferich_free) out.push_back(s);
    }
    return out;
}

bool in_B(u64 q, PrimeExponent p, u64 r)
{
    const u64 pp = static_cast<u64>(p.value());
    const u64 p2 = pp * pp;
    if (q % pp == 1) throw std::invalid_argument("in_B: q = 1 mod p lies outside B's progression");
    if (q == pp || q == r) throw std::invalid_argument("in_B: q must differ from p and r");
    if (r % pp == 0) throw std::invalid_argument("in_B: r must be prime to p");
    if (pow_mod_raw(q % p2, pp - 1, p2) == 1) return true;
    const u64 ratio = mul_mod(q % p2, inverse_mod(static_cast<i64>(r % p2), p2), p2);
    return pow_mod_raw(ratio, pp - 1, p2) == 1;
}

std::vector<CandidateStatus> scan_candidates(const SeedPrime& seed, const ExceptionalSet& exceptional, u64 q_limit,
                                             const OracleReport* oracle, const LocalOptions& options)
{
    const PrimeExponent p = seed.p;
    const u64 pp = static_cast<u64>(p.value());
    const u64 r = seed.r;
    if (exceptional.p != p) throw std::invalid_argument("scan: exceptional set is for a different exponent");
    if (!is_prime(r)) throw std::invalid_argument("scan: r = " + std::to_string(r) + " is not prime");
    if (r % pp != pp - 1) throw std::invalid_argument("scan: r = " + std::to_string(r) + " is not -1 mod p");
    if (pow_mod_raw(r % (pp * pp), pp - 1, pp * pp) == 1)
        throw std::invalid_argument("scan: r^(p-1) = 1 mod p^2");
    if (oracle && (oracle->p != pp || oracle->r != r))
        throw OracleMismatch("oracle report is for (p, r) = (" + std::to_string(oracle->p) + ", " +
                             std::to_string(oracle->r) + "), scan is for (" + std::to_string(pp) + ", " +
                             std::to_string(r) + ")");

    std::vector<CandidateStatus> out;
    if (q_limit < 3) return out;
    for_each_prime(2, q_limit - 1, [&](u64 q) {
        if (q % pp == 1) return;
        CandidateStatus s;
        s.q = q;
        s.in_progression = true;

        if (q == r) {
            // x^p + r y^p + r z^p = 0 has the point [0, 1, -1].
            s.rational_point = Point{0, 1, -1};
            s.classification = Classification::Rejected;
            s.reason = "rational point [0,1,-1]";
            out.push_back(std::move(s));
            return;
        }

        const FermatCurve curve(p, 1, static_cast<i64>(q), static_cast<i64>(r));
        const LocalReport report = local_report(curve, exceptional, options);
        for (const auto& [l, v] : report.verdicts) s.verdicts.emplace(l, v.verdict);
        s.locally_solvable_everywhere = report.globally_solvable();
        s.rational_point = report.global_point;
        if (q != pp) {
            s.in_B = in_B(q, p, r);
            if (s.in_B && !report.verdicts.at(pp).solvable())
                throw std::logic_error("scan: q = " + std::to_string(q) + " is in B but obstructed at p");
        }

        if (s.rational_point) {
            s.classification = Classification::Rejected;
            s.reason = "rational point";
        } else if (!s.locally_solvable_everywhere) {
            s.classification = Classification::Rejected;
            std::string primes;
            for (u64 l : report.obstructions()) primes += (primes.empty() ? "" : ",") + std::to_string(l);
            s.reason = "local obstruction at " + primes;
        } else if (const OracleEntry* e = oracle ? oracle->find(q) : nullptr) {
            s.oracle = OracleEvidence{e->q_divides_f, e->ideal_power_principal, oracle->assumes_grh};
            if (!e->q_divides_f && !e->ideal_power_principal) {
                s.classification = Classification::InS0Certified;
                s.reason = oracle->assumes_grh ? "ideal power nonprincipal (GRH)" : "ideal power nonprincipal";
            } else {
                s.classification = Classification::Conditional;
                s.reason = e->q_divides_f ? "q divides the index f" : "ideal power is principal";
            }
        } else {
            s.classification = Classification::InS;
            s.reason = "locally solvable everywhere";
        }
        out.push_back(std::move(s));
    });
    return out;
}

}  // namespace hasse
