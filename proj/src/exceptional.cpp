#include "hasse/exceptional.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "hasse/primes.hpp"

namespace hasse {

namespace {

// p-th powers of F_l (including 0) as a membership table and a list.
struct PowerTable {
    u64 l;
    std::vector<char> member;
    std::vector<u64> values;

    PowerTable(u64 l_, u64 p, u64 g) : l(l_), member(l_, 0)
    {
        member[0] = 1;
        values.push_back(0);
        const u64 h = pow_mod_raw(g, p, l);
        const u64 count = (l - 1) % p == 0 ? (l - 1) / p : l - 1;
        u64 x = 1;
        for (u64 k = 0; k < count; ++k) {
            member[x] = 1;
            values.push_back(x);
            x = mul_mod(x, h, l);
        }
        std::sort(values.begin(), values.end());
    }
};

bool diagonal_solvable(const PowerTable& t, u64 u, u64 v, u64 w)
{
    const u64 l = t.l;
    const u64 w_inv = inverse_mod(static_cast<i64>(w), l);
    for (u64 s1 : t.values) {
        const u64 a = mul_mod(u, s1, l);
        for (u64 s2 : t.values) {
            if (s1 == 0 && s2 == 0) continue;
            const u64 sum = (a + mul_mod(v, s2, l)) % l;
            if (t.member[mul_mod((l - sum) % l, w_inv, l)]) return true;
        }
    }
    return false;
}

struct CosetData {
    u64 g;
    std::vector<u64> reps;            // g^i, i < p
    std::vector<std::vector<char>> fails;  // symmetric p x p
};

CosetData coset_search(u64 l, u64 p, const PowerTable& table, u64 g)
{
    CosetData d{g, {}, std::vector<std::vector<char>>(p, std::vector<char>(p, 0))};
    u64 x = 1;
    for (u64 i = 0; i < p; ++i) {
        d.reps.push_back(x);
        x = mul_mod(x, g, l);
    }
    for (u64 i = 0; i < p; ++i) {
        for (u64 j = i; j < p; ++j) {
            const bool fail = !diagonal_solvable(table, 1, d.reps[i], d.reps[j]);
            d.fails[i][j] = d.fails[j][i] = fail ? 1 : 0;
        }
    }
    return d;
}

void require_candidate(u64 l, PrimeExponent p)
{
    if (l == static_cast<u64>(p.value())) throw std::invalid_argument("exceptional primes exclude l = p");
    if (!is_prime(l)) throw std::invalid_argument("l must be prime, got " + std::to_string(l));
}

}  // namespace

bool ExceptionalSet::contains(u64 l) const { return std::binary_search(members.begin(), members.end(), l); }

u64 weil_bound(PrimeExponent p)
{
    const u64 g = static_cast<u64>((p.value() - 1) * (p.value() - 2));
    return g * g;
}

bool has_nontrivial_zero(const Triple& coeffs, PrimeExponent p, u64 l)
{
    for (u64 c : coeffs)
        if (c % l == 0) throw std::invalid_argument("coefficients must be nonzero mod l");
    const PowerTable table(l, static_cast<u64>(p.value()), primitive_root(l));
    return diagonal_solvable(table, coeffs[0] % l, coeffs[1] % l, coeffs[2] % l);
}

std::vector<std::pair<unsigned, unsigned>> failing_coset_pairs(u64 l, PrimeExponent p)
{
    require_candidate(l, p);
    const u64 pp = static_cast<u64>(p.value());
    std::vector<std::pair<unsigned, unsigned>> out;
    if ((l - 1) % pp != 0) return out;
    const u64 g = primitive_root(l);
    const PowerTable table(l, pp, g);
    const CosetData d = coset_search(l, pp, table, g);
    for (unsigned i = 0; i < pp; ++i)
        for (unsigned j = i; j < pp; ++j)
            if (d.fails[i][j]) out.emplace_back(i, j);
    return out;
}

ExceptionalCheck is_exceptional(u64 l, PrimeExponent p)
{
    require_candidate(l, p);
    const u64 pp = static_cast<u64>(p.value());
    // x -> x^p is a bijection of F_l when l != 1 mod p, so every curve has points.
    if ((l - 1) % pp != 0) return {};

    const u64 g = primitive_root(l);
    const PowerTable table(l, pp, g);
    const CosetData d = coset_search(l, pp, table, g);
    bool any = false;
    for (const auto& row : d.fails) any = any || std::find(row.begin(), row.end(), 1) != row.end();
    if (!any) return {};

    // coset index of x: x^((l-1)/p) = zeta^i
    const u64 e = (l - 1) / pp;
    const u64 zeta = pow_mod_raw(g, e, l);
    std::map<u64, unsigned> log_zeta;
    u64 z = 1;
    for (unsigned i = 0; i < pp; ++i) {
        log_zeta[z] = i;
        z = mul_mod(z, zeta, l);
    }
    auto coset = [&](u64 x) { return log_zeta.at(pow_mod_raw(x, e, l)); };

    for (u64 v = 1; v < l; ++v) {
        const unsigned i = coset(v);
        for (u64 w = 1; w < l; ++w) {
            if (d.fails[i][coset(w)]) return {true, Triple{1, v, w}};
        }
    }
    throw std::logic_error("is_exceptional: failing coset pair without a witness");
}

ExceptionalSet exceptional_set(PrimeExponent p, const ExceptionalOptions& options)
{
    if (p.value() > options.max_p)
        throw ResourceError("exceptional set for p = " + std::to_string(p.value()) + " exceeds the configured limit p <= " +
                            std::to_string(options.max_p));
    ExceptionalSet set{p, weil_bound(p), {}, {}};
    const u64 pp = static_cast<u64>(p.value());

    std::vector<u64> candidates;
    for_each_prime(2, set.bound - 1, [&](u64 l) {
        if (l != pp && (l - 1) % pp == 0) candidates.push_back(l);
    });

    std::mutex guard;
    auto worker = [&](unsigned offset, unsigned stride) {
        for (std::size_t k = offset; k < candidates.size(); k += stride) {
            const auto check = is_exceptional(candidates[k], p);
            if (!check.exceptional) continue;
            const std::lock_guard lock(guard);
            set.members.push_back(candidates[k]);
            set.witnesses.emplace(candidates[k], *check.witness);
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker, j, jobs);
    }
    std::sort(set.members.begin(), set.members.end());
    return set;
}

namespace {
constexpr const char* kFixtureMagic = "# hasse exceptional-primes v1";
}

void write_fixture(const ExceptionalSet& set, std::ostream& os)
{
    os << kFixtureMagic << '\n';
    os << "# p=" << set.p.value() << " bound=" << set.bound << " count=" << set.members.size() << '\n';
    for (u64 l : set.members) {
        const Triple& w = set.witnesses.at(l);
        os << set.p.value() << ' ' << l << ' ' << w[0] << ' ' << w[1] << ' ' << w[2] << '\n';
    }
}

ExceptionalSet read_fixture(std::istream& is, PrimeExponent expected_p)
{
    std::string line;
    if (!std::getline(is, line) || line != kFixtureMagic) throw FixtureError("fixture: unrecognized header");
    if (!std::getline(is, line)) throw FixtureError("fixture: missing parameter line");

    i64 p = 0;
    u64 bound = 0;
    std::size_t count = 0;
    if (std::sscanf(line.c_str(), "# p=%ld bound=%lu count=%zu", &p, &bound, &count) != 3)
        throw FixtureError("fixture: malformed parameter line '" + line + "'");
    if (p != expected_p.value())
        throw FixtureError("fixture is for p = " + std::to_string(p) + ", expected p = " + std::to_string(expected_p.value()));
    if (bound != weil_bound(expected_p)) throw FixtureError("fixture: bound does not match p");

    ExceptionalSet set{expected_p, bound, {}, {}};
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream rec(line);
        i64 rp = 0;
        u64 l = 0;
        Triple w{};
        if (!(rec >> rp >> l >> w[0] >> w[1] >> w[2])) throw FixtureError("fixture: malformed record '" + line + "'");
        if (rp != p) throw FixtureError("fixture: record for a different p");
        if (l >= bound || (l - 1) % static_cast<u64>(p) != 0 || !is_prime(l))
            throw FixtureError("fixture: invalid exceptional prime " + std::to_string(l));
        if (has_nontrivial_zero(w, expected_p, l)) throw FixtureError("fixture: witness for " + std::to_string(l) + " has a zero");
        set.members.push_back(l);
        set.witnesses.emplace(l, w);
    }
    if (set.members.size() != count) throw FixtureError("fixture: record count mismatch");
    if (!std::is_sorted(set.members.begin(), set.members.end())) throw FixtureError("fixture: records not sorted");
    return set;
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, PrimeExponent p)
{
    return dir / ("exceptional_p" + std::to_string(p.value()) + ".txt");
}

ExceptionalSet load_or_compute(PrimeExponent p, const std::filesystem::path& dir, bool refresh,
                               const ExceptionalOptions& options)
{
    const auto path = fixture_path(dir, p);
    if (!refresh && std::filesystem::exists(path)) {
        std::ifstream in(path);
        return read_fixture(in, p);
    }
    ExceptionalSet set = exceptional_set(p, options);
    std::filesystem::create_directories(dir);
    std::ofstream out(path, std::ios::binary);
    write_fixture(set, out);
    if (!out) throw FixtureError("could not write fixture " + path.string());
    return set;
}

}  // namespace hasse
