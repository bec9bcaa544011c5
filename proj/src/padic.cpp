#include "hasse/padic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hasse/primes.hpp"

namespace hasse {

namespace {

u64 abs_u(i64 x) { return x < 0 ? -static_cast<u64>(x) : static_cast<u64>(x); }

std::array<i64, 3> clear_denominators(const FermatCurve& curve)
{
    i64 lcm = 1;
    for (const auto& c : curve.coeffs()) {
        const i64 d = c.den();
        lcm = static_cast<i64>(checked_mul(static_cast<u64>(lcm / std::gcd(lcm, d)), static_cast<u64>(d)));
    }
    std::array<i64, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& c = curve[i];
        const i64 scale = lcm / c.den();
        const i64 mag = static_cast<i64>(checked_mul(abs_u(c.num()), static_cast<u64>(scale)));
        out[i] = c.num() < 0 ? -mag : mag;
    }
    return out;
}

// t^e mod m for m < 2^32, all in 64-bit arithmetic.
u64 pow_small(u64 t, u64 e, u64 m)
{
    u64 r = 1 % m;
    t %= m;
    while (e) {
        if (e & 1) r = r * t % m;
        t = t * t % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

FermatCurve::FermatCurve(PrimeExponent p, Rational a, Rational b, Rational c) : p_(p), coeffs_{a, b, c}
{
    for (const auto& x : coeffs_)
        if (x.is_zero()) throw std::invalid_argument("Fermat curve coefficients must be nonzero");
}

std::array<i64, 3> FermatCurve::integer_coeffs() const
{
    std::array<i64, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!coeffs_[i].is_integer()) throw std::logic_error("curve has non-integer coefficients");
        out[i] = coeffs_[i].num();
    }
    return out;
}

FermatCurve normalize(const FermatCurve& curve)
{
    auto n = clear_denominators(curve);
    const i64 g = gcd_signed(gcd_signed(n[0], n[1]), n[2]);
    const u64 p = static_cast<u64>(curve.p().value());
    std::array<Rational, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const i64 v = n[i] / g;
        u64 reduced = 1;
        for (const auto& [q, e] : factorize(abs_u(v))) reduced *= checked_pow(q, static_cast<unsigned>(e % p));
        out[i] = v < 0 ? -static_cast<i64>(reduced) : static_cast<i64>(reduced);
    }
    return {curve.p(), out[0], out[1], out[2]};
}

bool is_normalized(const FermatCurve& curve)
{
    for (const auto& c : curve.coeffs())
        if (!c.is_integer()) return false;
    const auto n = curve.integer_coeffs();
    if (gcd_signed(gcd_signed(n[0], n[1]), n[2]) != 1) return false;
    const int p = static_cast<int>(curve.p().value());
    for (i64 x : n)
        for (const auto& [q, e] : factorize(abs_u(x)))
            if (e >= p) return false;
    return true;
}

std::string_view to_string(Verdict v) noexcept
{
    return v == Verdict::Solvable ? "SOLVABLE" : "OBSTRUCTED";
}

std::string_view to_string(Justification j) noexcept
{
    switch (j) {
    case Justification::GoodReduction: return "good-reduction";
    case Justification::PowerMapBijective: return "power-map-bijective";
    case Justification::UnitPowerAtP: return "unit-power-mod-p2";
    case Justification::LiftingSearch: return "lifting-search";
    case Justification::GlobalPoint: return "global-point";
    }
    return "?";
}

unsigned lifting_precision(const FermatCurve& normalized, u64 l)
{
    int m = valuation(normalized.p().value(), l).v;
    int vmax = 0;
    for (i64 c : normalized.integer_coeffs()) vmax = std::max(vmax, valuation(c, l).v);
    return static_cast<unsigned>(2 * (m + vmax) + 1);
}

LocalVerdict lifting_search(const FermatCurve& normalized, u64 l, unsigned precision, u64 budget)
{
    u64 modulus = 0;
    try {
        modulus = checked_pow(l, precision);
    } catch (const std::overflow_error&) {
        throw ResourceError("lifting search modulus " + std::to_string(l) + "^" + std::to_string(precision) +
                            " overflows");
    }
    if (modulus > budget || modulus >= (u64{1} << 32))
        throw ResourceError("lifting search modulus " + std::to_string(l) + "^" + std::to_string(precision) + " = " +
                            std::to_string(modulus) + " exceeds the search budget");

    const u64 p = static_cast<u64>(normalized.p().value());
    const auto n = normalized.integer_coeffs();
    std::array<u64, 3> c{};
    for (std::size_t i = 0; i < 3; ++i) c[i] = reduce(n[i], modulus);

    LocalVerdict out;
    out.prime = l;
    out.reason = Justification::LiftingSearch;
    out.precision = precision;
    out.modulus = modulus;

    std::vector<char> hit(modulus);
    for (std::size_t one = 0; one < 3; ++one) {
        // the coordinate at `one` is 1; j < k are the free coordinates
        const std::size_t j = one == 0 ? 1 : 0;
        const std::size_t k = one == 2 ? 1 : 2;
        std::fill(hit.begin(), hit.end(), 0);
        for (u64 t = 0; t < modulus; ++t) hit[c[k] * pow_small(t, p, modulus) % modulus] = 1;

        for (u64 y = 0; y < modulus; ++y) {
            const u64 partial = (c[one] + c[j] * pow_small(y, p, modulus)) % modulus;
            const u64 need = (modulus - partial) % modulus;
            if (!hit[need]) continue;
            u64 z = 0;
            while (c[k] * pow_small(z, p, modulus) % modulus != need) ++z;
            std::array<u64, 3> w{};
            w[one] = 1;
            w[j] = y;
            w[k] = z;
            out.verdict = Verdict::Solvable;
            out.witness = w;
            return out;
        }
    }
    out.verdict = Verdict::Obstructed;
    return out;
}

std::optional<LocalVerdict> good_reduction_shortcut(const FermatCurve& normalized, u64 l,
                                                    const ExceptionalSet& exceptional)
{
    if (exceptional.p != normalized.p()) throw std::invalid_argument("exceptional set is for a different exponent");
    if (l == static_cast<u64>(normalized.p().value()) || exceptional.contains(l)) return std::nullopt;
    for (i64 c : normalized.integer_coeffs())
        if (abs_u(c) % l == 0) return std::nullopt;
    LocalVerdict v;
    v.prime = l;
    v.verdict = Verdict::Solvable;
    v.reason = Justification::GoodReduction;
    return v;
}

std::optional<LocalVerdict> bijective_shortcut(const FermatCurve& normalized, u64 l)
{
    const u64 p = static_cast<u64>(normalized.p().value());
    if (l == p || (l - 1) % p == 0) return std::nullopt;
    // Q_l^* / (Q_l^*)^p is generated by l alone, so only valuations mod p
    // matter: two terms can cancel iff two coefficient valuations agree mod p.
    std::array<int, 3> v{};
    const auto n = normalized.integer_coeffs();
    for (std::size_t i = 0; i < 3; ++i) v[i] = valuation(n[i], l).v % static_cast<int>(p);
    LocalVerdict out;
    out.prime = l;
    out.reason = Justification::PowerMapBijective;
    out.verdict = (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]) ? Verdict::Solvable : Verdict::Obstructed;
    return out;
}

std::optional<LocalVerdict> unit_power_shortcut(const FermatCurve& normalized, u64 l)
{
    const u64 p = static_cast<u64>(normalized.p().value());
    if (l != p) return std::nullopt;
    const u64 p2 = p * p;
    const auto n = normalized.integer_coeffs();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const int vi = valuation(n[i], p).v;
            if (vi != valuation(n[j], p).v) continue;
            i64 ui = n[i], uj = n[j];
            for (int k = 0; k < vi; ++k) {
                ui /= static_cast<i64>(p);
                uj /= static_cast<i64>(p);
            }
            const u64 ratio = mul_mod(reduce(-ui, p2), inverse_mod(uj, p2), p2);
            if (pow_mod_raw(ratio, p - 1, p2) == 1) {
                LocalVerdict out;
                out.prime = l;
                out.verdict = Verdict::Solvable;
                out.reason = Justification::UnitPowerAtP;
                return out;
            }
        }
    }
    return std::nullopt;
}

LocalVerdict decide_local(const FermatCurve& curve, u64 l, const LocalOptions& options)
{
    if (!is_prime(l)) throw std::invalid_argument("decide_local: " + std::to_string(l) + " is not prime");
    const FermatCurve model = normalize(curve);
    if (options.shortcuts) {
        if (options.exceptional) {
            if (auto v = good_reduction_shortcut(model, l, *options.exceptional)) return *v;
        }
        if (auto v = bijective_shortcut(model, l)) return *v;
        if (auto v = unit_power_shortcut(model, l)) return *v;
    }
    return lifting_search(model, l, lifting_precision(model, l), options.budget);
}

std::optional<Point> obvious_rational_point(const FermatCurve& normalized)
{
    const auto n = normalized.integer_coeffs();
    // With p odd, (+-1)^p = +-1; enumerate sign patterns with the first nonzero entry +1.
    constexpr std::array<i64, 3> kValues{0, 1, -1};
    for (i64 x : kValues) {
        for (i64 y : kValues) {
            for (i64 z : kValues) {
                const Point pt{x, y, z};
                const auto first = std::find_if(pt.begin(), pt.end(), [](i64 t) { return t != 0; });
                if (first == pt.end() || *first != 1) continue;
                const i128 sum = static_cast<i128>(n[0]) * x + static_cast<i128>(n[1]) * y + static_cast<i128>(n[2]) * z;
                if (sum == 0) return pt;
            }
        }
    }
    return std::nullopt;
}

bool LocalReport::globally_solvable() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.solvable(); });
}

std::vector<u64> LocalReport::obstructions() const
{
    std::vector<u64> out;
    for (const auto& [l, v] : verdicts)
        if (!v.solvable()) out.push_back(l);
    return out;
}

LocalReport local_report(const FermatCurve& curve, const ExceptionalSet& exceptional, const LocalOptions& options)
{
    if (exceptional.p != curve.p()) throw std::invalid_argument("exceptional set is for a different exponent");
    LocalReport report{normalize(curve), {}, {}, std::nullopt};

    std::set<u64> primes{static_cast<u64>(curve.p().value())};
    primes.insert(exceptional.members.begin(), exceptional.members.end());
    for (i64 c : report.curve.integer_coeffs())
        for (const auto& [q, e] : factorize(abs_u(c))) primes.insert(q);
    report.checked_primes.assign(primes.begin(), primes.end());

    report.global_point = obvious_rational_point(report.curve);
    LocalOptions opts = options;
    opts.exceptional = &exceptional;
    for (u64 l : report.checked_primes) {
        if (report.global_point) {
            LocalVerdict v;
            v.prime = l;
            v.verdict = Verdict::Solvable;
            v.reason = Justification::GlobalPoint;
            report.verdicts.emplace(l, v);
        } else {
            report.verdicts.emplace(l, decide_local(report.curve, l, opts));
        }
    }
    return report;
}

namespace {

constexpr u64 kHashPrime = (u64{1} << 61) - 1;

u64 term_mod(i64 coeff, i64 t, u64 p)
{
    return mul_mod(reduce(coeff, kHashPrime), pow_mod_raw(reduce(t, kHashPrime), p, kHashPrime), kHashPrime);
}

// Open-addressing multimap from residues mod kHashPrime to the z producing them.
class ResidueTable {
public:
    explicit ResidueTable(std::size_t entries)
        : mask_(std::bit_ceil(entries * 4) - 1), keys_(mask_ + 1, kEmpty), values_(mask_ + 1, 0)
    {
    }

    void insert(u64 key, i64 value)
    {
        std::size_t slot = hash(key);
        while (keys_[slot] != kEmpty) slot = (slot + 1) & mask_;
        keys_[slot] = key;
        values_[slot] = value;
    }

    template <class F>
    void for_each_match(u64 key, F&& f) const
    {
        for (std::size_t slot = hash(key); keys_[slot] != kEmpty; slot = (slot + 1) & mask_)
            if (keys_[slot] == key) f(values_[slot]);
    }

private:
    static constexpr u64 kEmpty = ~u64{0};
    [[nodiscard]] std::size_t hash(u64 key) const { return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> 20) & mask_; }

    std::size_t mask_;
    std::vector<u64> keys_;
    std::vector<i64> values_;
};

}  // namespace

std::vector<Point> search_rational_points(const FermatCurve& curve, i64 height)
{
    if (height < 1) throw std::invalid_argument("search height must be >= 1");
    using boost::multiprecision::cpp_int;
    const auto n = clear_denominators(curve);
    const u64 p = static_cast<u64>(curve.p().value());
    const std::size_t span = static_cast<std::size_t>(2 * height + 1);

    std::vector<u64> ax(static_cast<std::size_t>(height) + 1), by(span);
    ResidueTable cz(span);
    for (i64 t = 0; t <= height; ++t) ax[static_cast<std::size_t>(t)] = term_mod(n[0], t, p);
    for (i64 t = -height; t <= height; ++t) {
        by[static_cast<std::size_t>(t + height)] = term_mod(n[1], t, p);
        cz.insert(term_mod(n[2], t, p), t);
    }

    auto exact_zero = [&](i64 x, i64 y, i64 z) {
        const unsigned e = static_cast<unsigned>(p);
        const cpp_int s = cpp_int(n[0]) * boost::multiprecision::pow(cpp_int(x), e) +
                          cpp_int(n[1]) * boost::multiprecision::pow(cpp_int(y), e) +
                          cpp_int(n[2]) * boost::multiprecision::pow(cpp_int(z), e);
        return s == 0;
    };

    std::set<Point> found;
    for (i64 x = 0; x <= height; ++x) {
        const u64 a = ax[static_cast<std::size_t>(x)];
        for (i64 y = -height; y <= height; ++y) {
            u64 s = a + by[static_cast<std::size_t>(y + height)];
            if (s >= kHashPrime) s -= kHashPrime;
            const u64 key = s == 0 ? 0 : kHashPrime - s;
            cz.for_each_match(key, [&](i64 z) {
                if (x == 0 && y == 0 && z == 0) return;
                if (gcd_signed(gcd_signed(x, y), z) != 1) return;
                if (!exact_zero(x, y, z)) return;
                Point pt{x, y, z};
                const auto first = std::find_if(pt.begin(), pt.end(), [](i64 t) { return t != 0; });
                if (*first < 0)
                    for (auto& t : pt) t = -t;
                found.insert(pt);
            });
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace hasse
