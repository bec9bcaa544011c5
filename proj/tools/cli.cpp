#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hasse/density.hpp"
#include "hasse/exceptional.hpp"
#include "hasse/isomorphism.hpp"
#include "hasse/oracle.hpp"
#include "hasse/padic.hpp"
#include "hasse/report_io.hpp"
#include "hasse/seeds.hpp"

namespace hasse::cli {

namespace {

struct RunConfig {
    i64 p = 0;
    std::string coeffs;
    std::string lhs, rhs;
    u64 r = 0;
    u64 q_limit = 1000;
    i64 height = 1000;
    u64 density_x = 1000000;
    bool measure_solvable = false;
    std::string oracle_path;
    std::string format = "text";
    std::string fixture_dir;
    std::string mode = "mod-p";
    std::size_t count = 5;
    u64 start = 2;
    bool refresh = false;
    unsigned jobs = 1;
    i64 max_p = 31;
};

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const char* what)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) + " comma-separated values");
    return out;
}

std::filesystem::path fixture_dir(const RunConfig& cfg)
{
    if (!cfg.fixture_dir.empty()) return cfg.fixture_dir;
    if (const char* env = std::getenv("HASSE_FIXTURE_DIR"); env && *env) return env;
    return "fixtures";
}

ExceptionalSet exceptional_for(const RunConfig& cfg, PrimeExponent p)
{
    return load_or_compute(p, fixture_dir(cfg), cfg.refresh, ExceptionalOptions{cfg.max_p, cfg.jobs});
}

std::string curve_text(const FermatCurve& c)
{
    const char* vars[] = {"x", "y", "z"};
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) s += " + ";
        s += "(" + c[i].str() + ")" + vars[i] + "^" + std::to_string(c.p().value());
    }
    return s + " = 0";
}

std::string point_text(const Point& pt)
{
    return "[" + std::to_string(pt[0]) + "," + std::to_string(pt[1]) + "," + std::to_string(pt[2]) + "]";
}

int cmd_exceptional(const RunConfig& cfg, std::ostream& out)
{
    const PrimeExponent p(cfg.p);
    const ExceptionalSet set = exceptional_for(cfg, p);
    if (cfg.format == "json") {
        out << to_json(set).dump(2) << '\n';
        return kOk;
    }
    if (cfg.format == "csv") {
        out << "p,l,u,v,w\r\n";
        for (u64 l : set.members) {
            const auto& w = set.witnesses.at(l);
            out << p.value() << ',' << l << ',' << w[0] << ',' << w[1] << ',' << w[2] << "\r\n";
        }
        return kOk;
    }
    out << "exceptional primes for p = " << p.value() << " (bound " << set.bound << "): ";
    if (set.members.empty()) out << "none";
    for (std::size_t i = 0; i < set.members.size(); ++i) out << (i ? ", " : "") << set.members[i];
    out << '\n';
    for (u64 l : set.members) {
        const auto& w = set.witnesses.at(l);
        out << "  " << l << "  witness (" << w[0] << ", " << w[1] << ", " << w[2] << ")\n";
    }
    return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out)
{
    const PrimeExponent p(cfg.p);
    const auto c = parse_list(cfg.coeffs, 3, "--coeffs");
    const FermatCurve curve(p, c[0], c[1], c[2]);
    if (cfg.height < 1) throw std::invalid_argument("--height must be >= 1");
    const ExceptionalSet set = exceptional_for(cfg, p);
    const LocalReport report = local_report(curve, set);
    const auto points = search_rational_points(curve, cfg.height);

    std::string verdict = "HASSE_CANDIDATE";
    if (!points.empty() || report.global_point)
        verdict = "HAS_RATIONAL_POINT";
    else if (!report.globally_solvable())
        verdict = "OBSTRUCTED";

    if (cfg.format == "json") {
        json pts = json::array();
        for (const auto& pt : points) pts.push_back(to_json(pt));
        const json doc{{"curve", to_json(curve)}, {"report", to_json(report)}, {"height", cfg.height},
                       {"points", pts},           {"verdict", verdict}};
        out << doc.dump(2) << '\n';
        return kOk;
    }
    if (cfg.format == "csv") {
        out << "prime,verdict,reason\r\n";
        for (const auto& [l, v] : report.verdicts) out << l << ',' << to_string(v.verdict) << ',' << to_string(v.reason) << "\r\n";
        return kOk;
    }
    out << "curve:      " << curve_text(curve) << '\n';
    out << "normalized: " << curve_text(report.curve) << '\n';
    for (const auto& [l, v] : report.verdicts) {
        out << "  l = " << std::setw(6) << std::left << l << std::setw(11) << to_string(v.verdict) << to_string(v.reason);
        if (v.witness) out << "  witness " << point_text({static_cast<i64>((*v.witness)[0]), static_cast<i64>((*v.witness)[1]), static_cast<i64>((*v.witness)[2])}) << " mod " << v.modulus;
        out << '\n';
    }
    out << "rational points of height <= " << cfg.height << ": ";
    if (points.empty()) out << "none";
    for (std::size_t i = 0; i < points.size(); ++i) out << (i ? " " : "") << point_text(points[i]);
    out << '\n';
    out << "verdict: " << verdict;
    if (verdict == "OBSTRUCTED") {
        out << " at";
        for (u64 l : report.obstructions()) out << ' ' << l;
    }
    if (verdict == "HAS_RATIONAL_POINT") out << ' ' << point_text(points.empty() ? *report.global_point : points.front());
    out << '\n';
    return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out)
{
    const PrimeExponent p(cfg.p);
    const ExceptionalSet set = exceptional_for(cfg, p);
    const SeedPrime seed = classify_seed(p, cfg.r, set);
    std::optional<OracleReport> oracle;
    if (!cfg.oracle_path.empty()) oracle = load_oracle_report(cfg.oracle_path);
    const auto rows = scan_candidates(seed, set, cfg.q_limit, oracle ? &*oracle : nullptr);

    std::map<std::string, std::size_t> summary;
    for (const char* k : {"REJECTED", "IN_S", "IN_S0_CERTIFIED", "CONDITIONAL"}) summary[k] = 0;
    for (const auto& s : rows) ++summary[std::string(to_string(s.classification))];

    if (cfg.format == "json") {
        json cands = json::array();
        for (const auto& s : rows) cands.push_back(to_json(s));
        const json doc{{"seed", to_json(seed)}, {"q_limit", cfg.q_limit}, {"candidates", cands}, {"summary", summary}};
        out << doc.dump(2) << '\n';
        return kOk;
    }
    if (cfg.format == "csv") {
        write_scan_csv(rows, out);
        return kOk;
    }
    out << "scan p = " << p.value() << ", r = " << seed.r << ", q < " << cfg.q_limit << '\n';
    for (const auto& s : rows) {
        out << "  q = " << std::setw(8) << std::left << s.q << "in_B=" << (s.in_B ? "yes " : "no  ") << std::setw(16)
            << to_string(s.classification) << s.reason << '\n';
    }
    out << "summary:";
    for (const auto& [k, n] : summary) out << ' ' << k << '=' << n;
    out << '\n';
    return kOk;
}

int cmd_density(const RunConfig& cfg, std::ostream& out)
{
    const PrimeExponent p(cfg.p);
    if (cfg.density_x < 1000) throw std::invalid_argument("--x must be >= 1000");
    const DensityReport rep = empirical_density(p, cfg.r, cfg.density_x, cfg.measure_solvable);
    std::optional<DensityThreshold> threshold;
    if (p.value() >= 5) threshold = theorem2_threshold(p);

    if (cfg.format == "json") {
        json doc = to_json(rep);
        if (threshold) {
            doc["threshold"] = {{"one_over_p", threshold->threshold.str()},
                                {"lower_bound", threshold->lower_bound.str()},
                                {"exceeds", threshold->exceeds}};
        }
        out << doc.dump(2) << '\n';
        return kOk;
    }
    if (cfg.format == "csv") {
        write_class_hits_csv(rep, out);
        return kOk;
    }
    const auto& e = *rep.empirical;
    out << "qualifying classes mod " << p.squared() << ":";
    for (u64 c : rep.qualifying_classes) out << ' ' << c;
    out << '\n';
    out << "exact density:     " << rep.exact_density << " = " << rep.exact_density.to_double() << '\n';
    out << "empirical density: " << e.hits << " / " << e.primes << " = " << e.ratio << " (X = " << e.cutoff << ")\n";
    if (e.solvable_ratio)
        out << "solvable at p:     " << *e.solvable_hits << " / " << e.primes << " = " << *e.solvable_ratio
            << ", B-members obstructed: " << e.b_members_obstructed << '\n';
    if (threshold)
        out << "lower bound " << threshold->lower_bound << (threshold->exceeds ? " > " : " <= ") << threshold->threshold
            << '\n';
    return kOk;
}

int cmd_iso(const RunConfig& cfg, std::ostream& out)
{
    const PrimeExponent p(cfg.p);
    const auto l = parse_list(cfg.lhs, 2, "--lhs");
    const auto r = parse_list(cfg.rhs, 2, "--rhs");
    const IsoVerdict v = are_isomorphic(l[0], l[1], r[0], r[1], p);
    if (cfg.format == "json") {
        out << to_json(v).dump(2) << '\n';
        return kOk;
    }
    out << (v.isomorphic ? "ISOMORPHIC" : "NOT_ISOMORPHIC");
    if (v.matched_couple) out << " (couple " << *v.matched_couple << ")";
    out << '\n';
    return kOk;
}

int cmd_seed(const RunConfig& cfg, std::ostream& out)
{
    const PrimeExponent p(cfg.p);
    SeedMode mode{};
    if (cfg.mode == "mod-p")
        mode = SeedMode::ModP;
    else if (cfg.mode == "mod-n")
        mode = SeedMode::ModN;
    else
        throw std::invalid_argument("--mode must be mod-p or mod-n");
    const ExceptionalSet set = exceptional_for(cfg, p);
    const auto seeds = find_seeds(p, set, mode, cfg.start, cfg.count);

    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& s : seeds) arr.push_back(to_json(s));
        out << json{{"p", p.value()}, {"mode", cfg.mode}, {"seeds", arr}}.dump(2) << '\n';
        return kOk;
    }
    if (cfg.format == "csv") {
        out << "r,satisfies_mod_p,satisfies_mod_N,wieferich_free\r\n";
        for (const auto& s : seeds)
            out << s.r << ',' << s.satisfies_mod_p << ',' << s.satisfies_mod_N << ',' << s.wieferich_free << "\r\n";
        return kOk;
    }
    out << "seed primes for p = " << p.value() << " (" << cfg.mode << ")";
    if (seeds.front().N) out << ", N = " << *seeds.front().N;
    out << '\n';
    for (const auto& s : seeds) {
        out << "  r = " << std::setw(12) << std::left << s.r << "mod-p=" << s.satisfies_mod_p
            << " mod-N=" << s.satisfies_mod_N << " wieferich-free=" << s.wieferich_free << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Fermat curves violating the Hasse principle"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime exponent")->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--fixture-dir", cfg.fixture_dir, "fixture directory (default $HASSE_FIXTURE_DIR or ./fixtures)");
        sub->add_flag("--refresh", cfg.refresh, "recompute fixtures");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--max-p", cfg.max_p, "largest p for which S(p) may be computed");
    };

    auto* exc = app.add_subcommand("exceptional", "compute the exceptional primes S(p)");
    common(exc);

    auto* check = app.add_subcommand("check", "local solvability report and bounded point search");
    common(check);
    check->add_option("--coeffs", cfg.coeffs, "a,b,c (integers or n/d)")->required();
    check->add_option("--height", cfg.height, "height bound for the point search");

    auto* scan = app.add_subcommand("scan", "classify primes q for the curves x^p + q y^p + r z^p");
    common(scan);
    scan->add_option("--r", cfg.r, "seed prime r")->required();
    scan->add_option("--q-limit", cfg.q_limit, "scan primes q below this bound");
    scan->add_option("--oracle", cfg.oracle_path, "class-group report (JSON)");

    auto* density = app.add_subcommand("density", "residue-class and empirical densities");
    common(density);
    density->add_option("--r", cfg.r, "seed prime r")->required();
    density->add_option("--x", cfg.density_x, "prime cutoff X");
    density->add_flag("--solvable", cfg.measure_solvable, "also measure local solvability at p");

    auto* iso = app.add_subcommand("iso", "Q-isomorphism of x^p+by^p+cz^p and x^p+b'y^p+c'z^p");
    common(iso);
    iso->add_option("--lhs", cfg.lhs, "b,c")->required();
    iso->add_option("--rhs", cfg.rhs, "b',c'")->required();

    auto* seed = app.add_subcommand("seed", "find seed primes r");
    common(seed);
    seed->add_option("--mode", cfg.mode, "mod-p or mod-n")->check(CLI::IsMember({"mod-p", "mod-n"}));
    seed->add_option("--count", cfg.count, "number of seeds")->check(CLI::PositiveNumber);
    seed->add_option("--start", cfg.start, "smallest r considered");

    std::vector<std::string> rev;
    if (!args.empty()) rev.assign(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*exc) return cmd_exceptional(cfg, out);
        if (*check) return cmd_check(cfg, out);
        if (*scan) return cmd_scan(cfg, out);
        if (*density) return cmd_density(cfg, out);
        if (*iso) return cmd_iso(cfg, out);
        if (*seed) return cmd_seed(cfg, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const OracleMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kOracleMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace hasse::cli
