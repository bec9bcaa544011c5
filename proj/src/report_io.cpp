#include "hasse/report_io.hpp"

#include <ostream>

namespace hasse {

json to_json(const FermatCurve& curve)
{
    json coeffs = json::array();
    for (const auto& c : curve.coeffs()) coeffs.push_back(c.str());
    return {{"p", curve.p().value()}, {"coeffs", coeffs}};
}

json to_json(const Point& point) { return json::array({point[0], point[1], point[2]}); }

json to_json(const LocalVerdict& v)
{
    json j{{"prime", v.prime}, {"verdict", to_string(v.verdict)}, {"reason", to_string(v.reason)}};
    if (v.precision) {
        j["precision"] = v.precision;
        j["modulus"] = v.modulus;
    }
    if (v.witness) j["witness"] = json::array({(*v.witness)[0], (*v.witness)[1], (*v.witness)[2]});
    return j;
}

json to_json(const LocalReport& report)
{
    json verdicts = json::array();
    for (const auto& [l, v] : report.verdicts) verdicts.push_back(to_json(v));
    json j{{"curve", to_json(report.curve)},
           {"checked_primes", report.checked_primes},
           {"verdicts", verdicts},
           {"globally_solvable", report.globally_solvable()},
           {"obstructions", report.obstructions()}};
    j["global_point"] = report.global_point ? to_json(*report.global_point) : json(nullptr);
    return j;
}

json to_json(const ExceptionalSet& set)
{
    json witnesses = json::object();
    for (const auto& [l, w] : set.witnesses) witnesses[std::to_string(l)] = json::array({w[0], w[1], w[2]});
    return {{"p", set.p.value()}, {"bound", set.bound}, {"members", set.members}, {"witnesses", witnesses}};
}

json to_json(const SeedPrime& s)
{
    return {{"p", s.p.value()},
            {"r", s.r},
            {"N", s.N ? json(*s.N) : json(nullptr)},
            {"satisfies_mod_p", s.satisfies_mod_p},
            {"satisfies_mod_N", s.satisfies_mod_N},
            {"wieferich_free", s.wieferich_free}};
}

json to_json(const CandidateStatus& s)
{
    json verdicts = json::object();
    for (const auto& [l, v] : s.verdicts) verdicts[std::to_string(l)] = to_string(v);
    json j{{"q", s.q},
           {"in_progression", s.in_progression},
           {"in_B", s.in_B},
           {"locally_solvable_everywhere", s.locally_solvable_everywhere},
           {"verdicts", verdicts},
           {"classification", to_string(s.classification)},
           {"reason", s.reason}};
    j["rational_point"] = s.rational_point ? to_json(*s.rational_point) : json(nullptr);
    if (s.oracle) {
        j["oracle"] = {{"q_divides_f", s.oracle->q_divides_f},
                       {"ideal_power_principal", s.oracle->ideal_power_principal},
                       {"assumes_grh", s.oracle->assumes_grh}};
    } else {
        j["oracle"] = nullptr;
    }
    return j;
}

json to_json(const DensityReport& rep)
{
    json j{{"p", rep.p.value()},
           {"r", rep.r},
           {"qualifying_classes", rep.qualifying_classes},
           {"exact_density", rep.exact_density.str()},
           {"exact_density_value", rep.exact_density.to_double()}};
    if (rep.empirical) {
        const auto& e = *rep.empirical;
        json hits = json::object();
        for (const auto& [c, n] : e.class_hits) hits[std::to_string(c)] = n;
        json emp{{"X", e.cutoff}, {"primes", e.primes}, {"hits", e.hits}, {"ratio", e.ratio}, {"class_hits", hits}};
        if (e.solvable_hits) {
            emp["solvable_hits"] = *e.solvable_hits;
            emp["solvable_ratio"] = *e.solvable_ratio;
            emp["b_members_obstructed"] = e.b_members_obstructed;
        }
        j["empirical"] = emp;
    } else {
        j["empirical"] = nullptr;
    }
    return j;
}

json to_json(const IsoVerdict& v)
{
    return {{"isomorphic", v.isomorphic},
            {"verdict", v.isomorphic ? "ISOMORPHIC" : "NOT_ISOMORPHIC"},
            {"matched_couple", v.matched_couple ? json(*v.matched_couple) : json(nullptr)}};
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void write_scan_csv(std::span<const CandidateStatus> rows, std::ostream& os)
{
    os << "q,in_B,verdicts,classification,reason\r\n";
    for (const auto& s : rows) {
        std::string verdicts;
        for (const auto& [l, v] : s.verdicts) {
            if (!verdicts.empty()) verdicts += ';';
            verdicts += std::to_string(l) + ':' + std::string(to_string(v));
        }
        os << s.q << ',' << (s.in_B ? "true" : "false") << ',' << csv_field(verdicts) << ','
           << to_string(s.classification) << ',' << csv_field(s.reason) << "\r\n";
    }
}

void write_class_hits_csv(const DensityReport& report, std::ostream& os)
{
    os << "class,hits\r\n";
    if (!report.empirical) return;
    for (const auto& [c, n] : report.empirical->class_hits) os << c << ',' << n << "\r\n";
}

}  // namespace hasse
