#include "hasse/oracle.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hasse {

using nlohmann::json;

const OracleEntry* OracleReport::find(u64 q) const
{
    for (const auto& entry : per_q)
        if (entry.q == q) return &entry;
    return nullptr;
}

namespace {

template <class T>
T field(const json& j, const char* key)
{
    if (!j.contains(key)) throw OracleError(std::string("oracle report: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw OracleError(std::string("oracle report: field '") + key + "' has the wrong type");
    }
}

}  // namespace

OracleReport parse_oracle_report(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw OracleError(std::string("oracle report: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw OracleError("oracle report: top level must be an object");

    OracleReport r;
    r.p = field<u64>(doc, "p");
    r.r = field<u64>(doc, "r");
    r.h = field<u64>(doc, "h");
    r.e = field<u64>(doc, "e");
    r.f = field<u64>(doc, "f");
    r.assumes_grh = field<bool>(doc, "assumes_grh");
    const auto entries = field<json>(doc, "per_q");
    if (!entries.is_array()) throw OracleError("oracle report: per_q must be an array");
    for (const auto& item : entries) {
        OracleEntry e;
        e.q = field<u64>(item, "q");
        e.has_degree_one_prime = field<bool>(item, "has_degree_one_prime");
        e.q_divides_f = field<bool>(item, "q_divides_f");
        // Entries with q | f make no principality claim.
        if (e.q_divides_f && (!item.contains("ideal_power_principal") || item["ideal_power_principal"].is_null()))
            e.ideal_power_principal = true;
        else
            e.ideal_power_principal = field<bool>(item, "ideal_power_principal");
        r.per_q.push_back(e);
    }

    if (r.p == 0 || r.e == 0 || r.h == 0) throw OracleError("oracle report: p, h, e must be positive");
    if (r.h % r.e != 0) throw OracleError("oracle report: exponent e does not divide h");
    if (r.e % r.p != 0) throw OracleError("oracle report: exponent e is not divisible by p");
    return r;
}

OracleReport load_oracle_report(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw OracleError("cannot open oracle report " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_oracle_report(buf.str());
}

std::string dump_oracle_report(const OracleReport& report)
{
    json doc;
    doc["p"] = report.p;
    doc["r"] = report.r;
    doc["h"] = report.h;
    doc["e"] = report.e;
    doc["f"] = report.f;
    doc["assumes_grh"] = report.assumes_grh;
    doc["per_q"] = json::array();
    for (const auto& e : report.per_q) {
        doc["per_q"].push_back({{"q", e.q},
                                {"has_degree_one_prime", e.has_degree_one_prime},
                                {"q_divides_f", e.q_divides_f},
                                {"ideal_power_principal", e.ideal_power_principal}});
    }
    return doc.dump(2);
}

}  // namespace hasse
