#pragma once

// JSON and CSV renderings of pipeline results. Key order is fixed (sorted),
// so equal inputs always serialize to identical bytes.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hasse/density.hpp"
#include "hasse/exceptional.hpp"
#include "hasse/isomorphism.hpp"
#include "hasse/padic.hpp"
#include "hasse/seeds.hpp"

namespace hasse {

using nlohmann::json;

json to_json(const FermatCurve& curve);
json to_json(const Point& point);
json to_json(const LocalVerdict& verdict);
json to_json(const LocalReport& report);
json to_json(const ExceptionalSet& set);
json to_json(const SeedPrime& seed);
json to_json(const CandidateStatus& status);
json to_json(const DensityReport& report);
json to_json(const IsoVerdict& verdict);

/// RFC 4180 field quoting: quoted only when needed, quotes doubled.
std::string csv_field(std::string_view text);

/// Columns: q, in_B, verdicts, classification, reason.
void write_scan_csv(std::span<const CandidateStatus> rows, std::ostream& os);

/// Columns: class, hits.
void write_class_hits_csv(const DensityReport& report, std::ostream& os);

}  // namespace hasse
