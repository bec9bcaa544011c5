#pragma once

// Class-group data for K = Q(r^(1/p)) produced by an external algebra system.
// This library only consumes the documents; it never computes class groups.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hasse/arith.hpp"

namespace hasse {

struct OracleEntry {
    u64 q = 0;
    bool has_degree_one_prime = true;
    bool q_divides_f = false;
    bool ideal_power_principal = true;  // is q^(e/p) principal
};

struct OracleReport {
    u64 p = 0;
    u64 r = 0;
    u64 h = 0;  // class number
    u64 e = 0;  // exponent of the class group
    u64 f = 0;  // index of Z[r^(1/p)] in O_K
    bool assumes_grh = true;
    std::vector<OracleEntry> per_q;

    [[nodiscard]] const OracleEntry* find(u64 q) const;
};

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses and validates an oracle JSON document. Throws OracleError on schema
/// violations, on e not dividing h, or on e != 0 mod p.
[[nodiscard]] OracleReport parse_oracle_report(const std::string& json_text);
[[nodiscard]] OracleReport load_oracle_report(const std::string& path);
[[nodiscard]] std::string dump_oracle_report(const OracleReport& report);

}  // namespace hasse
