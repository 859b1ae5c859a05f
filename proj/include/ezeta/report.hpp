#pragma once

#include <string>
#include <vector>

#include "ezeta/identities.hpp"
#include "json.hpp"

namespace ezeta {

/// Non-finite doubles are written as the strings "nan", "inf", "-inf".
nlohmann::ordered_json report_to_json(const IdentityCheckReport& r);
/// DomainError on a malformed document.
IdentityCheckReport report_from_json(const nlohmann::ordered_json& j);

/// One compact JSON object per line.
std::string reports_to_jsonl(const std::vector<IdentityCheckReport>& reports);
/// Header row plus one RFC-4180 row per report.
std::string reports_to_csv(const std::vector<IdentityCheckReport>& reports);

/// id, paper_ref, domain (axes, constraint), status, tolerances, for every entry
nlohmann::ordered_json catalog_to_json();

}  // namespace ezeta
