#pragma once

#include <string>

#include <json.hpp>

#include "forest_turan/embed.hpp"
#include "forest_turan/formulas.hpp"
#include "forest_turan/oracle.hpp"
#include "forest_turan/spectral.hpp"

namespace forest_turan {

using Json = nlohmann::ordered_json;

/// Fixed 9-decimal rendering used by every text report.
std::string fixed9(double x);
/// x rounded to 9 decimals, for JSON output.
double round9(double x);

Json to_json(const FamilyDescriptor& d);
Json to_json(const FormulaResult& r);
Json to_json(const OracleReport& r, bool timing = false);
Json to_json(const ScanReport& r, bool timing = false);
Json to_json(const SpectralSearchReport& r, bool timing = false);
Json to_json(const SpectralResult& r);
Json to_json(const EmbedResult& r, std::optional<int> bipartite_m);
Json to_json(const P7LemmaReport& r);

std::string to_string(RowStatus s);

/// Human-readable form of a report object: "key: value" lines, nested objects
/// indented, arrays of uniform objects as aligned tables.
std::string render_text(const Json& j);

}  // namespace forest_turan
