#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "netpot/capacity.hpp"
#include "netpot/harmonic.hpp"
#include "netpot/packing.hpp"
#include "netpot/paths.hpp"

namespace netpot {

using Json = nlohmann::ordered_json;

// JSON views of library results. Key order is fixed and no wall-clock data
// is written, so equal inputs give byte-equal documents.

Json to_json(const ClassifierConfig& c);
Json to_json(const Verdict& v);
Json to_json(const TailSequence& t);
Json to_json(const std::vector<BoundaryCapEntry>& entries);
Json to_json(const RoydenLimitReport& r);
Json to_json(const CesaroResult& c);
Json to_json(const ResolvabilityReport& r);
Json to_json(const NullWitnessReport& r);
Json to_json(const HarmonicRank& r);
Json to_json(const GraphDiagnostics& d);

/// {"name": ..., "bytes": ..., "fnv1a64": ...} for an input blob.
Json input_hash(std::string_view name, std::string_view content);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// Header line plus rows; numbers via format_double.
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

}  // namespace netpot
