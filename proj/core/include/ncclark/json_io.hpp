#pragma once

#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "ncclark/freealg.hpp"
#include "ncclark/series.hpp"
#include "ncclark/states.hpp"

namespace ncclark {

// Ordered maps keep report serialization deterministic byte for byte.
using Json = nlohmann::ordered_json;

// Coefficient tables serialize sparsely as [[n_1..n_d, re, im], ...] in basis
// order; absent indices are zero. Words serialize as integer arrays.
Json toJson(const SymElement& p);
SymElement symElementFromJson(const Json& j);

Json toJson(const TruncatedSeries& s);
TruncatedSeries seriesFromJson(const Json& j);

Json toJson(const MomentState& mu);
MomentState momentStateFromJson(const Json& j);

Json toJson(const WordState& nu);
WordState wordStateFromJson(const Json& j);

Json matrixToJson(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrixFromJson(const Json& j);

// Row-major CSV; each cell spans two fields, re then im.
std::string matrixToCsv(const Eigen::MatrixXcd& m);

// The normalization/ordering decisions every report embeds, so emitted
// numbers are interpretable without the source.
Json conventionsRecord();

// {"schemaVersion": 1, "check": ..., "conventions": {...}}
Json reportSkeleton(const std::string& check);

void writeJsonFile(const std::string& path, const Json& j);
Json readJsonFile(const std::string& path);

} // namespace ncclark
