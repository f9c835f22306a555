#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jacobsthal/domain.hpp"

namespace jacobsthal {

inline constexpr int kResultSchemaVersion = 1;

/// {"kind", "n", "a", "b", "length"}; a and b as decimal strings.
nlohmann::json witness_to_json(const Witness& witness);

/// Accepts a bare witness object or a result object carrying "witness".
/// Throws InputError on anything malformed.
Witness witness_from_json(const nlohmann::json& document);

nlohmann::json result_to_json(const ComputationResult& result);

inline constexpr const char* kCsvHeader = "n,p_n,h,bound,bound_ok";
std::string csv_row(const ComputationResult& result);
void write_csv(std::ostream& out, const std::vector<ComputationResult>& results);

} // namespace jacobsthal
