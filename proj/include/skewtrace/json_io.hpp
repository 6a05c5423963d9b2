#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "skewtrace/inequalities.hpp"
#include "skewtrace/matrix.hpp"
#include "skewtrace/skew_info.hpp"
#include "skewtrace/state.hpp"

namespace skewtrace {

using json = nlohmann::json;

/// Significant digits used for reported scalars.
inline constexpr int kReportDigits = 12;

/// Rounds to `digits` significant decimal digits (the value nlohmann then
/// prints in shortest round-trip form).
double round_significant(double value, int digits = kReportDigits);

/// {"dim": n, "re": [[...]], "im": [[...]]}, full round-trip precision.
json matrix_to_json(const ComplexMatrix& m);
/// Throws InvalidArgument naming the offending field on malformed input.
ComplexMatrix matrix_from_json(const json& j);

enum class StateKind { density, observable };

std::string_view to_string(StateKind kind);

/// Matrix JSON plus "type": "density" | "observable".
json state_to_json(const ComplexMatrix& m, StateKind kind);
/// Parses a state file body. When "type" is present it must equal `expected`.
ComplexMatrix state_matrix_from_json(const json& j, StateKind expected);

DensityMatrix read_density_file(const std::filesystem::path& path);
Observable read_observable_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

json to_json(const SkewQuantities& q);
json to_json(const InequalityCheck& check);

/// Parses a decimal ("0.25") or exact rational ("1/3") number.
/// Returns nullopt on malformed text.
std::optional<double> parse_number(std::string_view text);

}  // namespace skewtrace
