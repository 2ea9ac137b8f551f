#pragma once

#include "simonsim/baseline.hpp"
#include "simonsim/oracle.hpp"
#include "simonsim/pipeline.hpp"

#include <filesystem>
#include <string>

#include <json.hpp>

namespace simonsim {

using Json = nlohmann::ordered_json;

// Bit strings are written as lowercase hex zero-padded to ceil(n / 4) digits.

/// {"n": int, "table": [hex, ...], "r": hex?}
[[nodiscard]] Json function_to_json(const SimonFunction &f);
/// Throws ParseError on malformed documents.
[[nodiscard]] SimonFunction function_from_json(const Json &doc);

[[nodiscard]] Json run_report_to_json(const RunReport &report);
[[nodiscard]] RunReport run_report_from_json(const Json &doc);

[[nodiscard]] Json collision_to_json(const CollisionResult &result);
[[nodiscard]] CollisionResult collision_from_json(const Json &doc);

[[nodiscard]] Json cost_report_to_json(const CostReport &report);
[[nodiscard]] CostReport cost_report_from_json(const Json &doc);

/// Two-space indented dump with a trailing newline.
[[nodiscard]] std::string dump(const Json &doc);

/// Throws ParseError for unreadable files or invalid JSON.
[[nodiscard]] Json read_json_file(const std::filesystem::path &path);
/// Throws Error when the file cannot be written.
void write_text_file(const std::filesystem::path &path,
                     const std::string &contents);

} // namespace simonsim
