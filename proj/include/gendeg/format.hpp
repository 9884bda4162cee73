#pragma once

#include <string>
#include <string_view>

namespace gendeg {

/// Fixed float rendering for all emitted artifacts: 15 significant
/// digits, shortest C "%g" form. Keeps CLI output byte-stable.
std::string format_double(double value);

/// Minimal JSON string escaping (quotes, backslashes, control chars).
std::string json_escape(std::string_view text);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view text);

} // namespace gendeg
