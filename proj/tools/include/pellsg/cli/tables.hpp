#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pellsg::cli {

/// "paper-3.5", "paper-4.2", "paper-5.5", "paper-6.1"
const std::vector<std::string>& table_presets();

/// Renders a preset as pretty JSON or CSV (LF line endings, trailing newline).
/// Throws std::invalid_argument for an unknown preset or format.
std::string render_table(std::string_view preset, std::string_view format);

}  // namespace pellsg::cli
