#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

namespace mockgauss::cli {

using nlohmann::ordered_json;

// Writes `text` to `path`, or to `fallback` when path is empty or "-".
// Files are written through a temporary and renamed into place.
void emit(const std::string& path, const std::string& text, std::ostream& fallback);

std::string dump_json(const ordered_json& doc);

// "# mockgauss <version> <config json>" header for CSV outputs.
std::string csv_header_comment(const ordered_json& config);

// Shortest round-trip decimal form of a double.
std::string fmt(double v);

}  // namespace mockgauss::cli
