#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fadres::cli {

// One table of results plus the metadata that reproduces it.  The same
// structure serializes to CSV (metadata as leading '#' comments, mandatory
// header row, 17 significant digits, LF endings) or to a JSON document
// with native numeric types.  Both carry identical values and both are
// byte-stable across runs.
struct ResultSet {
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::ordered_json>> rows;
};

std::string format_cell(const nlohmann::ordered_json& v);
std::string to_csv(const ResultSet& rs);
std::string to_json(const ResultSet& rs);

// Writes to the path, or to stdout when path is empty.
void write_output(const ResultSet& rs, const std::string& format,
                  const std::string& path);

} // namespace fadres::cli
