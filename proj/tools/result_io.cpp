#include "result_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "fadres/errors.hpp"

namespace fadres::cli {

std::string format_cell(const nlohmann::ordered_json& v) {
    if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string to_csv(const ResultSet& rs) {
    std::string out;
    for (const auto& [key, value] : rs.metadata.items()) {
        out += "# ";
        out += key;
        out += '=';
        out += format_cell(value);
        out += '\n';
    }
    for (std::size_t c = 0; c < rs.columns.size(); ++c) {
        if (c) out += ',';
        out += rs.columns[c];
    }
    out += '\n';
    for (const auto& row : rs.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ResultSet& rs) {
    nlohmann::ordered_json doc;
    doc["metadata"] = rs.metadata;
    doc["columns"] = rs.columns;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rs.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c)
            obj[rs.columns[c]] = row[c];
        rows.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

void write_output(const ResultSet& rs, const std::string& format,
                  const std::string& path) {
    const std::string body = (format == "json") ? to_json(rs) : to_csv(rs);
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + path);
    f << body;
}

} // namespace fadres::cli
