#pragma once

#include "snipkit/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace snipkit::csv {

// Splits one comma-separated line. Supports double-quoted fields with ""
// escapes; embedded newlines are not (input is consumed line by line).
inline std::vector<std::string> split_row(std::string_view line, const std::string& where) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty()) fail(ErrorKind::parse, where + ": stray quote inside field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted) fail(ErrorKind::parse, where + ": unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

inline std::string escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace snipkit::csv
