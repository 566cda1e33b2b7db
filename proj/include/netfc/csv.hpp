#pragma once

// Minimal RFC-4180 reader: quoted fields, embedded commas and newlines,
// doubled-quote escapes. Lines are 1-based for error reporting.

#include <istream>
#include <string>
#include <vector>

namespace netfc::csv {

struct row {
    std::vector<std::string> fields;
    std::size_t line_no = 0; // line the row started on
};

inline std::vector<row> read_all(std::istream& in) {
    std::vector<row> rows;
    std::string field;
    row current;
    current.line_no = 1;
    std::size_t line = 1;
    bool in_quotes = false;
    bool row_has_data = false;

    auto end_field = [&] {
        current.fields.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        if (row_has_data || !current.fields.empty() || !field.empty()) {
            end_field();
            rows.push_back(current);
        }
        current = row{};
        current.line_no = line;
        row_has_data = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
            row_has_data = true;
        } else if (c == ',') {
            end_field();
            row_has_data = true;
        } else if (c == '\r') {
            // swallow; CRLF handled at the \n
        } else if (c == '\n') {
            ++line;
            end_row();
            current.line_no = line;
        } else {
            field.push_back(c);
            row_has_data = true;
        }
    }
    end_row(); // final row without trailing newline
    return rows;
}

inline std::string escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

} // namespace netfc::csv
