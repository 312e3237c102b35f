#include "emnet/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace emnet {

Cell Cell::of_text(std::string s) {
    Cell c;
    c.format = Format::Text;
    c.text = std::move(s);
    return c;
}

Cell Cell::of_integer(long long v) {
    Cell c;
    c.format = Format::Integer;
    c.number = static_cast<double>(v);
    return c;
}

Cell Cell::capability(double v) {
    Cell c;
    c.format = Format::Capability;
    c.number = v;
    return c;
}

Cell Cell::percent(double v) {
    Cell c;
    c.format = Format::Percent;
    c.number = v;
    return c;
}

Cell Cell::raw(double v) {
    Cell c;
    c.format = Format::Raw;
    c.number = v;
    return c;
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format \"" + s +
                                "\" (expected csv or json)");
}

std::string format_capability(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string format_percent(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_to_csv(const Cell& c) {
    char buf[32];
    switch (c.format) {
        case Cell::Format::Text:
            return csv_escape(c.text);
        case Cell::Format::Integer:
            std::snprintf(buf, sizeof buf, "%lld",
                          static_cast<long long>(c.number));
            return buf;
        case Cell::Format::Capability:
            return format_capability(c.number);
        case Cell::Format::Percent:
            return format_percent(c.number);
        case Cell::Format::Raw:
            std::snprintf(buf, sizeof buf, "%.17g", c.number);
            return buf;
    }
    return {};
}

nlohmann::ordered_json cell_to_json(const Cell& c) {
    switch (c.format) {
        case Cell::Format::Text:
            return c.text;
        case Cell::Format::Integer:
            return static_cast<long long>(c.number);
        default:
            return c.number;  // full precision for all numeric kinds
    }
}

}  // namespace

std::string render_table(const Table& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        for (size_t i = 0; i < table.header.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(table.header[i]);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << cell_to_csv(row[i]);
            }
            out << '\n';
        }
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["name"] = table.name;
    doc["columns"] = table.header;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) jrow.push_back(cell_to_json(cell));
        doc["rows"].push_back(std::move(jrow));
    }
    return doc.dump(2) + "\n";
}

void emit_table(const Table& table, OutputFormat format,
                const std::string& path) {
    const std::string body = render_table(table, format);
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << body;
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace emnet
