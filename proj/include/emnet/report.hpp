#ifndef EMNET_REPORT_HPP
#define EMNET_REPORT_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace emnet {

// A printable table cell. Capability / Percent render with the fixed
// precision used in reports (4 resp. 2 decimals) in CSV and at full double
// precision in JSON output.
struct Cell {
    enum class Format { Text, Integer, Capability, Percent, Raw };
    Format format = Format::Text;
    std::string text;
    double number = 0.0;

    static Cell of_text(std::string s);
    static Cell of_integer(long long v);
    static Cell capability(double v);  // "0.9580"
    static Cell percent(double v);     // "30.59%"
    static Cell raw(double v);         // full precision everywhere
};

struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { Csv, Json };

OutputFormat format_from_string(const std::string& s);

// Serialize one table. CSV: UTF-8, comma delimiter, header row, '.' decimal
// separator. JSON: {"name":..., "columns": [...], "rows": [[...], ...]}.
std::string render_table(const Table& table, OutputFormat format);

// Write to `path`, or to stdout when path is empty. Throws
// std::runtime_error on I/O failure.
void emit_table(const Table& table, OutputFormat format,
                const std::string& path);

std::string format_capability(double v);
std::string format_percent(double v);

}  // namespace emnet

#endif
