#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace acps::csv {

/// Shortest decimal text that parses back to exactly `x` (never more than 17
/// significant digits). NaN prints as "nan".
std::string format_number(double x);

using Row = std::vector<std::string>;

/// Comma-separated, '\n' line endings, header always written first.
std::string render(const Row& header, const std::vector<Row>& rows);

/// Writes render(header, rows) to `path`; throws std::runtime_error on I/O failure.
void write_file(const std::filesystem::path& path, const Row& header, const std::vector<Row>& rows);

/// Minimal reader for files produced by write_file (no quoting).
std::vector<Row> read_file(const std::filesystem::path& path);

}  // namespace acps::csv
