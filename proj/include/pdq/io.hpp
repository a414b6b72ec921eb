#pragma once

// Flat-file artifacts: CSV tables, line-plot SVGs and content digests.

#include <string>
#include <string_view>
#include <vector>

namespace pdq {

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string fmt17(double v);

/// A CSV document. Comment lines are written first as "# <text>".
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
  std::size_t column(std::string_view name) const;  // throws InvalidArgument
  std::vector<double> numeric_column(std::string_view name) const;
};

/// Builds a table from equal-length numeric columns.
CsvTable numeric_table(std::vector<std::string> header, const std::vector<std::vector<double>>& columns);

/// RFC-4180 quoting (fields with comma, quote, CR or LF are quoted); LF line ends.
std::string to_csv(const CsvTable& t);
CsvTable parse_csv(std::string_view text);

std::string read_text_file(const std::string& path);
/// Creates parent directories; throws Error naming the path on failure.
void write_text_file(const std::string& path, std::string_view content);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotStyle {
  std::string title;
  std::string x_label = "t";
  std::string y_label;
  int width = 720;
  int height = 440;
};

/// Standalone SVG with one polyline per series and a legend; non-finite
/// points are skipped.
std::string render_svg(const std::vector<Series>& series, const PlotStyle& style);

std::string sha256_hex(std::string_view data);

}  // namespace pdq
