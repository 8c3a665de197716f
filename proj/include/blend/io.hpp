#pragma once

#include "json.hpp"
#include <string>
#include <string_view>
#include <vector>

#include "blend/boundsnd.hpp"
#include "blend/core.hpp"
#include "blend/energy1d.hpp"
#include "blend/stationary1d.hpp"

namespace blend::io {

using nlohmann::json;

/// 17 significant digits, '.' decimal separator.
std::string format_real(double x);

json read_json_file(const std::string& path);

BlockConfig config_from_json(const json& j);
json to_json(const BlockConfig& config);

/// Accepts exactly one of {c0, cu, cv} or {d_u0, d_v0, d_uv}.
Params params_from_json(const json& j);
json to_json(const Params& params);

json to_json(const EnergyBreakdown& e);
json to_json(const StationarityReport& r);
json to_json(const MollifierConstants& k);

/// Checks a document against one of the output schemas: "energy", "config",
/// "stationary", "constants", "sweep", "radial", "micelle", "cutoff". Throws InvalidConfig on mismatch.
void validate_schema(std::string_view schema, const json& j);

class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);
  CsvWriter& row(const std::vector<std::string>& cells);
  std::string str() const { return text_; }

private:
  std::size_t columns_;
  std::string text_;
};

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool emphasis = false;
};

struct SvgOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  double y_max = 0; // clip when positive
};

/// Self-contained SVG line chart.
std::string svg_line_chart(const std::vector<SvgSeries>& series, const SvgOptions& options);

} // namespace blend::io
