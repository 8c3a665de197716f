#include "blend/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace blend::io {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidConfig, path + ": " + e.what());
  }
}

namespace {

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw Error(ErrorKind::InvalidConfig, std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

} // namespace

BlockConfig config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("blocks") || !j.at("blocks").is_array())
    throw Error(ErrorKind::InvalidConfig, "config needs 'domain' and 'blocks'");
  const json& d = j.at("domain");
  if (!d.is_object() || !d.contains("type") || !d.at("type").is_string())
    throw Error(ErrorKind::InvalidConfig, "domain needs a 'type'");
  BlockConfig c;
  std::string type = d.at("type").get<std::string>();
  if (type == "line") {
    c.domain = Domain::line();
  } else if (type == "torus") {
    c.domain = Domain::torus(number(d, "L"));
  } else {
    throw Error(ErrorKind::InvalidConfig, "unknown domain type '" + type + "'");
  }
  for (const json& b : j.at("blocks")) {
    if (!b.is_object() || !b.contains("phase") || !b.at("phase").is_string())
      throw Error(ErrorKind::InvalidConfig, "each block needs a 'phase'");
    std::string p = b.at("phase").get<std::string>();
    if (p.size() != 1) throw Error(ErrorKind::InvalidConfig, "phase must be U, V or H");
    c.blocks.push_back({phase_from_char(p[0]), number(b, "width")});
  }
  return c;
}

json to_json(const BlockConfig& config) {
  json d = config.domain.is_torus() ? json{{"type", "torus"}, {"L", config.domain.length}}
                                    : json{{"type", "line"}};
  json blocks = json::array();
  for (const auto& b : config.blocks) blocks.push_back({{"phase", std::string(1, to_char(b.phase))}, {"width", b.width}});
  return {{"domain", d}, {"blocks", blocks}};
}

Params params_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidParams, "params must be an object");
  bool c = j.contains("c0") || j.contains("cu") || j.contains("cv");
  bool d = j.contains("d_u0") || j.contains("d_v0") || j.contains("d_uv");
  if (c == d) throw Error(ErrorKind::InvalidParams, "give exactly one of {c0, cu, cv} or {d_u0, d_v0, d_uv}");
  try {
    if (c) return Params::from_c(number(j, "c0"), number(j, "cu"), number(j, "cv"));
    return Params::from_d(number(j, "d_u0"), number(j, "d_v0"), number(j, "d_uv"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidConfig) throw Error(ErrorKind::InvalidParams, e.what());
    throw;
  }
}

json to_json(const Params& p) {
  return {{"c0", p.c0()}, {"cu", p.cu()}, {"cv", p.cv()},
          {"d_u0", p.d_u0()}, {"d_v0", p.d_v0()}, {"d_uv", p.d_uv()}};
}

json to_json(const EnergyBreakdown& e) {
  return {{"count_u0", e.count_u0}, {"count_v0", e.count_v0}, {"count_uv", e.count_uv},
          {"interfacial", e.interfacial}, {"nonlocal", e.nonlocal}, {"total", e.total}};
}

json to_json(const StationarityReport& r) {
  json phis = json::array();
  for (const auto& p : r.phi_at_interfaces)
    phis.push_back({{"position", p.position}, {"type", std::string(to_string(p.type))}, {"phi", p.phi}});
  return {{"phi_at_interfaces", phis},
          {"equal_phi_residual", r.equal_phi_residual},
          {"projected_gradient_norm", r.projected_gradient_norm}};
}

json to_json(const MollifierConstants& k) {
  return {{"N", k.N}, {"A_N", k.A}, {"I_grad", k.I_grad}, {"I_mom", k.I_mom}, {"C0", k.C0}, {"C1", k.C1}};
}

namespace {

enum class Kind { Number, Integer, String, Array, Object, Boolean };

bool matches(const json& j, Kind k) {
  switch (k) {
  case Kind::Number: return j.is_number();
  case Kind::Integer: return j.is_number_integer();
  case Kind::String: return j.is_string();
  case Kind::Array: return j.is_array();
  case Kind::Object: return j.is_object();
  case Kind::Boolean: return j.is_boolean();
  }
  return false;
}

void require(const json& j, std::initializer_list<std::pair<const char*, Kind>> fields, std::string_view where) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, std::string(where) + ": expected an object");
  for (const auto& [key, kind] : fields)
    if (!j.contains(key) || !matches(j.at(key), kind))
      throw Error(ErrorKind::InvalidConfig, std::string(where) + ": field '" + key + "' missing or mistyped");
}

} // namespace

void validate_schema(std::string_view schema, const json& j) {
  if (schema == "energy") {
    require(j, {{"count_u0", Kind::Integer}, {"count_v0", Kind::Integer}, {"count_uv", Kind::Integer},
                {"interfacial", Kind::Number}, {"nonlocal", Kind::Number}, {"total", Kind::Number}},
            schema);
    double sum = j.at("interfacial").get<double>() + j.at("nonlocal").get<double>();
    if (std::abs(sum - j.at("total").get<double>()) > 1e-12 * std::max(1.0, std::abs(sum)))
      throw Error(ErrorKind::InvalidConfig, "energy: total differs from its parts");
  } else if (schema == "config") {
    config_from_json(j);
  } else if (schema == "stationary") {
    require(j, {{"config", Kind::Object}, {"report", Kind::Object}, {"iterations", Kind::Integer},
                {"energy", Kind::Object}},
            schema);
    config_from_json(j.at("config"));
    require(j.at("report"), {{"phi_at_interfaces", Kind::Array}, {"equal_phi_residual", Kind::Number},
                             {"projected_gradient_norm", Kind::Number}},
            "stationary.report");
    validate_schema("energy", j.at("energy"));
  } else if (schema == "constants") {
    require(j, {{"N", Kind::Integer}, {"A_N", Kind::Number}, {"I_grad", Kind::Number}, {"I_mom", Kind::Number},
                {"C0", Kind::Number}, {"C1", Kind::Number}},
            schema);
  } else if (schema == "sweep") {
    require(j, {{"patterns", Kind::Array}, {"envelope", Kind::Array}, {"crossovers", Kind::Array}}, schema);
    for (const auto& p : j.at("envelope"))
      require(p, {{"M", Kind::Number}, {"pattern", Kind::String}, {"F_over_M", Kind::Number}}, "sweep.envelope");
    for (const auto& c : j.at("crossovers"))
      require(c, {{"M", Kind::Number}, {"from", Kind::String}, {"to", Kind::String}, {"F_over_M", Kind::Number}},
              "sweep.crossovers");
  } else if (schema == "radial") {
    require(j, {{"kind", Kind::String}, {"N", Kind::Integer}, {"m", Kind::Number}, {"rows", Kind::Array}}, schema);
    for (const auto& r : j.at("rows"))
      require(r, {{"kappa", Kind::Number}, {"exact", Kind::Number}, {"expansion", Kind::Number},
                  {"abs_error", Kind::Number}},
              "radial.rows");
  } else if (schema == "micelle") {
    require(j, {{"N", Kind::Integer}, {"R1", Kind::Number}, {"energy_per_mass", Kind::Number},
                {"closed_form", Kind::Number}},
            schema);
  } else if (schema == "cutoff") {
    require(j, {{"planar", Kind::Number}, {"a", Kind::Array}, {"deviation", Kind::Array}}, schema);
    if (j.at("a").size() != j.at("deviation").size())
      throw Error(ErrorKind::InvalidConfig, "cutoff: 'a' and 'deviation' differ in length");
  } else {
    throw Error(ErrorKind::InvalidConfig, "unknown schema '" + std::string(schema) + "'");
  }
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) { row(header); }

CsvWriter& CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw Error(ErrorKind::InvalidConfig, "CSV row has the wrong width");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
  return *this;
}

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string esc(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

} // namespace

std::string svg_line_chart(const std::vector<SvgSeries>& series, const SvgOptions& o) {
  const double W = 760, H = 480, left = 70, right = 170, top = 40, bottom = 55;
  auto tx = [&](double v) { return o.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return o.log_y ? std::log10(v) : v; };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if ((o.log_x && s.x[i] <= 0) || (o.log_y && s.y[i] <= 0)) continue;
      if (o.y_max > 0 && s.y[i] > o.y_max) continue;
      x0 = std::min(x0, tx(s.x[i]));
      x1 = std::max(x1, tx(s.x[i]));
      y0 = std::min(y0, ty(s.y[i]));
      y1 = std::max(y1, ty(s.y[i]));
    }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  double pw = W - left - right, ph = H - top - bottom;
  auto px = [&](double v) { return left + (tx(v) - x0) / (x1 - x0) * pw; };
  auto py = [&](double v) { return top + ph - (std::clamp(ty(v), y0, y1) - y0) / (y1 - y0) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
     << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << esc(o.title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    double fx = x0 + (x1 - x0) * k / 5, fy = y0 + (y1 - y0) * k / 5;
    double vx = o.log_x ? std::pow(10, fx) : fx, vy = o.log_y ? std::pow(10, fy) : fy;
    double sx = left + pw * k / 5, sy = top + ph - ph * k / 5;
    os << "<text x=\"" << num(sx) << "\" y=\"" << num(top + ph + 18) << "\" text-anchor=\"middle\">" << tick(vx)
       << "</text>\n";
    os << "<text x=\"" << num(left - 6) << "\" y=\"" << num(sy + 4) << "\" text-anchor=\"end\">" << tick(vy)
       << "</text>\n";
  }
  os << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(H - 12) << "\" text-anchor=\"middle\">"
     << esc(o.x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << num(top + ph / 2) << ")\">" << esc(o.y_label) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* colour = s.emphasis ? "black" : kPalette[k % 10];
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << (s.emphasis ? 2.5 : 1.2)
       << "\"" << (s.emphasis ? " stroke-dasharray=\"6 3\"" : "") << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if ((o.log_x && s.x[i] <= 0) || (o.log_y && s.y[i] <= 0)) continue;
      if (o.y_max > 0 && s.y[i] > o.y_max) continue;
      os << num(px(s.x[i])) << ',' << num(py(s.y[i])) << ' ';
    }
    os << "\"/>\n";
    double ly = top + 14 + 16.0 * k;
    os << "<line x1=\"" << num(W - right + 12) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(W - right + 36)
       << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << num(W - right + 42) << "\" y=\"" << num(ly) << "\">" << esc(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace blend::io
