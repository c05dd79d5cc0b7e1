#include "hcube/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hcube {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

CubeFunction parse_cube_function(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::runtime_error("empty function file");
  if (text[first] == '{') {
    const auto j = nlohmann::json::parse(text);
    const int n = j.at("n").get<int>();
    std::vector<double> values = j.at("values").get<std::vector<double>>();
    return make_cube_function(n, std::move(values));
  }
  std::istringstream in(text);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    values.push_back(std::stod(line));
  }
  int n = 0;
  while ((std::size_t{1} << n) < values.size()) ++n;
  if ((std::size_t{1} << n) != values.size())
    throw std::runtime_error("text function file must contain 2^n lines");
  return make_cube_function(n, std::move(values));
}

CubeFunction read_cube_function(const std::string& path) {
  return parse_cube_function(read_text_file(path));
}

std::string cube_function_to_json(const CubeFunction& f) {
  std::string out = "{\"n\": " + std::to_string(f.n) + ", \"values\": [";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) out += ", ";
    out += format_double(f.values[i]);
  }
  out += "]}\n";
  return out;
}

std::string cube_function_to_text(const CubeFunction& f) {
  std::string out;
  for (double v : f.values) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

std::string curve_to_json(const CurveSamples& c) {
  std::string out = "{\"name\": \"" + c.name + "\", \"params\": {";
  for (std::size_t i = 0; i < c.params.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + c.params[i].first + "\": " + format_double(c.params[i].second);
  }
  out += "}, \"xs\": [";
  for (std::size_t i = 0; i < c.xs.size(); ++i) {
    if (i) out += ", ";
    out += format_double(c.xs[i]);
  }
  out += "], \"ys\": [";
  for (std::size_t i = 0; i < c.ys.size(); ++i) {
    if (i) out += ", ";
    out += format_double(c.ys[i]);
  }
  out += "]}\n";
  return out;
}

std::string curve_to_csv(const CurveSamples& c) {
  std::string out = "x,y\n";
  for (std::size_t i = 0; i < c.xs.size(); ++i) {
    out += format_double(c.xs[i]);
    out += ',';
    out += format_double(c.ys[i]);
    out += '\n';
  }
  return out;
}

namespace {
void append_array(std::string& out, const char* key, const std::vector<double>& v,
                  bool leading_comma) {
  if (leading_comma) out += ", ";
  out += "\"";
  out += key;
  out += "\": [";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  out += "]";
}
}  // namespace

std::string decay_trace_to_json(const DecayTrace& tr) {
  std::string out = "{";
  append_array(out, "ts", tr.ts, false);
  append_array(out, "rhos", tr.rhos, true);
  append_array(out, "bound", tr.bound, true);
  out += ", \"pass\": ";
  out += tr.pass ? "true" : "false";
  out += "}\n";
  return out;
}

std::string decay_trace_to_csv(const DecayTrace& tr) {
  std::string out = "t,rho,bound\n";
  for (std::size_t i = 0; i < tr.ts.size(); ++i) {
    out += format_double(tr.ts[i]);
    out += ',';
    out += format_double(tr.rhos[i]);
    out += ',';
    out += format_double(tr.bound[i]);
    out += '\n';
  }
  return out;
}

std::string hc_curve_to_json(const HCCurve& c) {
  std::string out = "{\"p0\": " + format_double(c.p0) +
                    ", \"rho0\": " + format_double(c.rho0) + ", \"method\": \"" +
                    hc_method_name(c.method) + "\"";
  append_array(out, "ts", c.ts, true);
  append_array(out, "ps", c.ps, true);
  out += "}\n";
  return out;
}

std::string angle_report_to_json(const AngleReport& r) {
  JsonWriter j;
  j.begin_object();
  j.key_value("cos_angle", r.cos_angle);
  j.key_value("method", r.method);
  j.key_value("dim_s", static_cast<long long>(r.dim_s));
  j.key_value("dim_sigma", static_cast<long long>(r.dim_sigma));
  j.end_object();
  return j.str() + "\n";
}

Gf2Matrix parse_generator_matrix(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    rows.push_back(line.substr(b, e - b + 1));
  }
  if (rows.empty()) throw std::runtime_error("empty generator matrix");
  const std::size_t n = rows.front().size();
  Gf2Matrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw std::runtime_error("ragged generator matrix");
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c] == '1')
        m.set(r, c, true);
      else if (rows[r][c] != '0')
        throw std::runtime_error("generator matrix must be 0/1 text");
    }
  }
  return m;
}

Gf2Matrix read_generator_matrix(const std::string& path) {
  return parse_generator_matrix(read_text_file(path));
}

std::string generator_matrix_to_text(const Gf2Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += m.get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

void JsonWriter::comma() {
  if (need_comma_) out_ += ", ";
  need_comma_ = false;
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += '{';
  return *this;
}

JsonWriter& JsonWriter::begin_inline_object() { return begin_object(); }

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
  comma();
  out_ += "\"" + key + "\": [";
  return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
  comma();
  out_ += "\"" + key + "\": {";
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key_value(const std::string& key, double v) {
  comma();
  out_ += "\"" + key + "\": " + format_double(v);
  need_comma_ = true;
  return *this;
}

namespace {
std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}
}  // namespace

JsonWriter& JsonWriter::key_value(const std::string& key, const std::string& v) {
  comma();
  out_ += "\"" + key + "\": \"" + json_escape(v) + "\"";
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key_value(const std::string& key, bool v) {
  comma();
  out_ += "\"" + key + "\": " + (v ? "true" : "false");
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key_value(const std::string& key, long long v) {
  comma();
  out_ += "\"" + key + "\": " + std::to_string(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key_value(const std::string& key, unsigned long long v) {
  comma();
  out_ += "\"" + key + "\": " + std::to_string(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::number(double v) {
  comma();
  out_ += format_double(v);
  need_comma_ = true;
  return *this;
}

}  // namespace hcube
