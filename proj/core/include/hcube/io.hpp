#pragma once

#include <string>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/gf2.hpp"
#include "hcube/hyper.hpp"
#include "hcube/lsi.hpp"
#include "hcube/mgl.hpp"
#include "hcube/subset_spec.hpp"
#include "hcube/uncertainty.hpp"

// File formats and deterministic serialization. All numbers are written with
// 17 significant digits ('%.17g', '.' decimal separator regardless of
// locale), so emitted files are byte-identical for identical inputs and
// round-trip exactly through double.

namespace hcube {

std::string format_double(double v);

// Function files: JSON {"n": int, "values": [2^n doubles]} or plain text,
// one value per line in index order (bit j of the line index = coordinate j).
// read_cube_function sniffs the format from the first non-space character.
CubeFunction read_cube_function(const std::string& path);
CubeFunction parse_cube_function(const std::string& text);
std::string cube_function_to_json(const CubeFunction& f);
std::string cube_function_to_text(const CubeFunction& f);

std::string curve_to_json(const CurveSamples& c);
// Two columns with an "x,y" header.
std::string curve_to_csv(const CurveSamples& c);

// {"ts", "rhos", "bound", "pass"}.
std::string decay_trace_to_json(const DecayTrace& tr);
std::string decay_trace_to_csv(const DecayTrace& tr);

// {"p0", "rho0", "method", "ts", "ps"}.
std::string hc_curve_to_json(const HCCurve& c);

std::string angle_report_to_json(const AngleReport& r);

// Generator matrix files: k lines of n characters in {0,1}.
Gf2Matrix parse_generator_matrix(const std::string& text);
Gf2Matrix read_generator_matrix(const std::string& path);
std::string generator_matrix_to_text(const Gf2Matrix& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Minimal deterministic JSON writer used by the CLI reports.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key);
  JsonWriter& begin_object(const std::string& key);
  JsonWriter& end_array();
  JsonWriter& key_value(const std::string& key, double v);
  JsonWriter& key_value(const std::string& key, const std::string& v);
  JsonWriter& key_value(const std::string& key, bool v);
  JsonWriter& key_value(const std::string& key, long long v);
  JsonWriter& key_value(const std::string& key, unsigned long long v);
  JsonWriter& number(double v);
  JsonWriter& begin_inline_object();
  std::string str() const { return out_; }

 private:
  void comma();
  std::string out_;
  bool need_comma_ = false;
};

}  // namespace hcube
