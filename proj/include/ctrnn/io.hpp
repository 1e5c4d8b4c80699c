#pragma once

#include <string>
#include <vector>

namespace ctrnn {

// 17 significant digits, the round-trip-exact width for doubles.
std::string format_double(double x);

// Minimal streaming JSON builder with 2-space indentation. Key order is
// insertion order and doubles go through format_double, so emitted reports
// are byte-stable across runs.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& null_value();
  const std::string& str() const { return out_; }

 private:
  void element_prefix_();
  void indent_();
  std::string out_;
  std::vector<bool> has_items_;
  bool after_key_ = false;
};

std::string json_escape(const std::string& s);

}  // namespace ctrnn
