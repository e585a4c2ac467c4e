#include "json_writer.hpp"

#include <fmt/format.h>

#include <cmath>

namespace etg::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  return fmt::format("{:.16e}", v);
}

JsonWriter::JsonWriter() : writer_(buffer_) {
  writer_.SetIndent(' ', 2);
  writer_.SetFormatOptions(rapidjson::kFormatSingleLineArray);
}

JsonWriter& JsonWriter::begin_object() {
  writer_.StartObject();
  return *this;
}
JsonWriter& JsonWriter::end_object() {
  writer_.EndObject();
  return *this;
}
JsonWriter& JsonWriter::begin_array() {
  writer_.StartArray();
  return *this;
}
JsonWriter& JsonWriter::end_array() {
  writer_.EndArray();
  return *this;
}
JsonWriter& JsonWriter::key(std::string_view k) {
  writer_.Key(k.data(), static_cast<rapidjson::SizeType>(k.size()));
  return *this;
}
JsonWriter& JsonWriter::value(double v) {
  const std::string s = format_number(v);
  writer_.RawValue(s.data(), s.size(), rapidjson::kNumberType);
  return *this;
}
JsonWriter& JsonWriter::value(int v) {
  writer_.Int(v);
  return *this;
}
JsonWriter& JsonWriter::value(std::uint64_t v) {
  writer_.Uint64(v);
  return *this;
}
JsonWriter& JsonWriter::value(bool v) {
  writer_.Bool(v);
  return *this;
}
JsonWriter& JsonWriter::value(std::string_view s) {
  writer_.String(s.data(), static_cast<rapidjson::SizeType>(s.size()));
  return *this;
}
JsonWriter& JsonWriter::value(const Vec3& v) {
  begin_array();
  for (std::size_t i = 0; i < 3; ++i) value(v[i]);
  return end_array();
}
JsonWriter& JsonWriter::null() {
  writer_.Null();
  return *this;
}

}  // namespace etg::cli
