#include "etg_cli/config.hpp"

#include <rapidjson/document.h>
#include <rapidjson/error/en.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "etg/errors.hpp"
#include "json_writer.hpp"

namespace etg::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); }

double parse_double(std::string_view text, const std::string& what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) bad("cannot parse " + what + " from '" + s + "'");
  return v;
}

Vec3 triple_from(const rapidjson::Value& v, const char* name) {
  if (!v.IsArray() || v.Size() != 3) bad(std::string(name) + " must be an array of 3 numbers");
  Vec3 out;
  for (rapidjson::SizeType i = 0; i < 3; ++i) {
    if (!v[i].IsNumber()) bad(std::string(name) + " must be an array of 3 numbers");
    out[i] = v[i].GetDouble();
  }
  return out;
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::map: return "map";
    case Mode::elliptic: return "elliptic";
    case Mode::involutions: return "involutions";
    case Mode::sqrt: return "sqrt";
  }
  return "map";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : {Mode::map, Mode::elliptic, Mode::involutions, Mode::sqrt}) {
    if (to_string(m) == name) return m;
  }
  bad("unknown mode '" + std::string(name) + "'");
}

double default_tolerance() {
  if (const char* env = std::getenv("ETG_TOLERANCE"); env != nullptr && *env != '\0') {
    const double v = parse_double(env, "ETG_TOLERANCE");
    if (!(v > 0.0)) bad("ETG_TOLERANCE must be positive");
    return v;
  }
  return 1e-8;
}

double tolerance(const RunConfig& c, const std::string& name) {
  const auto it = c.tolerances.find(name);
  return it != c.tolerances.end() ? it->second : default_tolerance();
}

RunConfig parse_config(std::string_view json) {
  rapidjson::Document doc;
  doc.Parse<rapidjson::kParseFullPrecisionFlag | rapidjson::kParseNanAndInfFlag>(json.data(),
                                                                                 json.size());
  if (doc.HasParseError()) {
    bad(std::string("malformed JSON: ") + rapidjson::GetParseError_En(doc.GetParseError()) +
        " at offset " + std::to_string(doc.GetErrorOffset()));
  }
  if (!doc.IsObject()) bad("config must be a JSON object");

  RunConfig c;
  for (auto it = doc.MemberBegin(); it != doc.MemberEnd(); ++it) {
    const std::string key = it->name.GetString();
    const rapidjson::Value& v = it->value;
    if (key == "delta") {
      c.delta = triple_from(v, "delta");
    } else if (key == "x0") {
      c.x0 = triple_from(v, "x0");
    } else if (key == "steps") {
      if (!v.IsInt()) bad("steps must be an integer");
      c.steps = v.GetInt();
    } else if (key == "mode") {
      if (!v.IsString()) bad("mode must be a string");
      c.mode = parse_mode(v.GetString());
    } else if (key == "nu1") {
      if (v.IsNull()) {
        c.nu1.reset();
      } else if (v.IsNumber()) {
        c.nu1 = v.GetDouble();
      } else {
        bad("nu1 must be a number or null");
      }
    } else if (key == "seed") {
      if (v.IsNull()) {
        c.seed.reset();
      } else if (v.IsUint64()) {
        c.seed = v.GetUint64();
      } else {
        bad("seed must be a non-negative integer or null");
      }
    } else if (key == "tolerances") {
      if (!v.IsObject()) bad("tolerances must be an object");
      for (auto t = v.MemberBegin(); t != v.MemberEnd(); ++t) {
        if (!t->value.IsNumber()) bad("tolerance values must be numbers");
        c.tolerances[t->name.GetString()] = t->value.GetDouble();
      }
    } else {
      bad("unknown config key '" + key + "'");
    }
  }
  validate(c);
  return c;
}

void write_config(JsonWriter& w, const RunConfig& c) {
  w.begin_object();
  w.key("delta").value(c.delta);
  w.key("x0").value(c.x0);
  w.key("steps").value(c.steps);
  w.key("mode").value(to_string(c.mode));
  w.key("nu1");
  if (c.nu1) {
    w.value(*c.nu1);
  } else {
    w.null();
  }
  w.key("seed");
  if (c.seed) {
    w.value(*c.seed);
  } else {
    w.null();
  }
  w.key("tolerances").begin_object();
  for (const auto& [name, v] : c.tolerances) w.key(name).value(v);
  w.end_object();
  w.end_object();
}

std::string serialize_config(const RunConfig& c) {
  JsonWriter w;
  write_config(w, c);
  return w.str();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Vec3 parse_triple(std::string_view text) {
  Vec3 out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string_view::npos)) bad("expected three comma-separated numbers");
    const std::string_view part =
        text.substr(start, last ? std::string_view::npos : comma - start);
    out[i] = parse_double(part, "triple component");
    start = comma + 1;
  }
  return out;
}

void validate(const RunConfig& c) {
  if (c.steps < 0) bad("steps must be non-negative");
  for (const auto& [name, v] : c.tolerances) {
    if (!(v > 0.0)) bad("tolerance '" + name + "' must be positive");
  }
}

}  // namespace etg::cli
