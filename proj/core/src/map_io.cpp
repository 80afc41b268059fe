#include "rotno/map_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rotno/errors.hpp"

namespace rotno {

namespace {

Rational field(const nlohmann::ordered_json& seg, const char* key) {
  if (!seg.contains(key) || !seg[key].is_string()) {
    throw ValidationError(std::string("segment missing string field \"") + key + "\"");
  }
  return Rational::parse(seg[key].get<std::string>());
}

}  // namespace

Lift read_map(std::istream& is) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad map file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array() ||
      doc["segments"].empty()) {
    throw ValidationError("map file needs a nonempty \"segments\" array");
  }
  std::vector<Segment> segs;
  for (const auto& s : doc["segments"]) {
    segs.push_back({field(s, "start"), field(s, "value"), field(s, "slope"),
                    field(s, "intercept")});
  }
  return Lift::make(std::move(segs));
}

Lift read_map_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open map file '" + path + "'");
  return read_map(is);
}

void write_map(std::ostream& os, const Lift& lift) {
  nlohmann::ordered_json doc;
  doc["segments"] = nlohmann::ordered_json::array();
  for (const auto& s : lift.segments()) {
    doc["segments"].push_back({{"start", s.start.str()},
                               {"value", s.value.str()},
                               {"slope", s.slope.str()},
                               {"intercept", s.intercept.str()}});
  }
  os << doc.dump(2) << "\n";
}

void write_map_file(const std::string& path, const Lift& lift) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot open '" + path + "' for writing");
  write_map(os, lift);
}

}  // namespace rotno
