#include "esq/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace esq {

using nlohmann::json;

namespace {

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("expected a coordinate pair [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point2> points_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw FormatError(std::string("missing array '") + key + "'");
  std::vector<Point2> out;
  for (const auto& p : j[key]) out.push_back(point_from(p));
  return out;
}

json rect_to(const AxisRect& r) { return {{"xmin", r.xmin}, {"xmax", r.xmax}, {"ymin", r.ymin}, {"ymax", r.ymax}}; }

AxisRect rect_from(const json& j) {
  try {
    return {j.at("xmin").get<double>(), j.at("xmax").get<double>(), j.at("ymin").get<double>(),
            j.at("ymax").get<double>()};
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad rectangle: ") + e.what());
  }
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("instance must be an object");
  Instance in;
  if (!j.contains("mode") || !j["mode"].is_string()) throw FormatError("missing string 'mode'");
  try {
    in.mode = mode_from_string(j["mode"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  in.coords = points_from(j, "coordinates");
  if (j.contains("region") && !j["region"].is_null()) in.region = rect_from(j["region"]);
  if (in.mode == Mode::Rect && !in.region) throw FormatError("rect mode needs 'region'");
  if (j.contains("jitter_seed") && !j["jitter_seed"].is_null()) {
    if (!j["jitter_seed"].is_number_integer()) throw FormatError("'jitter_seed' must be an integer");
    in.jitter_seed = j["jitter_seed"].get<std::uint64_t>();
  }
  return in;
}

json instance_to_json(const Instance& in) {
  json j{{"mode", to_string(in.mode)}, {"coordinates", json::array()}};
  for (Point2 p : in.coords) j["coordinates"].push_back({p.x, p.y});
  if (in.region) j["region"] = rect_to(*in.region);
  if (in.jitter_seed) j["jitter_seed"] = *in.jitter_seed;
  return j;
}

std::vector<Point2> queries_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("query document must be an object");
  return points_from(j, "queries");
}

json queries_to_json(const std::vector<Point2>& qs) {
  json j{{"queries", json::array()}};
  for (Point2 p : qs) j["queries"].push_back({p.x, p.y});
  return j;
}

json answer_to_json(const QueryAnswer& a) {
  json j;
  switch (a.kind) {
    case QueryAnswer::Kind::BoundedCircle:
      j = {{"kind", "circle"}, {"center", {a.circle->center.x, a.circle->center.y}}, {"radius", a.circle->radius}};
      break;
    case QueryAnswer::Kind::UnboundedCircle:
      j = {{"kind", "unbounded"}};
      break;
    case QueryAnswer::Kind::Rectangle:
      j = {{"kind", "rectangle"}, {"rect", rect_to(*a.rect)}};
      break;
    case QueryAnswer::Kind::Null:
      j = {{"kind", "null"}};
      break;
  }
  if (a.witness) j["witness"] = *a.witness;
  return j;
}

QueryAnswer answer_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    QueryAnswer a;
    if (kind == "circle") {
      a = QueryAnswer::bounded({point_from(j.at("center")), j.at("radius").get<double>()});
    } else if (kind == "unbounded") {
      a = QueryAnswer::unbounded();
    } else if (kind == "rectangle") {
      a = QueryAnswer::rectangle(rect_from(j.at("rect")));
    } else if (kind != "null") {
      throw FormatError("unknown answer kind '" + kind + "'");
    }
    if (j.contains("witness")) a.witness = j["witness"].get<long>();
    return a;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad answer: ") + e.what());
  }
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot write " + path);
  f << text << '\n';
  if (!f) throw FormatError("write failed for " + path);
}

}  // namespace esq
