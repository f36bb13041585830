#include "alf/codec.hpp"

#include <cstdio>

namespace alf {

namespace {

Json points_json(const PointSet& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

PointSet points_from(const Json& j, const std::string& path) {
  if (!j.is_array()) throw DecodeError(path, "expected an array of points");
  PointSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.insert(point_from_json(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw DecodeError(path, "expected an object");
  if (!j.contains(key)) throw DecodeError(path + "/" + key, "missing");
  return j[key];
}

}  // namespace

Json to_json(const Point& p) { return Json(p.coords); }

Json to_json(const PNSample& s) { return {{"P", points_json(s.P)}, {"N", points_json(s.N)}}; }

Json to_json(const ICESample& s) {
  Json imps = Json::array();
  for (const auto& [from, to] : s.I) imps.push_back(Json::array({to_json(from), to_json(to)}));
  return {{"P", points_json(s.P)}, {"N", points_json(s.N)}, {"I", std::move(imps)}};
}

Json to_json(const GroundedSample& s) { return {{"V", points_json(s.V)}}; }

Point point_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Point{j.get<Coord>()};
  if (!j.is_array()) throw DecodeError(path, "expected a point (array of integers)");
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) {
      throw DecodeError(path + "/" + std::to_string(i), "expected an integer");
    }
    p.coords.push_back(j[i].get<Coord>());
  }
  return p;
}

PNSample pn_from_json(const Json& j, const std::string& path) {
  return {points_from(field(j, "P", path), path + "/P"),
          points_from(field(j, "N", path), path + "/N")};
}

ICESample ice_from_json(const Json& j, const std::string& path) {
  ICESample s{points_from(field(j, "P", path), path + "/P"),
              points_from(field(j, "N", path), path + "/N"),
              {}};
  const auto& imps = field(j, "I", path);
  if (!imps.is_array()) throw DecodeError(path + "/I", "expected an array of pairs");
  for (std::size_t i = 0; i < imps.size(); ++i) {
    const std::string at = path + "/I/" + std::to_string(i);
    if (!imps[i].is_array() || imps[i].size() != 2) throw DecodeError(at, "expected [from, to]");
    s.I.emplace(point_from_json(imps[i][0], at + "/0"), point_from_json(imps[i][1], at + "/1"));
  }
  return s;
}

GroundedSample grounded_from_json(const Json& j, const std::string& path) {
  return {points_from(field(j, "V", path), path + "/V")};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace alf
