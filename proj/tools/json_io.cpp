#include "json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gridlsh::cli {

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

std::vector<GridPoint> parse_point_array(const nlohmann::json& arr, const std::string& what) {
  if (!arr.is_array()) throw std::runtime_error(what + " must be an array");
  std::vector<GridPoint> pts;
  pts.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::runtime_error(what + " entries must be [x, y] integer pairs");
    pts.push_back({e[0].get<i64>(), e[1].get<i64>()});
  }
  return pts;
}

}  // namespace

Histogram load_histogram(const std::string& path) {
  auto j = load_json(path);
  if (!j.contains("weights") || !j["weights"].is_array())
    throw std::runtime_error(path + ": expected {\"weights\": [...]}");
  std::vector<u64> w;
  for (const auto& e : j["weights"]) {
    if (!e.is_number_integer() || e.get<i64>() < 0)
      throw std::runtime_error(path + ": weights must be non-negative integers");
    w.push_back(e.get<u64>());
  }
  return Histogram::from_weights(std::move(w));
}

GridPolygon load_polygon(const std::string& path) {
  auto j = load_json(path);
  if (!j.contains("vertices"))
    throw std::runtime_error(path + ": expected {\"vertices\": [[x,y], ...]}");
  return GridPolygon::from_vertices(parse_point_array(j["vertices"], path + ": vertices"));
}

std::vector<GridPoint> load_points(const std::string& path) {
  auto j = load_json(path);
  if (!j.contains("points"))
    throw std::runtime_error(path + ": expected {\"points\": [[x,y], ...]}");
  return parse_point_array(j["points"], path + ": points");
}

}  // namespace gridlsh::cli
