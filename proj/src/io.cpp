#include "bnm/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bnm/error.hpp"
#include "bnm/structure.hpp"

namespace bnm {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::vector<Point> parse_csv(const std::string& text) {
  std::vector<Point> pts;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected x,y");
    try {
      std::size_t used_x = 0, used_y = 0;
      const std::string xs = line.substr(0, comma), ys = line.substr(comma + 1);
      const double x = std::stod(xs, &used_x);
      const double y = std::stod(ys, &used_y);
      if (xs.find_first_not_of(" \t", used_x) != std::string::npos ||
          ys.find_first_not_of(" \t", used_y) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      pts.push_back({x, y});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad number");
    }
  }
  return pts;
}

}  // namespace

std::vector<Point> parse_points(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorCode::Parse, "empty instance");
  if (text[first] != '{') return parse_csv(text);
  try {
    const json doc = json::parse(text);
    std::vector<Point> pts;
    for (const auto& p : doc.at("points")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::Parse, "point must be [x, y]");
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return pts;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::vector<Point> read_points(const std::filesystem::path& path) { return parse_points(read_text(path)); }

std::vector<Point> sort_ccw(std::vector<Point> pts) {
  if (pts.empty()) return pts;
  Point c{0, 0};
  for (const Point& p : pts) c = {c.x + p.x, c.y + p.y};
  c = {c.x / static_cast<double>(pts.size()), c.y / static_cast<double>(pts.size())};
  std::stable_sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
  });
  return pts;
}

std::string points_to_json(std::span<const Point> pts) {
  ordered_json doc;
  doc["points"] = json::array();
  for (const Point& p : pts) doc["points"].push_back({p.x, p.y});
  return doc.dump() + "\n";
}

MatchingFile to_matching_file(const SolveReport& report) {
  return {report.matching.n, report.value,   report.matching.pairs, to_string(report.structure),
          report.cascades,   report.candidate_count};
}

MatchingFile to_matching_file(const Matching& m, double value) {
  const CascadeDecomposition dec = cascade_decomposition(m);
  return {m.n, value, m.pairs, dec.three_bounded_count > 0 ? "three-cascade" : "one-cascade",
          static_cast<int>(dec.cascades.size()), 0};
}

std::string to_json(const MatchingFile& f) {
  ordered_json doc;
  doc["n"] = f.n;
  doc["value"] = f.value;
  doc["pairs"] = json::array();
  for (const IndexPair& p : f.pairs) doc["pairs"].push_back({p.a, p.b});
  doc["structure"] = f.structure;
  doc["cascades"] = f.cascades;
  doc["candidates"] = f.candidates;
  return doc.dump() + "\n";
}

MatchingFile parse_matching(const std::string& text) {
  try {
    const json doc = json::parse(text);
    MatchingFile f;
    f.n = doc.at("n").get<int>();
    f.value = doc.at("value").get<double>();
    for (const auto& p : doc.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::Parse, "pair must be [i, j]");
      f.pairs.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    f.structure = doc.value("structure", std::string("one-cascade"));
    f.cascades = doc.value("cascades", 0);
    f.candidates = doc.value("candidates", 0);
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

MatchingFile read_matching(const std::filesystem::path& path) { return parse_matching(read_text(path)); }

}  // namespace bnm
