#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bnm/geometry.hpp"
#include "bnm/matching.hpp"
#include "bnm/solver.hpp"

namespace bnm {

// Instance files: JSON {"points": [[x, y], ...]} or CSV lines "x,y".
// Parse failures throw Error(Parse); nothing is validated here.
std::vector<Point> parse_points(const std::string& text);
std::vector<Point> read_points(const std::filesystem::path& path);

// Reorders points counterclockwise by angle about their centroid.
std::vector<Point> sort_ccw(std::vector<Point> pts);

std::string points_to_json(std::span<const Point> pts);

struct MatchingFile {
  int n = 0;
  double value = 0.0;
  std::vector<IndexPair> pairs;
  std::string structure = "one-cascade";
  int cascades = 0;
  int candidates = 0;

  Matching matching() const { return {n, pairs}; }
};

MatchingFile to_matching_file(const SolveReport& report);

// For matchings from the baselines: structure and cascades are recomputed,
// candidates is 0.
MatchingFile to_matching_file(const Matching& m, double value);

// Keys in fixed order: n, value, pairs, structure, cascades, candidates.
std::string to_json(const MatchingFile& f);
MatchingFile parse_matching(const std::string& text);
MatchingFile read_matching(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);

}  // namespace bnm
