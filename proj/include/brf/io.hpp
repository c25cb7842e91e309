#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brf/core.hpp"
#include "brf/solver.hpp"

namespace brf {

/// JSON documents, each with a version tag. Rational values serialize as
/// plain numbers when integral and as "p/q" strings otherwise; parsing also
/// accepts floating literals at their exact binary value.

std::string instance_to_text(const RawInstance& raw);       // brf-instance/1
RawInstance parse_instance_text(const std::string& text);

std::string rects_to_text(const std::vector<RawRect>& rects);  // brf-rects/1
std::vector<RawRect> parse_rects_text(const std::string& text);

/// Parsed solution document. Grid coordinates are authoritative for
/// verification; the raw hitting coordinates are display values that must
/// agree with them through the instance's coordinate maps.
struct SolutionFile {
  int mis_size = 0;
  int mhs_size = 0;
  std::vector<std::pair<int, int>> independent;
  std::vector<std::pair<Rational, Rational>> hitting_raw;
  std::vector<Point> hitting_grid;
};

/// timing_ms is emitted only when present, keeping default output
/// byte-reproducible.
std::string solution_to_text(const Instance& inst, const Solution& sol,
                             std::optional<double> timing_ms);  // brf-solution/1
SolutionFile parse_solution_text(const std::string& text);

}  // namespace brf
