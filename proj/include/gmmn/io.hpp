#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gmmn/network.hpp"

namespace gmmn {

// Instances and solutions are JSON Lines: one header object, then one object per
// record. Coordinates are written in user units as exact decimals; on input they are
// scaled by 10^scale so that every coordinate is an integer.
inline constexpr const char* kInstanceSchema = "gmmn-instance/1";
inline constexpr const char* kSolutionSchema = "gmmn-solution/1";
inline constexpr int kMaxScale = 12;

std::string format_decimal(Coord value, int scale);

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);
std::string serialize_instance(const Instance& instance);
void write_text_file(const std::string& path, const std::string& text);

// A solution as stored on disk, coordinates already scaled to integers.
struct SolutionRecord {
  std::string solver;
  Length total_length = 0;
  int scale = 0;
  Length ratio = 1;
  double wall_ms = 0.0;
  std::vector<std::string> warnings;
  std::vector<std::vector<Point>> paths;
  std::vector<std::pair<Point, Point>> edges;
};

std::string serialize_solution(const Solution& solution, int scale);
SolutionRecord parse_solution(std::istream& in);
SolutionRecord parse_solution_text(const std::string& text);
SolutionRecord read_solution_file(const std::string& path);

// Rebuilds the network on the instance's grid, runs the M-path validator and checks
// that the edge list and the paths both reproduce total_length.
Validation check_solution_record(const Instance& instance, const SolutionRecord& record);
GridNetwork network_from_record(const Instance& instance, const SolutionRecord& record);

}  // namespace gmmn
