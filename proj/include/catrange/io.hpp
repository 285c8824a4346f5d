#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/ov.hpp"
#include "catrange/points.hpp"

namespace catrange {

// Text formats:
//   graph:   line 1 "n kind"; one "u v" edge per line (u sub-category of v);
//            optional "# weights" section of "v w" lines.
//   points:  one "x color_id" per line.
//   queries: "lo hi" or "lo hi v_q" per line.
//   ov:      one 0/1 string per vector, a blank line between sets A and B.

CategoryGraph read_graph(std::istream& is);
void write_graph(std::ostream& os, const CategoryGraph& g);

std::vector<std::pair<std::int64_t, int>> read_points(std::istream& is);
void write_points(std::ostream& os, std::span<const std::pair<std::int64_t, int>> pts);

struct QueryLine {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  int v_q = -1;  // -1 when absent
};
std::vector<QueryLine> read_queries(std::istream& is);
void write_queries(std::ostream& os, std::span<const QueryLine> qs);

OvInstance read_ov(std::istream& is);
void write_ov(std::ostream& os, const OvInstance& inst);

// Same readers/writers against file paths; throw std::runtime_error on I/O
// failure.
CategoryGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const CategoryGraph& g);
std::vector<std::pair<std::int64_t, int>> read_points_file(const std::string& path);
void write_points_file(const std::string& path,
                       std::span<const std::pair<std::int64_t, int>> pts);
std::vector<QueryLine> read_queries_file(const std::string& path);
OvInstance read_ov_file(const std::string& path);
void write_ov_file(const std::string& path, const OvInstance& inst);

}  // namespace catrange
