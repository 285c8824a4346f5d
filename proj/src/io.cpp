#include "catrange/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace catrange {

namespace {

std::runtime_error parse_error(const std::string& what, int line_no) {
  return std::runtime_error(what + " at line " + std::to_string(line_no));
}

template <class T>
T open_and(const std::string& path, T (*fn)(std::istream&)) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return fn(is);
}

}  // namespace

CategoryGraph read_graph(std::istream& is) {
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line)) throw parse_error("missing graph header", 1);
  ++line_no;
  std::istringstream head(line);
  int n = 0;
  std::string kind_str;
  if (!(head >> n >> kind_str)) throw parse_error("bad graph header", line_no);

  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> weights;
  bool in_weights = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("weights") != std::string::npos) {
        in_weights = true;
        weights.assign(n, 1);
      }
      continue;
    }
    std::istringstream ls(line);
    if (in_weights) {
      int v = 0;
      std::int64_t w = 0;
      if (!(ls >> v >> w)) throw parse_error("bad weight line", line_no);
      if (v < 0 || v >= n) throw parse_error("weight vertex out of range", line_no);
      weights[v] = w;
    } else {
      int u = 0, v = 0;
      if (!(ls >> u >> v)) throw parse_error("bad edge line", line_no);
      edges.emplace_back(u, v);
    }
  }
  return CategoryGraph(n, std::move(edges), graph_kind_from_string(kind_str),
                       std::move(weights));
}

void write_graph(std::ostream& os, const CategoryGraph& g) {
  os << g.vertex_count() << ' ' << to_string(g.kind()) << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  if (g.has_nonunit_weights()) {
    os << "# weights\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << v << ' ' << g.weight(v) << '\n';
  }
}

std::vector<std::pair<std::int64_t, int>> read_points(std::istream& is) {
  std::vector<std::pair<std::int64_t, int>> pts;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::int64_t x = 0;
    int c = 0;
    if (!(ls >> x >> c)) throw parse_error("bad point line", line_no);
    pts.emplace_back(x, c);
  }
  return pts;
}

void write_points(std::ostream& os, std::span<const std::pair<std::int64_t, int>> pts) {
  for (const auto& [x, c] : pts) os << x << ' ' << c << '\n';
}

std::vector<QueryLine> read_queries(std::istream& is) {
  std::vector<QueryLine> qs;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    QueryLine q;
    if (!(ls >> q.lo >> q.hi)) throw parse_error("bad query line", line_no);
    if (!(ls >> q.v_q)) q.v_q = -1;
    qs.push_back(q);
  }
  return qs;
}

void write_queries(std::ostream& os, std::span<const QueryLine> qs) {
  for (const auto& q : qs) {
    os << q.lo << ' ' << q.hi;
    if (q.v_q >= 0) os << ' ' << q.v_q;
    os << '\n';
  }
}

OvInstance read_ov(std::istream& is) {
  std::vector<std::uint64_t> a, b;
  bool second = false;
  int dim = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) {
      if (!a.empty()) second = true;
      continue;
    }
    if (line[0] == '#') continue;
    if (line.size() > 64) throw parse_error("vector longer than 64 bits", line_no);
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '1')
        v |= std::uint64_t(1) << k;
      else if (line[k] != '0')
        throw parse_error("vector lines must be 0/1 strings", line_no);
    }
    if (dim < 0)
      dim = static_cast<int>(line.size());
    else if (dim != static_cast<int>(line.size()))
      throw parse_error("dimension mismatch", line_no);
    (second ? b : a).push_back(v);
  }
  return OvInstance(dim, std::move(a), std::move(b));
}

void write_ov(std::ostream& os, const OvInstance& inst) {
  auto emit = [&](const std::vector<std::uint64_t>& side) {
    for (std::uint64_t v : side) {
      for (int k = 0; k < inst.dim; ++k) os << (((v >> k) & 1) ? '1' : '0');
      os << '\n';
    }
  };
  emit(inst.a);
  os << '\n';
  emit(inst.b);
}

CategoryGraph read_graph_file(const std::string& path) { return open_and(path, read_graph); }

std::vector<std::pair<std::int64_t, int>> read_points_file(const std::string& path) {
  return open_and(path, read_points);
}

std::vector<QueryLine> read_queries_file(const std::string& path) {
  return open_and(path, read_queries);
}

OvInstance read_ov_file(const std::string& path) { return open_and(path, read_ov); }

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

}  // namespace

void write_graph_file(const std::string& path, const CategoryGraph& g) {
  auto os = open_out(path);
  write_graph(os, g);
}

void write_points_file(const std::string& path,
                       std::span<const std::pair<std::int64_t, int>> pts) {
  auto os = open_out(path);
  write_points(os, pts);
}

void write_ov_file(const std::string& path, const OvInstance& inst) {
  auto os = open_out(path);
  write_ov(os, inst);
}

}  // namespace catrange
