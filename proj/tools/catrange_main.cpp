// Command-line surface: instance generation, structure build/query, reduction
// dumps, oracle verification, and benchmarking.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catrange/equiv.hpp"
#include "catrange/gen.hpp"
#include "catrange/hcc_dag.hpp"
#include "catrange/hcc_tree.hpp"
#include "catrange/io.hpp"
#include "catrange/oracles.hpp"
#include "catrange/ov.hpp"
#include "catrange/parallel.hpp"
#include "catrange/scrc_tree.hpp"

namespace {

using namespace catrange;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct BuiltStructure {
  // query(a, b, v): rank interval [a, b], vertex v (ignored unless SCRC).
  std::function<std::int64_t(int, int, int)> query;
  std::function<std::int64_t(int, int, int)> oracle;
  bool needs_vertex = false;
  std::size_t stored_entries = 0;
  std::size_t compressed_size = 0;
};

BuiltStructure instantiate(const std::string& structure, const RankedPointSet& pts,
                           const CategoryGraph& g, bool weighted) {
  BuiltStructure out;
  if (structure == "hcc-tree") {
    auto idx = std::make_shared<HccTreeIndex>(pts, g, weighted);
    out.query = [idx](int a, int b, int) { return idx->query_rank(a, b); };
    out.stored_entries = idx->stored_points();
  } else if (structure == "hcc-path") {
    auto idx = std::make_shared<HccPathIndex>(pts, g, weighted);
    out.query = [idx](int a, int b, int) { return idx->query_rank(a, b); };
    out.stored_entries = idx->stored_points();
  } else if (structure == "hcc-dag") {
    auto idx = std::make_shared<HccDagIndex>(pts, g, weighted);
    out.query = [idx](int a, int b, int) { return idx->query_rank(a, b); };
    out.stored_entries = idx->stored_entries();
    out.compressed_size = idx->compressed_size();
  } else if (structure == "scrc-tree") {
    auto idx = std::make_shared<ScrcTreeIndex>(pts, g);
    out.query = [idx](int a, int b, int v) { return idx->query_rank(a, b, v); };
    out.stored_entries = idx->stored_points();
    out.needs_vertex = true;
  } else if (structure == "scrc-dag") {
    auto idx = std::make_shared<ScrcDagTrivial>(pts, g);
    out.query = [idx](int a, int b, int v) { return idx->query_rank(a, b, v); };
    out.stored_entries = idx->stored_entries();
    out.needs_vertex = true;
  } else {
    throw CLI::ValidationError("unknown structure: " + structure);
  }

  auto pts_ptr = std::make_shared<RankedPointSet>(pts);
  auto g_ptr = std::make_shared<CategoryGraph>(g);
  if (out.needs_vertex)
    out.oracle = [pts_ptr, g_ptr](int a, int b, int v) {
      return scrc_oracle_rank(*pts_ptr, *g_ptr, a, b, v);
    };
  else
    out.oracle = [pts_ptr, g_ptr, weighted](int a, int b, int) {
      return hcc_oracle_rank(*pts_ptr, *g_ptr, a, b, weighted);
    };
  return out;
}

struct Mismatch {
  int a = 0, b = 0, v = -1;
  std::int64_t expected = 0, got = 0;
};

// Scans for a mismatch: exhaustive over all rank intervals (x vertices for
// SCRC) when the instance is small, otherwise `budget` seeded random queries.
std::optional<Mismatch> find_mismatch(const BuiltStructure& s, int n, int vertex_count,
                                      std::int64_t budget, std::uint64_t seed) {
  if (n <= 64 && (!s.needs_vertex || vertex_count <= 128)) {
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        if (s.needs_vertex) {
          for (int v = 0; v < vertex_count; ++v)
            if (s.query(a, b, v) != s.oracle(a, b, v))
              return Mismatch{a, b, v, s.oracle(a, b, v), s.query(a, b, v)};
        } else if (s.query(a, b, -1) != s.oracle(a, b, -1)) {
          return Mismatch{a, b, -1, s.oracle(a, b, -1), s.query(a, b, -1)};
        }
      }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, n);
  std::uniform_int_distribution<int> pickv(0, vertex_count - 1);
  for (std::int64_t q = 0; q < budget; ++q) {
    int a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    int v = s.needs_vertex ? pickv(rng) : -1;
    if (s.query(a, b, v) != s.oracle(a, b, v))
      return Mismatch{a, b, v, s.oracle(a, b, v), s.query(a, b, v)};
  }
  return std::nullopt;
}

int run_verify(const std::string& structure, const std::string& graph_file,
               const std::string& points_file, const std::string& index_file, bool weighted,
               std::int64_t budget, std::uint64_t seed) {
  CategoryGraph g = read_graph_file(graph_file);
  auto raw = read_points_file(points_file);
  RankedPointSet pts = make_ranked_point_set(raw);

  BuiltStructure s;
  if (!index_file.empty()) {
    if (structure != "hcc-dag")
      throw CLI::ValidationError("--index is only supported for hcc-dag");
    std::ifstream is(index_file, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + index_file);
    auto idx = std::make_shared<HccDagIndex>(HccDagIndex::load(is));
    s = instantiate(structure, pts, g, idx->weighted());
    s.query = [idx](int a, int b, int) { return idx->query_rank(a, b); };
  } else {
    s = instantiate(structure, pts, g, weighted);
  }

  auto bad = find_mismatch(s, pts.n(), g.vertex_count(), budget, seed);
  if (!bad) {
    std::cout << "PASS " << structure << " n=" << pts.n() << "\n";
    return 0;
  }

  // Minimize: keep halving the point set while some mismatch persists.
  std::vector<std::pair<std::int64_t, int>> current = raw;
  Mismatch cex = *bad;
  if (index_file.empty()) {
    while (current.size() > 1) {
      const std::size_t half = current.size() / 2;
      bool shrunk = false;
      for (int side = 0; side < 2 && !shrunk; ++side) {
        std::vector<std::pair<std::int64_t, int>> part(
            current.begin() + (side == 0 ? 0 : half),
            side == 0 ? current.begin() + half : current.end());
        if (part.empty()) continue;
        RankedPointSet sub = make_ranked_point_set(part);
        BuiltStructure ss = instantiate(structure, sub, g, weighted);
        auto m = find_mismatch(ss, sub.n(), g.vertex_count(), budget, seed);
        if (m) {
          current = std::move(part);
          cex = *m;
          shrunk = true;
        }
      }
      if (!shrunk) break;
    }
  }

  std::cerr << "FAIL " << structure << ": rank interval [" << cex.a << ", " << cex.b << "]";
  if (cex.v >= 0) std::cerr << " v_q=" << cex.v;
  std::cerr << " expected " << cex.expected << " got " << cex.got << "\n";
  std::cerr << "counterexample points (" << current.size() << "):\n";
  for (const auto& [x, c] : current) std::cerr << "  " << x << " " << c << "\n";
  return 1;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

struct BenchRow {
  std::string structure;
  std::int64_t n = 0;
  std::int64_t edges = 0;
  double build_ms = 0;
  double mean_ns = 0;
  double median_ns = 0;
  std::size_t stored = 0;
  std::size_t compressed = 0;
};

void print_bench_header(std::ostream& os) {
  os << "structure\tn\tedges\tbuild_ms\tquery_mean_ns\tquery_median_ns\tstored_entries"
     << "\tcompressed_size\n";
}

void print_bench_row(std::ostream& os, const BenchRow& r) {
  os << r.structure << '\t' << r.n << '\t' << r.edges << '\t' << r.build_ms << '\t' << r.mean_ns
     << '\t' << r.median_ns << '\t' << r.stored << '\t' << r.compressed << "\n";
}

BenchRow bench_structure(const std::string& structure, std::int64_t n, std::uint64_t seed,
                         std::int64_t queries) {
  const bool needs_dag = structure == "hcc-dag" || structure == "scrc-dag";
  const bool needs_path = structure == "hcc-path";
  CategoryGraph g = needs_dag ? gen_dag(static_cast<int>(n), seed)
                    : needs_path ? gen_path(static_cast<int>(n), seed)
                                 : gen_tree(static_cast<int>(n), seed);
  RankedPointSet pts =
      make_ranked_point_set(gen_points(static_cast<int>(n), g.vertex_count(), seed));

  BenchRow row;
  row.structure = structure;
  row.n = n;
  row.edges = static_cast<std::int64_t>(g.edges().size());

  auto t0 = Clock::now();
  BuiltStructure s = instantiate(structure, pts, g, false);
  row.build_ms = ms_since(t0);
  row.stored = s.stored_entries;
  row.compressed = s.compressed_size;

  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<int> pick(1, static_cast<int>(n));
  std::uniform_int_distribution<int> pickv(0, g.vertex_count() - 1);
  auto one_query = [&]() {
    int a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    return s.query(a, b, s.needs_vertex ? pickv(rng) : -1);
  };
  volatile std::int64_t sink = 0;
  for (int w = 0; w < 100; ++w) sink = sink + one_query();
  std::vector<double> times(queries);
  for (auto& t : times) {
    auto q0 = Clock::now();
    sink = sink + one_query();
    t = std::chrono::duration<double, std::nano>(Clock::now() - q0).count();
  }
  (void)sink;
  double total = 0;
  for (double t : times) total += t;
  row.mean_ns = total / times.size();
  std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
  row.median_ns = times[times.size() / 2];
  return row;
}

// Serial vs OpenMP kernel rows (closure and the short-query table).
std::vector<BenchRow> bench_kernels(std::int64_t n, std::uint64_t seed) {
  CategoryGraph g = gen_dag(static_cast<int>(n), seed);
  RankedPointSet pts =
      make_ranked_point_set(gen_points(static_cast<int>(n), g.vertex_count(), seed));
  const int block = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(n)))));
  std::vector<std::int64_t> unit(g.vertex_count(), 1);

  std::vector<BenchRow> rows;
  auto push = [&](const std::string& name, double ms) {
    BenchRow r;
    r.structure = name;
    r.n = n;
    r.edges = static_cast<std::int64_t>(g.edges().size());
    r.build_ms = ms;
    rows.push_back(r);
  };

  auto t0 = Clock::now();
  TransitiveClosure tc_serial = transitive_closure_serial(g);
  push("closure-serial", ms_since(t0));
  t0 = Clock::now();
  TransitiveClosure tc_par = transitive_closure(g);
  push("closure-parallel", ms_since(t0));

  t0 = Clock::now();
  auto table_serial = hcc_short_table_serial(pts, tc_serial, unit, block);
  push("short-table-serial", ms_since(t0));
  t0 = Clock::now();
  auto table_par = hcc_short_table(pts, tc_par, unit, block);
  push("short-table-parallel", ms_since(t0));

  if (table_serial != table_par) throw std::runtime_error("kernel outputs diverged");
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hierarchical and sub-category colored range counting toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate instance files");
  std::string gen_kind, gen_out = "instance";
  std::int64_t gen_n = 16, gen_points_n = -1, gen_coord_range = -1, gen_max_weight = 1;
  std::uint64_t gen_seed = 1;
  int gen_legs = 0, gen_leglen = 0, gen_d = 8;
  bool gen_planted = false;
  gen->add_option("--kind", gen_kind, "tree|path|caterpillar|dag|ov")->required();
  gen->add_option("--n", gen_n, "vertex count (ov: vectors per side)");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--out", gen_out, "output prefix");
  gen->add_option("--points", gen_points_n, "point count (default n)");
  gen->add_option("--coord-range", gen_coord_range, "coordinate range [0, R]");
  gen->add_option("--max-weight", gen_max_weight, "vertex weights in [1, W]");
  gen->add_option("--legs", gen_legs, "caterpillar: central path length");
  gen->add_option("--leg-length", gen_leglen, "caterpillar: leg length");
  gen->add_option("--d", gen_d, "ov: vector dimension");
  gen->add_flag("--planted", gen_planted, "ov: force an orthogonal pair");

  // build
  auto* build = app.add_subcommand("build", "build a structure and report stats");
  std::string b_structure, b_graph, b_points, b_out;
  bool b_weighted = false;
  build->add_option("--structure", b_structure)->required();
  build->add_option("--graph", b_graph)->required();
  build->add_option("--points", b_points)->required();
  build->add_option("--out", b_out, "hcc-dag: persist index (HDAG1)");
  build->add_flag("--weighted", b_weighted);

  // query
  auto* query = app.add_subcommand("query", "answer queries from a file");
  std::string q_structure, q_graph, q_points, q_queries, q_index;
  bool q_weighted = false;
  query->add_option("--structure", q_structure)->required();
  query->add_option("--graph", q_graph)->required();
  query->add_option("--points", q_points)->required();
  query->add_option("--queries", q_queries)->required();
  query->add_option("--index", q_index, "hcc-dag: load index instead of building");
  query->add_flag("--weighted", q_weighted);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "emit a reduction's transformed instance");
  std::string r_op, r_graph, r_points, r_ov, r_out = "reduced";
  reduce->add_option("--op", r_op, "crc2hcc|scrcpath2disty|ov2dag")->required();
  reduce->add_option("--graph", r_graph);
  reduce->add_option("--points", r_points);
  reduce->add_option("--ov", r_ov);
  reduce->add_option("--out", r_out, "output prefix");

  // verify
  auto* verify = app.add_subcommand("verify", "check a structure against its oracle");
  std::string v_structure, v_graph, v_points, v_index;
  bool v_weighted = false;
  std::int64_t v_budget = 10000;
  std::uint64_t v_seed = 1;
  verify->add_option("--structure", v_structure)->required();
  verify->add_option("--graph", v_graph)->required();
  verify->add_option("--points", v_points)->required();
  verify->add_option("--index", v_index, "hcc-dag: verify a persisted index");
  verify->add_option("--budget", v_budget, "sampled queries when n > 64");
  verify->add_option("--seed", v_seed);
  verify->add_flag("--weighted", v_weighted);

  // bench
  auto* bench = app.add_subcommand("bench", "TSV timing report");
  std::string be_structures = "hcc-tree", be_sizes = "1024,16384", be_out;
  std::uint64_t be_seed = 1;
  std::int64_t be_queries = 10000;
  bool be_kernels = false;
  bench->add_option("--structures", be_structures, "comma-separated structure list");
  bench->add_option("--sizes", be_sizes, "comma-separated instance sizes");
  bench->add_option("--seed", be_seed);
  bench->add_option("--queries", be_queries);
  bench->add_option("--out", be_out, "write TSV here instead of stdout");
  bench->add_flag("--kernel-compare", be_kernels,
                  "also time serial vs OpenMP closure/table kernels");

  // ov
  auto* ov = app.add_subcommand("ov", "decide orthogonal vectors via the DAG reduction");
  std::string o_input, o_method = "hcc";
  ov->add_option("--input", o_input)->required();
  ov->add_option("--method", o_method, "hcc|scrc|brute");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      if (gen_kind == "ov") {
        write_ov_file(gen_out + ".ov", gen_ov(static_cast<int>(gen_n), gen_d, gen_seed,
                                              gen_planted));
        std::cout << "wrote " << gen_out << ".ov\n";
        return 0;
      }
      CategoryGraph g = [&]() {
        if (gen_kind == "tree") return gen_tree(static_cast<int>(gen_n), gen_seed, gen_max_weight);
        if (gen_kind == "path") return gen_path(static_cast<int>(gen_n), gen_seed, gen_max_weight);
        if (gen_kind == "dag") return gen_dag(static_cast<int>(gen_n), gen_seed, gen_max_weight);
        if (gen_kind == "caterpillar") {
          int legs = gen_legs > 0 ? gen_legs
                                  : std::max(2, static_cast<int>(std::sqrt(double(gen_n))));
          int leglen = gen_leglen > 0 ? gen_leglen
                                      : std::max(1, static_cast<int>(gen_n) / legs - 1);
          return gen_caterpillar(legs, leglen, gen_max_weight, gen_seed);
        }
        throw CLI::ValidationError("unknown kind: " + gen_kind);
      }();
      write_graph_file(gen_out + ".graph", g);
      std::int64_t m = gen_points_n >= 0 ? gen_points_n : gen_n;
      auto pts = gen_points(static_cast<int>(m), g.vertex_count(), gen_seed, gen_coord_range);
      write_points_file(gen_out + ".points", pts);
      std::cout << "wrote " << gen_out << ".graph and " << gen_out << ".points\n";
      return 0;
    }

    if (*build) {
      CategoryGraph g = read_graph_file(b_graph);
      RankedPointSet pts = make_ranked_point_set(read_points_file(b_points));
      auto t0 = Clock::now();
      if (b_structure == "hcc-dag" && !b_out.empty()) {
        HccDagIndex idx(pts, g, b_weighted);
        std::ofstream os(b_out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + b_out);
        idx.save(os);
        std::cout << "built hcc-dag n=" << pts.n() << " block=" << idx.block_size()
                  << " table=" << idx.table_entries() << " compressed=" << idx.compressed_size()
                  << " build_ms=" << ms_since(t0) << " -> " << b_out << "\n";
      } else {
        BuiltStructure s = instantiate(b_structure, pts, g, b_weighted);
        std::cout << "built " << b_structure << " n=" << pts.n()
                  << " stored=" << s.stored_entries << " build_ms=" << ms_since(t0) << "\n";
      }
      return 0;
    }

    if (*query) {
      CategoryGraph g = read_graph_file(q_graph);
      RankedPointSet pts = make_ranked_point_set(read_points_file(q_points));
      auto queries = read_queries_file(q_queries);
      std::function<std::int64_t(const QueryLine&)> answer;
      if (!q_index.empty()) {
        if (q_structure != "hcc-dag")
          throw CLI::ValidationError("--index is only supported for hcc-dag");
        std::ifstream is(q_index, std::ios::binary);
        if (!is) throw std::runtime_error("cannot open " + q_index);
        auto idx = std::make_shared<HccDagIndex>(HccDagIndex::load(is));
        answer = [idx](const QueryLine& q) { return idx->query(IntervalQuery(q.lo, q.hi)); };
      } else {
        BuiltStructure s = instantiate(q_structure, pts, g, q_weighted);
        auto pts_copy = std::make_shared<RankedPointSet>(pts);
        answer = [s, pts_copy](const QueryLine& q) {
          auto [a, b] = pts_copy->rank_interval(IntervalQuery(q.lo, q.hi));
          return s.query(a, b, q.v_q);
        };
      }
      for (const auto& q : queries) std::cout << answer(q) << "\n";
      return 0;
    }

    if (*reduce) {
      if (r_op == "ov2dag") {
        OvDag dag = build_ov_dag(read_ov_file(r_ov));
        write_graph_file(r_out + ".graph", dag.graph);
        std::vector<std::pair<std::int64_t, int>> pc(dag.points.n());
        for (int r = 1; r <= dag.points.n(); ++r)
          pc[r - 1] = {dag.points.coord_at_rank(r), dag.points.color_at_rank(r)};
        write_points_file(r_out + ".points", pc);
        std::cout << "wrote " << r_out << ".graph and " << r_out << ".points\n";
      } else if (r_op == "crc2hcc") {
        RankedPointSet pts = make_ranked_point_set(read_points_file(r_points));
        CrcToHcc red(pts);
        write_graph_file(r_out + ".t1.graph", red.tree1());
        write_graph_file(r_out + ".t2.graph", red.tree2());
        auto dump = [&](const RankedPointSet& p, const std::string& path) {
          std::vector<std::pair<std::int64_t, int>> pc(p.n());
          for (int r = 1; r <= p.n(); ++r) pc[r - 1] = {p.coord_at_rank(r), p.color_at_rank(r)};
          write_points_file(path, pc);
        };
        dump(red.points1(), r_out + ".t1.points");
        dump(red.points2(), r_out + ".t2.points");
        std::cout << "wrote " << r_out << ".t{1,2}.{graph,points}\n";
      } else if (r_op == "scrcpath2disty") {
        CategoryGraph g = read_graph_file(r_graph);
        RankedPointSet pts = make_ranked_point_set(read_points_file(r_points));
        auto mapped = scrc_path_to_distinct_y(pts, g);
        std::ofstream os(r_out + ".2d");
        if (!os) throw std::runtime_error("cannot write " + r_out + ".2d");
        for (const auto& p : mapped) os << p.x << ' ' << p.y << '\n';
        std::cout << "wrote " << r_out << ".2d\n";
      } else {
        throw CLI::ValidationError("unknown reduce op: " + r_op);
      }
      return 0;
    }

    if (*verify)
      return run_verify(v_structure, v_graph, v_points, v_index, v_weighted, v_budget, v_seed);

    if (*bench) {
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!be_out.empty()) {
        file.open(be_out);
        if (!file) throw std::runtime_error("cannot write " + be_out);
        os = &file;
      }
      print_bench_header(*os);
      std::stringstream ss(be_structures);
      std::string structure;
      std::vector<std::string> structures;
      while (std::getline(ss, structure, ','))
        if (!structure.empty()) structures.push_back(structure);
      for (const auto& st : structures)
        for (std::int64_t n : parse_int_list(be_sizes))
          print_bench_row(*os, bench_structure(st, n, be_seed, be_queries));
      if (be_kernels)
        for (std::int64_t n : parse_int_list(be_sizes))
          for (const auto& row : bench_kernels(n, be_seed)) print_bench_row(*os, row);
      return 0;
    }

    if (*ov) {
      OvInstance inst = read_ov_file(o_input);
      std::optional<std::pair<int, int>> pair;
      if (o_method == "brute") {
        pair = brute_ov_pair(inst);
      } else if (o_method == "hcc") {
        OvDecision d = decide_ov_hcc(inst);
        if (d.found)
          for (std::size_t i = 0; i < inst.a.size() && !pair; ++i)
            if ((inst.a[i] & inst.b[d.witness]) == 0)
              pair = {static_cast<int>(i), d.witness};
      } else if (o_method == "scrc") {
        OvDecision d = decide_ov_scrc(inst);
        if (d.found)
          for (std::size_t j = 0; j < inst.b.size() && !pair; ++j)
            if ((inst.a[d.witness] & inst.b[j]) == 0)
              pair = {d.witness, static_cast<int>(j)};
      } else {
        throw CLI::ValidationError("unknown method: " + o_method);
      }
      if (pair)
        std::cout << "ORTHOGONAL " << pair->first << " " << pair->second << "\n";
      else
        std::cout << "NONE\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
