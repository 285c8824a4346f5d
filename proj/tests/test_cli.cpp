#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catrange/io.hpp"
#include "catrange/ov.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const std::string kCli = CATRANGE_CLI_PATH;

struct RunResult {
  int exit_code = 0;
  std::string out;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path out_file = fs::temp_directory_path() / ("catrange_cli_out_" +
                                                   std::to_string(counter++) + ".txt");
  std::string cmd = kCli + " " + args + " > " + out_file.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream is(out_file);
  std::stringstream ss;
  ss << is.rdbuf();
  res.out = ss.str();
  fs::remove(out_file);
  return res;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("catrange_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen is deterministic per (kind, n, seed)") {
  TempDir tmp;
  CHECK(run("gen --kind tree --n 8 --seed 1 --out " + tmp.file("a")).exit_code == 0);
  CHECK(run("gen --kind tree --n 8 --seed 1 --out " + tmp.file("b")).exit_code == 0);
  CHECK(slurp(tmp.file("a.graph")) == slurp(tmp.file("b.graph")));
  CHECK(slurp(tmp.file("a.points")) == slurp(tmp.file("b.points")));
  CHECK(run("gen --kind tree --n 8 --seed 2 --out " + tmp.file("c")).exit_code == 0);
  CHECK(slurp(tmp.file("a.points")) != slurp(tmp.file("c.points")));
}

TEST_CASE("gen dag produces a parseable acyclic graph") {
  TempDir tmp;
  CHECK(run("gen --kind dag --n 100 --seed 4 --out " + tmp.file("d")).exit_code == 0);
  // read_graph_file re-runs the constructor, which rejects cycles.
  auto g = catrange::read_graph_file(tmp.file("d.graph"));
  CHECK(g.vertex_count() == 100);
  CHECK(g.kind() == catrange::GraphKind::dag);
  CHECK(g.edges().size() <= 300);
}

TEST_CASE("gen caterpillar verifies under both tree structures") {
  TempDir tmp;
  CHECK(run("gen --kind caterpillar --n 16 --seed 6 --out " + tmp.file("c")).exit_code == 0);
  auto g = catrange::read_graph_file(tmp.file("c.graph"));
  CHECK(g.kind() == catrange::GraphKind::caterpillar);
  CHECK(run("verify --structure hcc-tree --graph " + tmp.file("c.graph") + " --points " +
            tmp.file("c.points")).exit_code == 0);
  CHECK(run("gen --kind caterpillar --legs 5 --leg-length 2 --seed 6 --out " + tmp.file("c2"))
            .exit_code == 0);
  CHECK(catrange::read_graph_file(tmp.file("c2.graph")).vertex_count() == 15);
  CHECK(run("verify --structure scrc-tree --graph " + tmp.file("c2.graph") + " --points " +
            tmp.file("c2.points")).exit_code == 0);
}

TEST_CASE("gen ov writes 2 x eta vectors") {
  TempDir tmp;
  CHECK(run("gen --kind ov --n 16 --d 4 --seed 9 --out " + tmp.file("o")).exit_code == 0);
  auto inst = catrange::read_ov_file(tmp.file("o.ov"));
  CHECK(inst.a.size() == 16);
  CHECK(inst.b.size() == 16);
  CHECK(inst.dim == 4);
}

TEST_CASE("verify passes on well-formed instances") {
  TempDir tmp;
  {
    std::ofstream g(tmp.file("t1.graph"));
    g << "4 tree\n3 1\n1 0\n2 0\n";
    std::ofstream p(tmp.file("t1.points"));
    p << "1 3\n2 2\n";
  }
  CHECK(run("verify --structure hcc-tree --graph " + tmp.file("t1.graph") + " --points " +
            tmp.file("t1.points")).exit_code == 0);
  {
    std::ofstream g(tmp.file("p1.graph"));
    g << "3 path\n0 1\n1 2\n";
    std::ofstream p(tmp.file("p1.points"));
    p << "1 0\n2 2\n3 1\n";
  }
  CHECK(run("verify --structure scrc-dag --graph " + tmp.file("p1.graph") + " --points " +
            tmp.file("p1.points")).exit_code == 0);
  CHECK(run("verify --structure hcc-path --graph " + tmp.file("p1.graph") + " --points " +
            tmp.file("p1.points")).exit_code == 0);
}

TEST_CASE("hcc-dag index round trips through a file and detects corruption") {
  TempDir tmp;
  REQUIRE(run("gen --kind dag --n 60 --seed 7 --out " + tmp.file("g")).exit_code == 0);
  REQUIRE(run("build --structure hcc-dag --graph " + tmp.file("g.graph") + " --points " +
              tmp.file("g.points") + " --out " + tmp.file("g.hdag")).exit_code == 0);

  {
    std::ofstream q(tmp.file("queries.txt"));
    q << "0 50\n10 200\n-5 1000\n";
  }
  RunResult direct = run("query --structure hcc-dag --graph " + tmp.file("g.graph") +
                         " --points " + tmp.file("g.points") + " --queries " +
                         tmp.file("queries.txt"));
  RunResult via_index = run("query --structure hcc-dag --graph " + tmp.file("g.graph") +
                            " --points " + tmp.file("g.points") + " --queries " +
                            tmp.file("queries.txt") + " --index " + tmp.file("g.hdag"));
  CHECK(direct.exit_code == 0);
  CHECK(via_index.exit_code == 0);
  CHECK(direct.out == via_index.out);

  CHECK(run("verify --structure hcc-dag --graph " + tmp.file("g.graph") + " --points " +
            tmp.file("g.points") + " --index " + tmp.file("g.hdag")).exit_code == 0);

  // Flip one byte inside the answer table; verification must fail loudly.
  // Layout: magic(5) + n/block/weighted (24) + coords (8 + 8n) + table size (8).
  {
    const std::streamoff table_byte = 5 + 24 + 8 + 8 * 60 + 8 + 16;
    std::fstream f(tmp.file("g.hdag"), std::ios::in | std::ios::out | std::ios::binary);
    f.seekg(table_byte);
    char b = 0;
    f.read(&b, 1);
    b = static_cast<char>(b ^ 0x5a);
    f.seekp(table_byte);
    f.write(&b, 1);
  }
  RunResult bad = run("verify --structure hcc-dag --graph " + tmp.file("g.graph") +
                      " --points " + tmp.file("g.points") + " --index " + tmp.file("g.hdag"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify reports PASS with the instance size") {
  TempDir tmp;
  REQUIRE(run("gen --kind tree --n 50 --seed 3 --out " + tmp.file("t")).exit_code == 0);
  RunResult r = run("verify --structure scrc-tree --graph " + tmp.file("t.graph") +
                    " --points " + tmp.file("t.points"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("reduce emits parseable instances") {
  TempDir tmp;
  REQUIRE(run("gen --kind ov --n 6 --d 3 --seed 2 --out " + tmp.file("o")).exit_code == 0);
  CHECK(run("reduce --op ov2dag --ov " + tmp.file("o.ov") + " --out " + tmp.file("red"))
            .exit_code == 0);
  auto g = catrange::read_graph_file(tmp.file("red.graph"));
  CHECK(g.vertex_count() == 6 + 6 + 3);
  CHECK(catrange::read_points_file(tmp.file("red.points")).size() == 6);

  REQUIRE(run("gen --kind path --n 5 --seed 2 --out " + tmp.file("p")).exit_code == 0);
  CHECK(run("reduce --op scrcpath2disty --graph " + tmp.file("p.graph") + " --points " +
            tmp.file("p.points") + " --out " + tmp.file("sd")).exit_code == 0);
  CHECK(fs::exists(tmp.file("sd.2d")));

  CHECK(run("reduce --op crc2hcc --points " + tmp.file("p.points") + " --out " + tmp.file("ch"))
            .exit_code == 0);
  auto t1 = catrange::read_graph_file(tmp.file("ch.t1.graph"));
  auto t2 = catrange::read_graph_file(tmp.file("ch.t2.graph"));
  CHECK(t1.kind() == catrange::GraphKind::tree);
  CHECK(t2.vertex_count() < t1.vertex_count());
}

TEST_CASE("bench emits one TSV row per structure and size") {
  TempDir tmp;
  RunResult r = run("bench --structures hcc-tree,scrc-dag --sizes 64,128 --queries 50 --out " +
                    tmp.file("bench.tsv"));
  CHECK(r.exit_code == 0);
  std::istringstream is(slurp(tmp.file("bench.tsv")));
  std::string line;
  int rows = 0;
  REQUIRE(std::getline(is, line));
  CHECK(line.rfind("structure\t", 0) == 0);
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);

  RunResult again = run("bench --structures hcc-tree --sizes 64 --queries 50");
  CHECK(again.exit_code == 0);
  CHECK(again.out.find("hcc-tree\t64") != std::string::npos);
}

TEST_CASE("bench reruns keep instance columns and bound the compressed size") {
  auto columns = [](const std::string& tsv) {
    std::istringstream is(tsv);
    std::string line;
    std::vector<std::array<std::string, 3>> rows;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::array<std::string, 3> r;
      ls >> r[0] >> r[1] >> r[2];
      rows.push_back(r);
    }
    return rows;
  };
  RunResult r1 = run("bench --structures hcc-dag --sizes 64,256 --queries 50 --seed 5");
  RunResult r2 = run("bench --structures hcc-dag --sizes 64,256 --queries 50 --seed 5");
  REQUIRE(r1.exit_code == 0);
  CHECK(columns(r1.out) == columns(r2.out));  // structure, n, edges stable per seed

  // Last two TSV fields are stored_entries and compressed_size.
  std::istringstream is(r1.out);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string structure;
    double n = 0, skip = 0, compressed = 0;
    ls >> structure >> n >> skip >> skip >> skip >> skip >> skip >> compressed;
    CHECK(compressed <= 4.0 * std::pow(n, 1.5) + 8.0 * n + 64);
  }
}

TEST_CASE("kernel comparison rows appear and agree") {
  RunResult r = run("bench --structures hcc-dag --sizes 128 --queries 20 --kernel-compare");
  CHECK(r.exit_code == 0);  // the CLI cross-checks serial vs parallel outputs itself
  CHECK(r.out.find("closure-serial\t128") != std::string::npos);
  CHECK(r.out.find("closure-parallel\t128") != std::string::npos);
  CHECK(r.out.find("short-table-serial\t128") != std::string::npos);
  CHECK(r.out.find("short-table-parallel\t128") != std::string::npos);
}

TEST_CASE("ov subcommand agrees with brute force") {
  TempDir tmp;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    REQUIRE(run("gen --kind ov --n 12 --d 5 --seed " + std::to_string(seed) + " --out " +
                tmp.file("o")).exit_code == 0);
    RunResult brute = run("ov --input " + tmp.file("o.ov") + " --method brute");
    for (std::string method : {"hcc", "scrc"}) {
      RunResult r = run("ov --input " + tmp.file("o.ov") + " --method " + method);
      CHECK(r.exit_code == 0);
      CHECK((r.out.rfind("ORTHOGONAL", 0) == 0) == (brute.out.rfind("ORTHOGONAL", 0) == 0));
    }
    if (brute.out.rfind("ORTHOGONAL", 0) == 0) {
      // The reported pair must actually be orthogonal.
      auto inst = catrange::read_ov_file(tmp.file("o.ov"));
      std::istringstream is(brute.out);
      std::string word;
      int i = 0, j = 0;
      is >> word >> i >> j;
      CHECK((inst.a[i] & inst.b[j]) == 0);
    }
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("gen --kind nosuchkind --n 4").exit_code == 2);
  CHECK(run("verify --structure hcc-tree --graph /nonexistent --points /nonexistent")
            .exit_code == 2);
  CHECK(run("query --structure scrc-tree --graph /nonexistent --points x --queries y")
            .exit_code == 2);
}
