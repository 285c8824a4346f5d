#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "catrange/bitrow.hpp"
#include "catrange/category_graph.hpp"
#include "catrange/crc1d.hpp"
#include "catrange/points.hpp"

namespace catrange {

// Transitive closure as packed ancestor rows: row v holds reachable_up(v).
// Rows are computed in reverse topological order with word-parallel unions;
// the OpenMP variant runs each topological layer's rows concurrently and is
// bit-identical to the serial one.
struct TransitiveClosure {
  std::vector<BitRow> rows;
};

TransitiveClosure transitive_closure_serial(const CategoryGraph& g);
TransitiveClosure transitive_closure(const CategoryGraph& g);

// Short-query table: entry (i, len) holds the HCC answer for the rank
// interval [i, i+len-1], len = 1..B (clipped at n), computed by an
// incremental row-union sweep per start. Flat layout, starts outermost.
std::vector<std::int64_t> hcc_short_table_serial(const RankedPointSet& pts,
                                                 const TransitiveClosure& tc,
                                                 const std::vector<std::int64_t>& vertex_weights,
                                                 int block);
std::vector<std::int64_t> hcc_short_table(const RankedPointSet& pts, const TransitiveClosure& tc,
                                          const std::vector<std::int64_t>& vertex_weights,
                                          int block);

// HCC on an arbitrary sparse DAG: answers for intervals of length <= B come
// from the explicit short-query table; longer intervals query a 1D CRC
// structure over the block-compressed flat representation (per block of
// ceil(B/2) consecutive ranks, only the extreme positions of every ancestor
// color survive, which is lossless exactly for queries longer than B).
class HccDagIndex {
 public:
  HccDagIndex() = default;
  HccDagIndex(const RankedPointSet& pts, const CategoryGraph& g, bool weighted = false);

  std::int64_t query(const IntervalQuery& q) const;
  std::int64_t query_rank(int i, int j) const;
  // Compressed structure only, any interval; correct only for j-i+1 > B.
  std::int64_t query_compressed_rank(int i, int j) const;

  int n() const { return n_; }
  int block_size() const { return block_; }
  bool weighted() const { return weighted_; }
  std::size_t table_entries() const { return table_.size(); }
  std::size_t compressed_size() const { return flat_.size(); }
  std::size_t stored_entries() const { return table_.size() + flat_.size(); }

  void save(std::ostream& os) const;
  static HccDagIndex load(std::istream& is);

 private:
  void build_compressed_index();

  int n_ = 0;
  int block_ = 0;
  bool weighted_ = false;
  std::vector<std::int64_t> coords_;
  std::vector<std::int64_t> table_;
  std::vector<std::size_t> table_offset_;          // per start i (0-based)
  std::vector<std::pair<std::int64_t, int>> flat_; // compressed (rank, ancestor)
  std::vector<std::int64_t> vertex_weights_;
  Crc1dIndex crc_;
};

// Trivial SCRC structure for DAGs: one 1D CRC index per vertex over the
// points whose color is a sub-category of that vertex.
class ScrcDagTrivial {
 public:
  ScrcDagTrivial() = default;
  ScrcDagTrivial(const RankedPointSet& pts, const CategoryGraph& g);

  std::int64_t query(const IntervalQuery& q, int v_q) const;
  std::int64_t query_rank(int a, int b, int v_q) const;
  std::size_t stored_entries() const { return stored_; }

 private:
  std::vector<std::int64_t> coords_;
  std::vector<Crc1dIndex> per_vertex_;
  std::size_t stored_ = 0;
};

}  // namespace catrange
