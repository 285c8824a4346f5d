#include "catrange/hcc_dag.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "catrange/parallel.hpp"

namespace catrange {

TransitiveClosure transitive_closure_serial(const CategoryGraph& g) {
  const int n = g.vertex_count();
  TransitiveClosure tc;
  tc.rows.assign(n, BitRow(n));
  for (int v : g.topo_sinks_first()) {
    tc.rows[v].set(v);
    for (int p : g.parents_of(v)) tc.rows[v] |= tc.rows[p];
  }
  return tc;
}

TransitiveClosure transitive_closure(const CategoryGraph& g) {
  const int n = g.vertex_count();
  TransitiveClosure tc;
  tc.rows.assign(n, BitRow(n));

  // Rows within one topological layer have all their dependencies in earlier
  // layers, so a layer can run in parallel and stays bit-identical to the
  // serial sweep.
  std::vector<int> layer(n, 0);
  int max_layer = 0;
  for (int v : g.topo_sinks_first()) {
    for (int p : g.parents_of(v)) layer[v] = std::max(layer[v], layer[p] + 1);
    max_layer = std::max(max_layer, layer[v]);
  }
  std::vector<std::vector<int>> by_layer(max_layer + 1);
  for (int v : g.topo_sinks_first()) by_layer[layer[v]].push_back(v);

  const int threads = thread_cap();
  for (const auto& verts : by_layer) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
    for (std::size_t k = 0; k < verts.size(); ++k) {
      int v = verts[k];
      tc.rows[v].set(v);
      for (int p : g.parents_of(v)) tc.rows[v] |= tc.rows[p];
    }
  }
  (void)threads;
  return tc;
}

namespace {

std::size_t short_table_size(int n, int block) {
  std::size_t total = 0;
  for (int i = 1; i <= n; ++i) total += static_cast<std::size_t>(std::min(block, n - i + 1));
  return total;
}

void short_table_start(const RankedPointSet& pts, const TransitiveClosure& tc,
                       const std::vector<std::int64_t>& vertex_weights, int block, int start,
                       BitRow& acc, std::int64_t* out) {
  const int n = pts.n();
  acc.clear();
  std::int64_t run = 0;
  const int len_max = std::min(block, n - start + 1);
  for (int len = 1; len <= len_max; ++len) {
    int color = pts.color_at_rank(start + len - 1);
    acc.merge_new(tc.rows[color], [&](int v) { run += vertex_weights[v]; });
    out[len - 1] = run;
  }
}

}  // namespace

std::vector<std::int64_t> hcc_short_table_serial(const RankedPointSet& pts,
                                                 const TransitiveClosure& tc,
                                                 const std::vector<std::int64_t>& vertex_weights,
                                                 int block) {
  const int n = pts.n();
  std::vector<std::int64_t> table(short_table_size(n, block));
  BitRow acc(static_cast<int>(tc.rows.size()));
  std::size_t off = 0;
  for (int i = 1; i <= n; ++i) {
    short_table_start(pts, tc, vertex_weights, block, i, acc, table.data() + off);
    off += static_cast<std::size_t>(std::min(block, n - i + 1));
  }
  return table;
}

std::vector<std::int64_t> hcc_short_table(const RankedPointSet& pts, const TransitiveClosure& tc,
                                          const std::vector<std::int64_t>& vertex_weights,
                                          int block) {
  const int n = pts.n();
  std::vector<std::int64_t> table(short_table_size(n, block));
  std::vector<std::size_t> offsets(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    offsets[i] = offsets[i - 1] + static_cast<std::size_t>(std::min(block, n - i + 1));

  const int threads = thread_cap();
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
  {
    BitRow acc(static_cast<int>(tc.rows.size()));
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
    for (int i = 1; i <= n; ++i)
      short_table_start(pts, tc, vertex_weights, block, i, acc, table.data() + offsets[i - 1]);
  }
  (void)threads;
  return table;
}

HccDagIndex::HccDagIndex(const RankedPointSet& pts, const CategoryGraph& g, bool weighted)
    : n_(pts.n()), weighted_(weighted), coords_(pts.coords()) {
  for (int r = 1; r <= n_; ++r) g.check(pts.color_at_rank(r));
  block_ = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_)))));
  vertex_weights_.assign(g.vertex_count(), 1);
  if (weighted_) vertex_weights_ = g.weights();

  TransitiveClosure tc = transitive_closure(g);

  table_ = hcc_short_table(pts, tc, vertex_weights_, block_);
  table_offset_.assign(n_ + 1, 0);
  for (int i = 1; i <= n_; ++i)
    table_offset_[i] =
        table_offset_[i - 1] + static_cast<std::size_t>(std::min(block_, n_ - i + 1));

  // Block-compressed flat representation: per block of ceil(B/2) consecutive
  // ranks, keep only the smallest and largest position of every ancestor
  // color present in the block.
  const int block_len = (block_ + 1) / 2;
  const int vcount = g.vertex_count();
  std::vector<int> stamp(vcount, -1);
  std::vector<std::pair<std::int64_t, std::int64_t>> extremes(vcount);
  std::vector<int> touched;
  for (int block_start = 1; block_start <= n_; block_start += block_len) {
    const int block_id = (block_start - 1) / block_len;
    const int block_end = std::min(n_, block_start + block_len - 1);
    touched.clear();
    for (int r = block_start; r <= block_end; ++r) {
      tc.rows[pts.color_at_rank(r)].for_each([&](int v) {
        if (stamp[v] != block_id) {
          stamp[v] = block_id;
          extremes[v] = {r, r};
          touched.push_back(v);
        } else {
          extremes[v].second = r;
        }
      });
    }
    std::sort(touched.begin(), touched.end());
    for (int v : touched) {
      flat_.emplace_back(extremes[v].first, v);
      if (extremes[v].second != extremes[v].first) flat_.emplace_back(extremes[v].second, v);
    }
  }
  build_compressed_index();
}

void HccDagIndex::build_compressed_index() {
  crc_ = Crc1dIndex(flat_, weighted_ ? &vertex_weights_ : nullptr);
}

std::int64_t HccDagIndex::query_rank(int i, int j) const {
  i = std::max(i, 1);
  j = std::min(j, n_);
  if (i > j) return 0;
  const int len = j - i + 1;
  if (len <= block_) return table_[table_offset_[i - 1] + (len - 1)];
  return crc_.query(i, j);
}

std::int64_t HccDagIndex::query_compressed_rank(int i, int j) const {
  if (i > j) return 0;
  return crc_.query(i, j);
}

std::int64_t HccDagIndex::query(const IntervalQuery& q) const {
  auto [a, b] = rank_interval_of(coords_, q);
  return query_rank(a, b);
}

namespace {

void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char buf[8];
  for (int k = 0; k < 8; ++k) buf[k] = static_cast<unsigned char>((v >> (8 * k)) & 0xff);
  os.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t get_u64(std::istream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  if (!is) throw std::runtime_error("truncated HDAG1 stream");
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(buf[k]) << (8 * k);
  return v;
}

void put_i64_vec(std::ostream& os, const std::vector<std::int64_t>& v) {
  put_u64(os, v.size());
  for (std::int64_t x : v) put_u64(os, static_cast<std::uint64_t>(x));
}

std::vector<std::int64_t> get_i64_vec(std::istream& is) {
  std::vector<std::int64_t> v(get_u64(is));
  for (auto& x : v) x = static_cast<std::int64_t>(get_u64(is));
  return v;
}

constexpr char kMagic[5] = {'H', 'D', 'A', 'G', '1'};

}  // namespace

void HccDagIndex::save(std::ostream& os) const {
  os.write(kMagic, 5);
  put_u64(os, static_cast<std::uint64_t>(n_));
  put_u64(os, static_cast<std::uint64_t>(block_));
  put_u64(os, weighted_ ? 1 : 0);
  put_i64_vec(os, coords_);
  put_i64_vec(os, table_);
  put_u64(os, flat_.size());
  for (const auto& [pos, color] : flat_) {
    put_u64(os, static_cast<std::uint64_t>(pos));
    put_u64(os, static_cast<std::uint64_t>(color));
  }
  put_i64_vec(os, vertex_weights_);
}

HccDagIndex HccDagIndex::load(std::istream& is) {
  char magic[5];
  is.read(magic, 5);
  if (!is || !std::equal(magic, magic + 5, kMagic))
    throw std::runtime_error("not an HDAG1 index file");
  HccDagIndex idx;
  idx.n_ = static_cast<int>(get_u64(is));
  idx.block_ = static_cast<int>(get_u64(is));
  idx.weighted_ = get_u64(is) != 0;
  idx.coords_ = get_i64_vec(is);
  idx.table_ = get_i64_vec(is);
  idx.flat_.resize(get_u64(is));
  for (auto& [pos, color] : idx.flat_) {
    pos = static_cast<std::int64_t>(get_u64(is));
    color = static_cast<int>(get_u64(is));
  }
  idx.vertex_weights_ = get_i64_vec(is);

  if (idx.n_ < 0 || idx.block_ < 1 || idx.coords_.size() != static_cast<std::size_t>(idx.n_))
    throw std::runtime_error("corrupt HDAG1 header");
  idx.table_offset_.assign(idx.n_ + 1, 0);
  std::size_t expect = 0;
  for (int i = 1; i <= idx.n_; ++i) {
    idx.table_offset_[i] = idx.table_offset_[i - 1] +
                           static_cast<std::size_t>(std::min(idx.block_, idx.n_ - i + 1));
    expect = idx.table_offset_[i];
  }
  if (idx.table_.size() != expect) throw std::runtime_error("corrupt HDAG1 table");
  for (const auto& [pos, color] : idx.flat_)
    if (pos < 1 || pos > idx.n_ || color < 0 ||
        (idx.weighted_ && color >= static_cast<int>(idx.vertex_weights_.size())))
      throw std::runtime_error("corrupt HDAG1 flat representation");
  idx.build_compressed_index();
  return idx;
}

ScrcDagTrivial::ScrcDagTrivial(const RankedPointSet& pts, const CategoryGraph& g)
    : coords_(pts.coords()) {
  per_vertex_.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    BitRow sub = reachable_down_row(g, v);
    std::vector<std::pair<std::int64_t, int>> pc;
    for (int r = 1; r <= pts.n(); ++r)
      if (sub.test(g.check(pts.color_at_rank(r)))) pc.emplace_back(r, pts.color_at_rank(r));
    stored_ += pc.size();
    per_vertex_[v] = Crc1dIndex(std::move(pc));
  }
}

std::int64_t ScrcDagTrivial::query_rank(int a, int b, int v_q) const {
  if (v_q < 0 || v_q >= static_cast<int>(per_vertex_.size()))
    throw std::out_of_range("invalid vertex id");
  if (a > b) return 0;
  return per_vertex_[v_q].query(a, b);
}

std::int64_t ScrcDagTrivial::query(const IntervalQuery& q, int v_q) const {
  auto [a, b] = rank_interval_of(coords_, q);
  return query_rank(a, b, v_q);
}

}  // namespace catrange
