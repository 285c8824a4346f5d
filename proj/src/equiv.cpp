#include "catrange/equiv.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace catrange {

namespace {

int ceil_log2(std::uint64_t m) {
  if (m <= 1) return 0;
  return std::bit_width(m - 1);
}

}  // namespace

std::int64_t WeightSplit::reconstruct(std::size_t point_idx) const {
  std::int64_t w = 0;
  for (int k = 0; k < layer_count; ++k) w += layers[k][point_idx] << (k * shift);
  return w;
}

WeightSplit split_weights(std::span<const WeightedPoint2D> points, double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must be in (0, 1]");
  std::int64_t w_max = 0;
  for (const auto& p : points) {
    if (p.w < 0) throw std::invalid_argument("split_weights requires nonnegative weights");
    w_max = std::max(w_max, p.w);
  }

  WeightSplit out;
  out.eps = eps;
  // Weight domain: n^O(1) (two log-n-bit words) or the actual maximum,
  // whichever needs more bits, so every input weight reconstructs exactly.
  const int domain_bits =
      std::max(2 * ceil_log2(std::max<std::uint64_t>(points.size(), 2)),
               static_cast<int>(std::bit_width(static_cast<std::uint64_t>(w_max))));
  out.layer_count = static_cast<int>(std::ceil(1.0 / eps - 1e-9));
  out.shift = std::max(1, static_cast<int>(std::ceil(eps * domain_bits - 1e-9)));
  while (out.layer_count * out.shift < domain_bits) ++out.shift;
  out.x = std::int64_t(1) << out.shift;

  out.layers.assign(out.layer_count, std::vector<std::int64_t>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (int k = 0; k < out.layer_count; ++k)
      out.layers[k][i] = (points[i].w >> (k * out.shift)) & (out.x - 1);
  return out;
}

LeafFactory dominance2_leaf_factory() {
  class Leaf : public DominanceEngine {
   public:
    explicit Leaf(std::vector<WeightedPoint2D> pts) : idx_(std::move(pts)) {}
    std::int64_t query(std::int64_t qx, std::int64_t qy) const override {
      return idx_.query(qx, qy);
    }

   private:
    Dominance2Index idx_;
  };
  return [](std::vector<WeightedPoint2D> pts) -> std::unique_ptr<DominanceEngine> {
    return std::make_unique<Leaf>(std::move(pts));
  };
}

struct GridIndex::Node {
  int points = 0;
  std::unique_ptr<DominanceEngine> engine;  // set iff leaf
  std::vector<std::int64_t> col_bounds;     // max x per column, ascending
  std::vector<std::int64_t> row_bounds;     // max y per row, ascending
  std::vector<std::int64_t> table;          // (C+1) x (R+1) inclusive prefix sums
  std::vector<std::unique_ptr<Node>> col_children;
  std::vector<std::unique_ptr<Node>> row_children;

  std::int64_t table_at(std::size_t i, std::size_t j) const {
    return table[i * (row_bounds.size() + 1) + j];
  }
};

GridIndex::GridIndex(std::vector<WeightedPoint2D> points, int depth, const LeafFactory& factory) {
  root_ = build(std::move(points), depth, factory);
}

GridIndex::GridIndex(GridIndex&&) noexcept = default;
GridIndex& GridIndex::operator=(GridIndex&&) noexcept = default;
GridIndex::~GridIndex() = default;

std::unique_ptr<GridIndex::Node> GridIndex::build(std::vector<WeightedPoint2D> points, int depth,
                                                  const LeafFactory& factory) {
  auto node = std::make_unique<Node>();
  node->points = static_cast<int>(points.size());
  if (depth == 0 || points.empty()) {
    node->engine = factory(std::move(points));
    return node;
  }

  const int m = static_cast<int>(points.size());
  const int width = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));
  const int cols = (m + width - 1) / width;

  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.x < b.x; });
  std::vector<int> col_of(m);
  for (int i = 0; i < m; ++i) col_of[i] = i / width;

  std::vector<int> by_y(m);
  for (int i = 0; i < m; ++i) by_y[i] = i;
  std::stable_sort(by_y.begin(), by_y.end(),
                   [&](int a, int b) { return points[a].y < points[b].y; });
  std::vector<int> row_of(m);
  for (int i = 0; i < m; ++i) row_of[by_y[i]] = i / width;

  node->col_bounds.resize(cols);
  node->row_bounds.resize((m + width - 1) / width);
  for (int i = 0; i < m; ++i) node->col_bounds[col_of[i]] = points[i].x;
  for (int i = 0; i < m; ++i) node->row_bounds[i / width] = points[by_y[i]].y;

  const std::size_t r_count = node->row_bounds.size();
  std::vector<std::int64_t> cell(cols * r_count, 0);
  for (int i = 0; i < m; ++i) cell[col_of[i] * r_count + row_of[i]] += points[i].w;
  node->table.assign((cols + 1) * (r_count + 1), 0);
  for (int i = 1; i <= cols; ++i)
    for (std::size_t j = 1; j <= r_count; ++j)
      node->table[i * (r_count + 1) + j] = cell[(i - 1) * r_count + (j - 1)] +
                                           node->table[(i - 1) * (r_count + 1) + j] +
                                           node->table[i * (r_count + 1) + (j - 1)] -
                                           node->table[(i - 1) * (r_count + 1) + (j - 1)];

  for (int c = 0; c < cols; ++c) {
    std::vector<WeightedPoint2D> part(points.begin() + c * width,
                                      points.begin() + std::min((c + 1) * width, m));
    node->col_children.push_back(build(std::move(part), depth - 1, factory));
  }
  for (std::size_t rj = 0; rj < r_count; ++rj) {
    std::vector<WeightedPoint2D> part;
    for (int i = static_cast<int>(rj) * width;
         i < std::min((static_cast<int>(rj) + 1) * width, m); ++i)
      part.push_back(points[by_y[i]]);
    node->row_children.push_back(build(std::move(part), depth - 1, factory));
  }
  return node;
}

std::int64_t GridIndex::query_node(const Node* nd, std::int64_t qx, std::int64_t qy) {
  std::int64_t sum = 0;
  while (true) {
    if (nd->engine) return sum + nd->engine->query(qx, qy);
    const auto& cb = nd->col_bounds;
    const auto& rb = nd->row_bounds;
    std::size_t i = std::lower_bound(cb.begin(), cb.end(), qx) - cb.begin();
    if (i == cb.size()) i = cb.size() - 1;
    std::size_t j = std::lower_bound(rb.begin(), rb.end(), qy) - rb.begin();
    if (j == rb.size()) j = rb.size() - 1;

    sum += nd->table_at(i, j);
    if (i > 0) sum += query_node(nd->row_children[j].get(), cb[i - 1], qy);
    // Iterate into the column that owns the query cell.
    nd = nd->col_children[i].get();
  }
}

std::int64_t GridIndex::query(std::int64_t qx, std::int64_t qy) const {
  return query_node(root_.get(), qx, qy);
}

std::vector<std::pair<int, int>> GridIndex::children_per_node() const {
  std::vector<std::pair<int, int>> out;
  std::vector<std::pair<const Node*, int>> stack{{root_.get(), root_ ? root_->points : 0}};
  while (!stack.empty()) {
    auto [nd, size] = stack.back();
    stack.pop_back();
    if (nd->engine) continue;
    out.emplace_back(size, static_cast<int>(nd->col_children.size() + nd->row_children.size()));
    for (const auto& c : nd->col_children) stack.emplace_back(c.get(), c->points);
    for (const auto& r : nd->row_children) stack.emplace_back(r.get(), r->points);
  }
  return out;
}

SumMaxPair dominance_to_summax(std::span<const WeightedPoint2D> points) {
  SumMaxPair pair;
  int idx = 0;
  for (const auto& p : points) {
    if (p.w < 0) throw std::invalid_argument("dominance_to_summax requires nonnegative weights");
    if (p.w == 0) continue;  // contributes nothing to any dominance sum
    const int i = idx++;
    pair.a.points.push_back({-p.x, i + 1, p.w});
    pair.a.points.push_back({p.y, i + 1, p.w});
    pair.b.points.push_back({-p.x, 2 * i + 1, p.w});
    pair.b.points.push_back({p.y, 2 * i + 2, p.w});
  }
  return pair;
}

std::int64_t summax_pair_oracle_query(const SumMaxPair& pair, std::int64_t qx, std::int64_t qy) {
  if (-qx > qy) return 0;
  IntervalQuery q(-qx, qy);
  return summax_oracle(pair.b, q) - summax_oracle(pair.a, q);
}

CaterpillarInstance::CaterpillarInstance(const SumMaxInstance& inst) {
  if (inst.points.empty()) return;
  int max_color = 0;
  std::int64_t max_w = 0;
  for (const auto& e : inst.points) {
    if (e.weight <= 0)
      throw std::invalid_argument("caterpillar reduction requires positive weights");
    if (e.color < 1) throw std::invalid_argument("caterpillar color ids must be >= 1");
    max_color = std::max(max_color, e.color);
    max_w = std::max<std::int64_t>(max_w, e.weight);
  }
  central_len_ = max_color;
  leg_len_ = max_w;

  // Central vertices 0..L-1 rooted at 0; leg i hangs off central vertex i-1.
  const std::int64_t L = central_len_, W = leg_len_;
  if (L * (W + 1) > (std::int64_t(1) << 26))
    throw std::invalid_argument("caterpillar instance too large; split the weights first");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(L * (W + 1)) - 1);
  for (int k = 1; k < L; ++k) edges.emplace_back(k, k - 1);
  auto leg_id = [&](int color_id, std::int64_t w) {
    return static_cast<int>(L + (color_id - 1) * W + (w - 1));
  };
  for (int i = 1; i <= L; ++i) {
    edges.emplace_back(leg_id(i, 1), i - 1);
    for (std::int64_t j = 2; j <= W; ++j) edges.emplace_back(leg_id(i, j), leg_id(i, j - 1));
  }
  graph_ = std::make_unique<CategoryGraph>(static_cast<int>(L * (W + 1)), std::move(edges),
                                           GraphKind::caterpillar);

  std::vector<std::pair<std::int64_t, int>> colored(inst.points.size());
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    colored[i] = {inst.points[i].pos, leg_id(inst.points[i].color, inst.points[i].weight)};
  hcc_points_ = make_ranked_point_set(colored);
  hcc_ = HccTreeIndex(hcc_points_, *graph_);
  coords_ = hcc_points_.coords();

  // Companion structure: the central-path contribution of an interval is the
  // largest 1-based color id present in it.
  std::vector<std::int64_t> ids_by_rank(hcc_points_.n());
  std::vector<std::pair<std::int64_t, int>> pos_id(inst.points.size());
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    pos_id[i] = {inst.points[i].pos, inst.points[i].color};
  std::stable_sort(pos_id.begin(), pos_id.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < pos_id.size(); ++i) ids_by_rank[i] = pos_id[i].second;
  color_id_max_ = RangeMaxIndex(std::move(ids_by_rank));
}

int CaterpillarInstance::leg_vertex(int color_id, std::int64_t w) const {
  if (color_id < 1 || color_id > central_len_ || w < 1 || w > leg_len_)
    throw std::out_of_range("no caterpillar vertex for that (color, weight)");
  return static_cast<int>(central_len_ + (color_id - 1) * leg_len_ + (w - 1));
}

std::int64_t CaterpillarInstance::combine(std::int64_t hcc_value, std::int64_t lo,
                                          std::int64_t hi) const {
  if (empty() || lo > hi) return 0;
  auto [a, b] = rank_interval_of(coords_, IntervalQuery(lo, hi));
  if (a > b) return 0;
  return hcc_value - color_id_max_.query(a, b)->value;
}

std::int64_t CaterpillarInstance::summax_query(std::int64_t lo, std::int64_t hi) const {
  if (empty() || lo > hi) return 0;
  auto [a, b] = rank_interval_of(coords_, IntervalQuery(lo, hi));
  if (a > b) return 0;
  return hcc_.query_rank(a, b) - color_id_max_.query(a, b)->value;
}

namespace {

class CaterpillarLeaf : public DominanceEngine {
 public:
  explicit CaterpillarLeaf(std::vector<WeightedPoint2D> pts) {
    SumMaxPair pair = dominance_to_summax(pts);
    a_ = CaterpillarInstance(pair.a);
    b_ = CaterpillarInstance(pair.b);
  }
  std::int64_t query(std::int64_t qx, std::int64_t qy) const override {
    if (-qx > qy) return 0;
    return b_.summax_query(-qx, qy) - a_.summax_query(-qx, qy);
  }

 private:
  CaterpillarInstance a_, b_;
};

LeafFactory caterpillar_leaf_factory() {
  return [](std::vector<WeightedPoint2D> pts) -> std::unique_ptr<DominanceEngine> {
    return std::make_unique<CaterpillarLeaf>(std::move(pts));
  };
}

}  // namespace

P3ToP1::P3ToP1(std::span<const WeightedPoint2D> points, double eps, int depth)
    : split_(split_weights(points, eps)) {
  LeafFactory factory = caterpillar_leaf_factory();
  for (int k = 0; k < split_.layer_count; ++k) {
    std::vector<WeightedPoint2D> layer_points;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (split_.layers[k][i] > 0)
        layer_points.push_back({points[i].x, points[i].y, split_.layers[k][i]});
    layer_grids_.emplace_back(std::move(layer_points), depth, factory);
  }
}

std::int64_t P3ToP1::query(std::int64_t qx, std::int64_t qy) const {
  std::int64_t sum = 0;
  for (int k = 0; k < split_.layer_count; ++k)
    sum += layer_grids_[k].query(qx, qy) << (k * split_.shift);
  return sum;
}

namespace {

// Vertex depths of a path graph, top (root) first.
std::vector<int> path_order(const CategoryGraph& g) {
  std::vector<int> order;
  int v = g.root();
  while (true) {
    order.push_back(v);
    const auto& kids = g.children_of(v);
    if (kids.empty()) break;
    v = kids[0];
  }
  if (static_cast<int>(order.size()) != g.vertex_count())
    throw std::invalid_argument("disconnected path graph");
  return order;
}

}  // namespace

std::vector<Point2D> scrc_path_to_distinct_y(const RankedPointSet& pts, const CategoryGraph& g) {
  if (g.kind() != GraphKind::path)
    throw std::invalid_argument("scrc path reduction requires a path graph");
  std::vector<int> order = path_order(g);
  std::vector<int> below(g.vertex_count());
  for (std::size_t k = 0; k < order.size(); ++k)
    below[order[k]] = static_cast<int>(order.size() - 1 - k);
  std::vector<Point2D> out(pts.n());
  for (int r = 1; r <= pts.n(); ++r)
    out[r - 1] = Point2D{r, below[g.check(pts.color_at_rank(r))]};
  return out;
}

std::int64_t scrc_path_query_threshold(const CategoryGraph& g, int c_q) {
  if (g.kind() != GraphKind::path)
    throw std::invalid_argument("scrc path reduction requires a path graph");
  std::vector<int> order = path_order(g);
  std::vector<int> below(g.vertex_count());
  for (std::size_t k = 0; k < order.size(); ++k)
    below[order[k]] = static_cast<int>(order.size() - 1 - k);
  return below[g.check(c_q)];
}

DistinctYToScrcPath::DistinctYToScrcPath(std::span<const Point2D> points) {
  for (const auto& p : points) distinct_ys_.push_back(p.y);
  std::sort(distinct_ys_.begin(), distinct_ys_.end());
  distinct_ys_.erase(std::unique(distinct_ys_.begin(), distinct_ys_.end()), distinct_ys_.end());
  if (distinct_ys_.empty()) return;

  // Vertex k represents the k-th smallest Y; the path is rooted at the top.
  const int m = static_cast<int>(distinct_ys_.size());
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < m; ++k) edges.emplace_back(k, k + 1);
  graph_ = std::make_unique<CategoryGraph>(m, std::move(edges), GraphKind::path);

  std::vector<std::pair<std::int64_t, int>> pc(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    int v = static_cast<int>(
        std::lower_bound(distinct_ys_.begin(), distinct_ys_.end(), points[i].y) -
        distinct_ys_.begin());
    pc[i] = {points[i].x, v};
  }
  pts_ = make_ranked_point_set(pc);
}

std::optional<int> DistinctYToScrcPath::query_vertex(std::int64_t t) const {
  auto idx = predecessor(distinct_ys_, t);
  if (!idx) return std::nullopt;
  return static_cast<int>(*idx);
}

std::int64_t DistinctYToScrcPath::oracle_query(std::int64_t l, std::int64_t r,
                                               std::int64_t t) const {
  if (!graph_ || l > r) return 0;
  auto v = query_vertex(t);
  if (!v) return 0;
  return scrc_oracle(pts_, *graph_, IntervalQuery(l, r), *v);
}

std::vector<ColoredPoint3D> colored3sided_to_dom3dcolor(std::span<const ColoredPoint2D> points) {
  std::vector<ColoredPoint3D> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    out[i] = ColoredPoint3D{-points[i].x, points[i].y, points[i].x, points[i].color};
  return out;
}

Dom3dCorner colored3sided_query_corner(std::int64_t l, std::int64_t r, std::int64_t t) {
  return Dom3dCorner{-l, t, r};
}

Dom3dViaDistinctY::Dom3dViaDistinctY(std::span<const WeightedPoint3D> points) {
  const std::size_t n = points.size();
  xs_.resize(n);
  ys_.resize(n);
  zs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs_[i] = points[i].x;
    ys_[i] = points[i].y;
    zs_[i] = points[i].z;
  }
  for (auto* axis : {&xs_, &ys_, &zs_}) {
    std::sort(axis->begin(), axis->end());
    if (std::adjacent_find(axis->begin(), axis->end()) != axis->end())
      throw std::invalid_argument("duplicate coordinates before rank reduction");
  }

  std::vector<Point2D> s1, s2;
  s1.reserve(2 * n);
  s2.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rank = [](const std::vector<std::int64_t>& axis, std::int64_t v) {
      return static_cast<std::int64_t>(
                 std::lower_bound(axis.begin(), axis.end(), v) - axis.begin()) +
             1;
    };
    const std::int64_t xr = rank(xs_, points[i].x);
    const std::int64_t yr = rank(ys_, points[i].y);
    const std::int64_t zr = rank(zs_, points[i].z);
    s1.push_back(Point2D{-xr, 2 * zr});
    s1.push_back(Point2D{yr, 2 * zr});
    s2.push_back(Point2D{-xr, 2 * zr});
    s2.push_back(Point2D{yr, 2 * zr + 1});
  }
  s1_ = Color3sidedIndex::distinct_y(s1);
  s2_ = Color3sidedIndex::distinct_y(s2);
}

std::int64_t Dom3dViaDistinctY::query(std::int64_t qx, std::int64_t qy, std::int64_t qz) const {
  auto bound = [](const std::vector<std::int64_t>& axis, std::int64_t v) {
    return static_cast<std::int64_t>(std::upper_bound(axis.begin(), axis.end(), v) -
                                     axis.begin());
  };
  const std::int64_t xb = bound(xs_, qx);
  const std::int64_t yb = bound(ys_, qy);
  const std::int64_t zb = bound(zs_, qz);
  const std::int64_t t = 2 * zb + 1;
  return s2_.query(-xb, yb, t) - s1_.query(-xb, yb, t);
}

CrcToHcc::CrcToHcc(const RankedPointSet& pts) {
  std::vector<int> palette(pts.colors());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (palette.empty()) return;

  // Pad the palette to a power of two (>= 2) with dummy colors.
  std::size_t p2 = 2;
  while (p2 < palette.size()) p2 *= 2;
  const int leaves = static_cast<int>(p2);

  // Heap-shaped balanced binary tree: vertex k has parent (k-1)/2; the last
  // `leaves` vertices are the leaves.
  auto heap_tree = [](int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < vertex_count; ++k) edges.emplace_back(k, (k - 1) / 2);
    return CategoryGraph(vertex_count, std::move(edges), GraphKind::tree);
  };
  t1_ = std::make_unique<CategoryGraph>(heap_tree(2 * leaves - 1));
  t2_ = std::make_unique<CategoryGraph>(heap_tree(leaves - 1));

  auto color_index = [&](int c) {
    return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) -
                            palette.begin());
  };
  std::vector<int> colors1(pts.n()), colors2(pts.n());
  for (int r = 1; r <= pts.n(); ++r) {
    const int leaf1 = (leaves - 1) + color_index(pts.color_at_rank(r));
    colors1[r - 1] = leaf1;
    colors2[r - 1] = (leaf1 - 1) / 2;
  }
  pts1_ = RankedPointSet(pts.coords(), std::move(colors1));
  pts2_ = RankedPointSet(pts.coords(), std::move(colors2));
  hcc1_ = HccTreeIndex(pts1_, *t1_);
  hcc2_ = HccTreeIndex(pts2_, *t2_);
}

std::int64_t CrcToHcc::query_rank(int a, int b) const {
  if (!t1_) return 0;
  return hcc1_.query_rank(a, b) - hcc2_.query_rank(a, b);
}

std::int64_t CrcToHcc::query(const IntervalQuery& q) const {
  if (!t1_) return 0;
  return hcc1_.query(q) - hcc2_.query(q);
}

}  // namespace catrange
