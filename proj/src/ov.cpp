#include "catrange/ov.hpp"

#include <bit>
#include <stdexcept>

#include "catrange/hcc_dag.hpp"
#include "catrange/parallel.hpp"

namespace catrange {

OvInstance::OvInstance(int dim_, std::vector<std::uint64_t> a_, std::vector<std::uint64_t> b_)
    : dim(dim_), a(std::move(a_)), b(std::move(b_)) {
  if (dim < 1 || dim > 64) throw std::invalid_argument("vector dimension must be in 1..64");
  if (b.empty() || a.empty()) throw std::invalid_argument("vector sets must be nonempty");
  const std::uint64_t mask = dim == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << dim) - 1);
  for (std::uint64_t v : a)
    if (v & ~mask) throw std::invalid_argument("dimension mismatch in set A");
  for (std::uint64_t v : b)
    if (v & ~mask) throw std::invalid_argument("dimension mismatch in set B");
}

OvDag build_ov_dag(const OvInstance& inst) {
  const int eta_a = static_cast<int>(inst.a.size());
  const int eta_b = static_cast<int>(inst.b.size());
  const int d = inst.dim;
  const int coord_base = eta_a;
  const int b_base = eta_a + d;

  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < eta_a; ++j)
    for (int k = 0; k < d; ++k)
      if ((inst.a[j] >> k) & 1) edges.emplace_back(coord_base + k, j);
  for (int i = 0; i < eta_b; ++i)
    for (int k = 0; k < d; ++k)
      if ((inst.b[i] >> k) & 1) edges.emplace_back(b_base + i, coord_base + k);

  CategoryGraph graph(eta_a + d + eta_b, std::move(edges), GraphKind::dag);

  std::vector<std::pair<std::int64_t, int>> pc(eta_b);
  std::vector<std::int64_t> expected(eta_b);
  for (int i = 0; i < eta_b; ++i) {
    pc[i] = {i + 1, b_base + i};
    expected[i] = std::popcount(inst.b[i]) + 1 + eta_a;
  }
  return OvDag{std::move(graph), make_ranked_point_set(pc), std::move(expected), 0, b_base};
}

namespace {

// The per-point checks are independent; the witness is the smallest failing
// index, which a min-reduction keeps deterministic under OpenMP.
OvDecision scan_for_witness(int count, const std::function<bool(int)>& fails) {
  int witness = count;
  const int threads = thread_cap();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) reduction(min : witness)
#endif
  for (int i = 0; i < count; ++i)
    if (fails(i) && i < witness) witness = i;
  (void)threads;
  if (witness == count) return OvDecision{false, -1};
  return OvDecision{true, witness};
}

}  // namespace

OvDecision decide_ov_hcc(const OvInstance& inst, const OvDag& dag, const HccRankQuerier& hcc) {
  return scan_for_witness(inst.eta(),
                          [&](int i) { return hcc(i + 1, i + 1) != dag.expected[i]; });
}

OvDecision decide_ov_hcc(const OvInstance& inst) {
  OvDag dag = build_ov_dag(inst);
  HccDagIndex idx(dag.points, dag.graph);
  return decide_ov_hcc(inst, dag, [&](int i, int j) { return idx.query_rank(i, j); });
}

OvDecision decide_ov_scrc(const OvInstance& inst, const OvDag& dag,
                          const ScrcRankQuerier& scrc) {
  const int eta = inst.eta();
  return scan_for_witness(static_cast<int>(inst.a.size()), [&](int i) {
    return scrc(1, eta, dag.a_vertex_base + i) < eta;
  });
}

OvDecision decide_ov_scrc(const OvInstance& inst) {
  OvDag dag = build_ov_dag(inst);
  ScrcDagTrivial idx(dag.points, dag.graph);
  return decide_ov_scrc(inst, dag,
                        [&](int a, int b, int v) { return idx.query_rank(a, b, v); });
}

bool brute_ov(const OvInstance& inst) { return brute_ov_pair(inst).has_value(); }

std::optional<std::pair<int, int>> brute_ov_pair(const OvInstance& inst) {
  for (std::size_t i = 0; i < inst.a.size(); ++i)
    for (std::size_t j = 0; j < inst.b.size(); ++j)
      if ((inst.a[i] & inst.b[j]) == 0)
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

}  // namespace catrange
