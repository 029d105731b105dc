#include <algorithm>

#include "lintur/patterns.hpp"

namespace lintur {

AcyclicityResult is_acyclic(const Hypergraph& h) {
  if (!is_linear(h)) throw InputError("acyclicity is defined for linear hypergraphs only");

  const std::size_t m = h.edge_count();
  std::vector<int> live_degree(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) ++live_degree[v];
  }

  // An edge can be peeled when at most one of its vertices lies in another
  // remaining edge. Peeling only shrinks the union, so a peelable edge stays
  // peelable.
  std::vector<bool> removed(m, false);
  std::vector<std::size_t> removal;
  bool progress = true;
  while (removal.size() < m && progress) {
    progress = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (removed[i]) continue;
      int shared = 0;
      for (Vertex v : h.edge(i)) shared += live_degree[v] >= 2 ? 1 : 0;
      if (shared > 1) continue;
      removed[i] = true;
      removal.push_back(i);
      for (Vertex v : h.edge(i)) --live_degree[v];
      progress = true;
    }
  }

  AcyclicityResult result;
  result.acyclic = removal.size() == m;
  if (result.acyclic) {
    result.order.assign(removal.rbegin(), removal.rend());
    if (!validate_construction_order(h, result.order)) {
      throw std::logic_error("peeling produced an order that does not rebuild the hypergraph");
    }
  }
  return result;
}

bool validate_construction_order(const Hypergraph& h, std::span<const std::size_t> order) {
  if (order.size() != h.edge_count()) return false;
  std::vector<bool> seen(h.edge_count(), false);
  VertexSet so_far;
  for (std::size_t idx : order) {
    if (idx >= h.edge_count() || seen[idx]) return false;
    seen[idx] = true;
    if ((h.edge_mask(idx) & so_far).count() > 1) return false;
    so_far |= h.edge_mask(idx);
  }
  return true;
}

}  // namespace lintur
