#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "lintur/search.hpp"

namespace lintur {

namespace {

using Colors = std::vector<int>;

// Replaces every colour by the rank of its signature: (colour, sorted list
// of incident-edge colour multisets). Repeats until the partition is stable.
void refine(const Hypergraph& h, Colors& color) {
  const int n = h.vertex_count();
  int classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
  while (true) {
    std::vector<std::vector<int>> edge_sig(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      for (Vertex v : h.edge(i)) edge_sig[i].push_back(color[v]);
      std::sort(edge_sig[i].begin(), edge_sig[i].end());
    }
    std::vector<std::pair<int, std::vector<std::vector<int>>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (std::size_t i : h.incident(v)) sig[v].second.push_back(edge_sig[i]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                  sorted.begin());
    }
    const int now = static_cast<int>(sorted.size());
    if (now == classes) return;
    classes = now;
  }
}

std::string encode(const Hypergraph& h, const Colors& label) {
  std::vector<std::array<int, kMaxUniformity>> edges;
  for (const Edge& e : h.edges()) {
    std::array<int, kMaxUniformity> t{};
    std::size_t k = 0;
    for (Vertex v : e) t[k++] = label[v];
    std::sort(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(e.size()));
    edges.push_back(t);
  }
  std::sort(edges.begin(), edges.end());
  std::string out;
  out.push_back(static_cast<char>(h.uniformity()));
  out.push_back(static_cast<char>(h.vertex_count()));
  out.push_back(static_cast<char>(h.edge_count() & 0xff));
  out.push_back(static_cast<char>(h.edge_count() >> 8));
  for (const auto& t : edges) {
    for (int i = 0; i < h.uniformity(); ++i) out.push_back(static_cast<char>(t[i]));
  }
  return out;
}

struct Canonizer {
  const Hypergraph& h;
  std::string best;
  Colors best_label;
  bool have = false;

  void search(Colors color) {
    refine(h, color);
    const int n = h.vertex_count();
    // Smallest colour shared by two or more vertices.
    std::map<int, std::vector<Vertex>> cells;
    for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);
    const std::vector<Vertex>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (!target) {
      std::string code = encode(h, color);
      if (!have || code < best) {
        best = std::move(code);
        best_label = color;
        have = true;
      }
      return;
    }
    std::vector<const std::vector<std::size_t>*> tried;
    for (Vertex v : *target) {
      // Vertices with identical incident edges are interchangeable.
      const auto* inc = &h.incident(v);
      if (std::any_of(tried.begin(), tried.end(), [&](const auto* t) { return *t == *inc; })) {
        continue;
      }
      tried.push_back(inc);
      Colors next(n);
      for (Vertex u = 0; u < n; ++u) next[u] = 2 * color[u] + (u == v ? 0 : 1);
      search(std::move(next));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Hypergraph& h) {
  if (h.vertex_count() > kMaxSearchVertices) {
    throw CapacityError("canonical form supports at most " + std::to_string(kMaxSearchVertices) +
                        " vertices");
  }
  Canonizer c{h, {}, {}, false};
  c.search(Colors(static_cast<std::size_t>(h.vertex_count()), 0));
  return c.best_label;
}

std::string canonical_form(const Hypergraph& h) {
  return encode(h, canonical_labeling(h));
}

}  // namespace lintur
