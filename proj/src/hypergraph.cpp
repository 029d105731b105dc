#include "lintur/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lintur {

Edge::Edge(std::initializer_list<Vertex> vertices)
    : Edge(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

Edge::Edge(std::span<const Vertex> vertices) {
  if (vertices.size() > kMaxUniformity) {
    throw InputError("edge has " + std::to_string(vertices.size()) +
                     " vertices; at most 4 supported");
  }
  std::copy(vertices.begin(), vertices.end(), v_.begin());
  size_ = static_cast<std::uint8_t>(vertices.size());
  std::sort(v_.begin(), v_.begin() + size_);
}

bool Edge::contains(Vertex v) const {
  return std::find(begin(), end(), v) != end();
}

VertexSet Edge::mask() const {
  VertexSet m;
  for (Vertex v : *this) m.set(static_cast<std::size_t>(v));
  return m;
}

std::string Edge::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) os << ',';
    os << v_[i];
  }
  os << '}';
  return os.str();
}

Hypergraph::Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges)
    : r_(uniformity), n_(vertex_count), edges_(std::move(edges)) {
  if (r_ < 3 || r_ > kMaxUniformity) {
    throw InputError("uniformity must be 3 or 4, got " + std::to_string(r_));
  }
  if (n_ < 0) throw InputError("negative vertex count");
  if (n_ > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(n_) + " exceeds the supported maximum " +
                        std::to_string(kMaxVertices));
  }
  for (const Edge& e : edges_) {
    if (static_cast<int>(e.size()) != r_) {
      throw InputError("edge " + e.to_string() + " does not have " + std::to_string(r_) +
                       " vertices");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n_) {
        throw InputError("edge " + e.to_string() + " has a vertex outside [0, " +
                         std::to_string(n_) + ")");
      }
      if (i && e[i] == e[i - 1]) {
        throw InputError("edge " + e.to_string() + " repeats a vertex");
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InputError("duplicate edge " + dup->to_string());

  masks_.reserve(edges_.size());
  incidence_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    masks_.push_back(edges_[i].mask());
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
  }
}

std::optional<std::size_t> Hypergraph::find_edge(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

PairCoverage::PairCoverage(int vertex_count)
    : n_(vertex_count), cover_(static_cast<std::size_t>(vertex_count) * vertex_count, -1) {}

std::optional<std::size_t> PairCoverage::covering_edge(Vertex u, Vertex v) const {
  std::int32_t c = cover_[static_cast<std::size_t>(u) * n_ + v];
  if (c < 0) return std::nullopt;
  return static_cast<std::size_t>(c);
}

std::optional<std::size_t> PairCoverage::claim(Vertex u, Vertex v, std::size_t index) {
  auto& slot = cover_[static_cast<std::size_t>(u) * n_ + v];
  if (slot >= 0) return static_cast<std::size_t>(slot);
  slot = static_cast<std::int32_t>(index);
  cover_[static_cast<std::size_t>(v) * n_ + u] = slot;
  ++covered_;
  return std::nullopt;
}

namespace {

// Builds the coverage, stopping at the first doubly covered pair.
std::optional<LinearityViolation> build_coverage(const Hypergraph& h, PairCoverage& cover) {
  cover = PairCoverage(h.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        if (auto prev = cover.claim(e[a], e[b], i)) {
          return LinearityViolation{{e[a], e[b]}, *prev, i};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PairCoverage> is_linear(const Hypergraph& h) {
  PairCoverage cover;
  if (build_coverage(h, cover)) return std::nullopt;
  return cover;
}

std::optional<LinearityViolation> find_linearity_violation(const Hypergraph& h) {
  PairCoverage cover;
  return build_coverage(h, cover);
}

int degree(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.vertex_count()) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  return static_cast<int>(h.incident(v).size());
}

std::vector<int> degree_sequence(const Hypergraph& h) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) seq.push_back(degree(h, v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<int> degree_vector(const Hypergraph& h, const Edge& e) {
  if (!h.find_edge(e)) throw InputError("edge " + e.to_string() + " is not in the hypergraph");
  std::vector<int> d;
  for (Vertex v : e) d.push_back(degree(h, v));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool dominates(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

ComponentSplit components(const Hypergraph& h) {
  const int n = h.vertex_count();
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      Vertex a = find(e[0]), b = find(e[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  ComponentSplit split;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (h.incident(v).empty()) {
      split.isolated.push_back(v);
      continue;
    }
    Vertex root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(split.components.size());
      split.components.emplace_back();
    }
    split.components[slot[root]].vertices.push_back(v);
  }

  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Edge>> parts(split.components.size());
  for (auto& c : split.components) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) local[c.vertices[i]] = static_cast<Vertex>(i);
  }
  for (const Edge& e : h.edges()) {
    std::array<Vertex, kMaxUniformity> mapped{};
    for (std::size_t i = 0; i < e.size(); ++i) mapped[i] = local[e[i]];
    parts[slot[find(e[0])]].emplace_back(std::span<const Vertex>(mapped.data(), e.size()));
  }
  for (std::size_t c = 0; c < parts.size(); ++c) {
    split.components[c].induced =
        Hypergraph(h.uniformity(), static_cast<int>(split.components[c].vertices.size()),
                   std::move(parts[c]));
  }
  return split;
}

AddEdgeResult add_edge_linear(const Hypergraph& h, const Edge& e) {
  auto cover = is_linear(h);
  if (!cover) throw InputError("add_edge_linear requires a linear hypergraph");
  // Validates arity and range before touching the coverage.
  Hypergraph single(h.uniformity(), h.vertex_count(), {e});

  AddEdgeResult result;
  if (auto idx = h.find_edge(e)) {
    result.rejection = EdgeRejection{EdgeRejection::Reason::kDuplicateEdge, {}, *idx,
                                     "edge " + e.to_string() + " already present"};
    return result;
  }
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (auto owner = cover->covering_edge(e[a], e[b])) {
        result.rejection = EdgeRejection{
            EdgeRejection::Reason::kPairCovered,
            {e[a], e[b]},
            *owner,
            "pair {" + std::to_string(e[a]) + "," + std::to_string(e[b]) +
                "} already covered by edge " + h.edge(*owner).to_string()};
        return result;
      }
    }
  }
  std::vector<Edge> edges = h.edges();
  edges.push_back(e);
  result.graph = Hypergraph(h.uniformity(), h.vertex_count(), std::move(edges));
  result.coverage = is_linear(*result.graph);
  return result;
}

LinearBuilder::LinearBuilder(int uniformity, int vertex_count)
    : LinearBuilder(Hypergraph(uniformity, vertex_count)) {}

LinearBuilder::LinearBuilder(Hypergraph h) : graph_(std::move(h)) {
  auto cover = is_linear(graph_);
  if (!cover) throw InputError("LinearBuilder requires a linear hypergraph");
  coverage_ = std::move(*cover);
}

bool LinearBuilder::can_add(const Edge& e) const {
  if (static_cast<int>(e.size()) != graph_.uniformity()) return false;
  for (Vertex v : e) {
    if (v < 0 || v >= graph_.vertex_count()) return false;
  }
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (e[a] == e[b] || coverage_.covered(e[a], e[b])) return false;
    }
  }
  return true;
}

bool LinearBuilder::try_add(const Edge& e) {
  if (!can_add(e)) return false;
  std::vector<Edge> edges = graph_.edges();
  edges.push_back(e);
  Hypergraph next(graph_.uniformity(), graph_.vertex_count(), std::move(edges));
  auto cover = is_linear(next);
  graph_ = std::move(next);
  coverage_ = std::move(*cover);
  return true;
}

LeaveGraph leave_graph(const Hypergraph& h) {
  auto cover = is_linear(h);
  if (!cover) throw InputError("leave graph requires a linear hypergraph");
  LeaveGraph leave{h.vertex_count(), {}};
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < h.vertex_count(); ++v) {
      if (!cover->covered(u, v)) leave.uncovered_pairs.emplace_back(u, v);
    }
  }
  return leave;
}

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != h.vertex_count()) {
    throw InputError("relabelling has the wrong length");
  }
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    std::array<Vertex, kMaxUniformity> mapped{};
    for (std::size_t i = 0; i < e.size(); ++i) mapped[i] = perm[e[i]];
    edges.emplace_back(std::span<const Vertex>(mapped.data(), e.size()));
  }
  return Hypergraph(h.uniformity(), h.vertex_count(), std::move(edges));
}

}  // namespace lintur
