#ifndef LINTUR_HYPERGRAPH_HPP
#define LINTUR_HYPERGRAPH_HPP

#include <array>
#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lintur {

using Vertex = int;

/// Largest vertex count any hypergraph may carry. Vertex sets are bitsets of
/// this width.
inline constexpr int kMaxVertices = 256;
inline constexpr int kMaxUniformity = 4;

using VertexSet = std::bitset<kMaxVertices>;

/// Malformed input: wrong arity, out-of-range vertex, duplicate edge and so on.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a fixed desk-scale limit (vertex count, pattern size, ...).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Ascending tuple of at most four distinct vertices.
class Edge {
 public:
  Edge() = default;
  Edge(std::initializer_list<Vertex> vertices);
  explicit Edge(std::span<const Vertex> vertices);

  std::size_t size() const { return size_; }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  const Vertex* begin() const { return v_.data(); }
  const Vertex* end() const { return v_.data() + size_; }

  bool contains(Vertex v) const;
  VertexSet mask() const;
  std::string to_string() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  std::array<Vertex, kMaxUniformity> v_{};
  std::uint8_t size_ = 0;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// Uniform hypergraph on vertices [0, n) with a canonically ordered edge list.
///
/// Construction validates every edge (arity r, distinct in-range vertices, no
/// repeated edge) and sorts the edges lexicographically, so two hypergraphs
/// with the same edge set compare equal. Values are immutable.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges = {});

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  const VertexSet& edge_mask(std::size_t i) const { return masks_[i]; }

  /// Indices of the edges containing v, ascending.
  const std::vector<std::size_t>& incident(Vertex v) const { return incidence_[v]; }

  std::optional<std::size_t> find_edge(const Edge& e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int r_ = 4;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> masks_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Map from unordered vertex pair to the index of the edge covering it.
class PairCoverage {
 public:
  PairCoverage() = default;
  explicit PairCoverage(int vertex_count);

  int vertex_count() const { return n_; }
  std::optional<std::size_t> covering_edge(Vertex u, Vertex v) const;
  bool covered(Vertex u, Vertex v) const { return covering_edge(u, v).has_value(); }
  std::size_t covered_pair_count() const { return covered_; }

  /// Records edge `index` as the cover of {u,v}. Returns the previous cover if
  /// the pair was already taken (and leaves the entry untouched).
  std::optional<std::size_t> claim(Vertex u, Vertex v, std::size_t index);

 private:
  int n_ = 0;
  std::vector<std::int32_t> cover_;
  std::size_t covered_ = 0;
};

/// Coverage of the linear hypergraph `h`, or nullopt when some pair lies in
/// two edges.
std::optional<PairCoverage> is_linear(const Hypergraph& h);

/// First pair found in two edges, with both edge indices.
struct LinearityViolation {
  VertexPair pair;
  std::size_t first_edge;
  std::size_t second_edge;
};
std::optional<LinearityViolation> find_linearity_violation(const Hypergraph& h);

int degree(const Hypergraph& h, Vertex v);
/// Degrees of all vertices, sorted descending.
std::vector<int> degree_sequence(const Hypergraph& h);
/// Degrees of the vertices of `e` (which must be an edge of `h`), descending.
std::vector<int> degree_vector(const Hypergraph& h, const Edge& e);
/// Componentwise a >= b.
bool dominates(std::span<const int> a, std::span<const int> b);

struct Component {
  std::vector<Vertex> vertices;  // original ids, ascending
  Hypergraph induced;            // relabelled onto [0, vertices.size())
};

struct ComponentSplit {
  std::vector<Component> components;
  std::vector<Vertex> isolated;
};

/// Connected components under edge intersection. Components are ordered by
/// their smallest vertex.
ComponentSplit components(const Hypergraph& h);

/// Why add_edge_linear refused an edge.
struct EdgeRejection {
  enum class Reason { kDuplicateEdge, kPairCovered };
  Reason reason;
  VertexPair pair{};           // clashing pair (kPairCovered)
  std::size_t clashing_edge;   // index in the original hypergraph
  std::string message;
};

struct AddEdgeResult {
  std::optional<Hypergraph> graph;
  std::optional<PairCoverage> coverage;
  std::optional<EdgeRejection> rejection;

  bool accepted() const { return graph.has_value(); }
};

/// Appends `e` to a linear hypergraph if none of its pairs is covered yet.
/// Throws InputError if `h` itself is not linear or `e` is malformed.
AddEdgeResult add_edge_linear(const Hypergraph& h, const Edge& e);

/// Incremental owner of a linear hypergraph and its coverage.
class LinearBuilder {
 public:
  LinearBuilder(int uniformity, int vertex_count);
  explicit LinearBuilder(Hypergraph h);

  /// True when added. On rejection the builder is left unchanged.
  bool try_add(const Edge& e);
  bool can_add(const Edge& e) const;

  const Hypergraph& graph() const { return graph_; }
  const PairCoverage& coverage() const { return coverage_; }

 private:
  Hypergraph graph_;
  PairCoverage coverage_;
};

struct LeaveGraph {
  int vertex_count = 0;
  std::vector<VertexPair> uncovered_pairs;  // u < v, lexicographic
};

/// Pairs of [0, n) not covered by any edge. Throws InputError on non-linear
/// input.
LeaveGraph leave_graph(const Hypergraph& h);

/// Hypergraph with vertices renamed by `perm` (old id -> new id).
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm);

}  // namespace lintur

#endif  // LINTUR_HYPERGRAPH_HPP
