#ifndef LINTUR_PATTERNS_HPP
#define LINTUR_PATTERNS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lintur/hypergraph.hpp"

namespace lintur {

inline constexpr int kMaxPatternEdges = 16;

/// Edge i > 0 of a tree pattern shares exactly the vertex sitting at `slot`
/// of the earlier edge `edge`.
struct Attachment {
  int edge = 0;
  int slot = 0;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// Linear r-tree described by its attachment sequence.
///
/// The literal realization numbers the root edge's vertices 0..r-1 (slots
/// 0..r-1). Every later edge lists its attach vertex in slot 0, followed by
/// r-1 fresh vertices in slots 1..r-1.
class TreePattern {
 public:
  TreePattern(int uniformity, std::vector<Attachment> attachments, std::string name = {});

  int uniformity() const { return r_; }
  int edge_count() const { return static_cast<int>(attachments_.size()) + 1; }
  int vertex_count() const { return (r_ - 1) * edge_count() + 1; }
  const std::vector<Attachment>& attachments() const { return attachments_; }
  const std::string& name() const { return name_; }

  /// Slot-ordered vertex lists of the literal realization.
  const std::vector<std::vector<Vertex>>& edge_vertices() const { return edge_vertices_; }
  /// Number of pattern edges through each pattern vertex.
  const std::vector<int>& vertex_degrees() const { return degrees_; }

  Hypergraph realize() const;

  /// Same tree re-rooted at `edge`. `edge_map`/`vertex_map` (if given)
  /// receive new index -> old index for edges and vertices.
  TreePattern rerooted(int edge, std::vector<int>* edge_map = nullptr,
                       std::vector<Vertex>* vertex_map = nullptr) const;

 private:
  int r_;
  std::vector<Attachment> attachments_;
  std::string name_;
  std::vector<std::vector<Vertex>> edge_vertices_;
  std::vector<int> degrees_;
};

/// k pairwise disjoint edges.
struct MatchingPattern {
  int k = 1;
};

using ForbiddenConfig = std::variant<TreePattern, MatchingPattern>;

TreePattern path_pattern(int k, int uniformity = 4);
TreePattern star_pattern(int k, int uniformity = 4);
/// S_3 plus one edge hung on a degree-one vertex of a leaf edge.
TreePattern s3_plus_pattern(int uniformity = 4);
/// Centre edge with three pendant edges at three distinct centre vertices.
TreePattern e4_plus_pattern(int uniformity = 4);

/// Names: "P" / "S" (with k), "S3plus", "E4plus". Throws InputError on an
/// unknown name or k < 1, CapacityError when k exceeds kMaxPatternEdges.
TreePattern named_pattern(std::string_view name, int k = 0, int uniformity = 4);

/// Parses `P<k>`, `S<k>`, `S3plus`, `E4plus`, `M<k>` and `T:<list>` where
/// list is comma-separated `edge.slot` attachments for edges 1..k-1 (an empty
/// list is a single edge).
ForbiddenConfig parse_config(std::string_view text, int uniformity = 4);
std::string config_name(const ForbiddenConfig& config);

/// Witness of a configuration inside a host.
struct Embedding {
  std::vector<std::size_t> edge_map;  // pattern edge -> host edge index
  std::vector<Vertex> vertex_map;     // pattern vertex -> host vertex
};

std::optional<Embedding> contains_tree(const Hypergraph& host, const TreePattern& pattern);

/// Like contains_tree, but only embeddings whose image uses `host_edge`.
std::optional<Embedding> contains_tree_using(const Hypergraph& host, const TreePattern& pattern,
                                             std::size_t host_edge);

/// k pairwise disjoint host edges; pattern vertex i*r+s is slot s of edge i.
std::optional<Embedding> contains_matching(const Hypergraph& host, int k);
std::optional<Embedding> contains_matching_using(const Hypergraph& host, int k,
                                                 std::size_t host_edge);

std::optional<Embedding> find_config(const Hypergraph& host, const ForbiddenConfig& config);
std::optional<Embedding> find_config_using(const Hypergraph& host, const ForbiddenConfig& config,
                                           std::size_t host_edge);

/// Independent re-check: injective maps, every pattern edge lands on its
/// host edge, and pairwise intersection sizes are preserved.
bool validate_embedding(const Hypergraph& host, const TreePattern& pattern,
                        const Embedding& embedding);
bool validate_matching(const Hypergraph& host, int k, const Embedding& embedding);
bool validate_config(const Hypergraph& host, const ForbiddenConfig& config,
                     const Embedding& embedding);

/// True when `host` contains no member of `family` (vacuously for none).
bool is_free(const Hypergraph& host, std::span<const ForbiddenConfig> family);
bool is_free(const Hypergraph& host, const ForbiddenConfig& config);

struct AcyclicityResult {
  bool acyclic = false;
  /// Construction order (edge indices) when acyclic: each edge meets the
  /// union of the earlier ones in at most one vertex.
  std::vector<std::size_t> order;
};

/// Reverse peeling. Throws InputError when `h` is not linear.
AcyclicityResult is_acyclic(const Hypergraph& h);

/// Checks that `order` is a permutation of h's edges building it acyclically.
bool validate_construction_order(const Hypergraph& h, std::span<const std::size_t> order);

}  // namespace lintur

#endif  // LINTUR_PATTERNS_HPP
