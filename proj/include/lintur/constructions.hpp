#ifndef LINTUR_CONSTRUCTIONS_HPP
#define LINTUR_CONSTRUCTIONS_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lintur/hypergraph.hpp"

namespace lintur {

/// One re-checkable property of a construction.
struct Claim {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;
};

struct Certificate {
  std::vector<Claim> claims;

  void add(std::string name, std::string params, bool pass, std::string detail = {});
  bool all_pass() const;
  std::string format_text() const;
  /// `claim.<i>.name=...` style lines.
  std::string format_kv() const;
};

struct Construction {
  Hypergraph graph;
  Certificate certificate;
};

/// Relabels the parts onto consecutive vertex ranges, in order.
Hypergraph disjoint_union(std::span<const Hypergraph> parts);
Hypergraph disjoint_union(std::initializer_list<Hypergraph> parts);
/// `copies` disjoint copies of `h`.
Hypergraph disjoint_copies(const Hypergraph& h, int copies);

/// Block lists of the two Steiner systems, 0-based.
Hypergraph steiner_2_4_13();
Hypergraph steiner_2_4_16();
/// The uncorrected 16-point block list. It covers four pairs twice
/// and misses four, so it is not a Steiner system; kept for reference.
Hypergraph steiner_2_4_16_as_printed();

/// Linear, every pair covered exactly once, d(v) = (n-1)/(r-1) everywhere
/// and C(n,2)/C(r,2) blocks.
Certificate certify_steiner(const Hypergraph& h);

/// S(2,4,v) for v in {4, 13, 16}; CapacityError otherwise.
Construction steiner_system(int order);

struct ResolvableTripleSystem {
  Hypergraph base;
  /// Four parallel classes of three disjoint triples each.
  std::vector<std::vector<Edge>> classes;
};

/// The affine plane of order 3 on the 3x3 grid: vertex 3x+y, classes along
/// the directions (0,1), (1,0), (1,1), (1,2).
ResolvableTripleSystem sts9_resolvable();
Certificate certify_resolvable(const ResolvableTripleSystem& system);

struct E4PlusConstruction {
  Hypergraph graph;
  Certificate certificate;
  int copies = 0;          // STS(9) copies
  int base_edges = 0;      // 12 * copies
  int leftover = 0;        // unused vertices after copies and apexes
  int augmented = 0;       // edges added by the augmentation search
  int epsilon_target = 0;  // epsilon(n)
  bool augmentation_exhausted = false;  // search space fully explored
  std::uint64_t augmentation_nodes = 0;
};

inline constexpr std::uint64_t kDefaultAugmentationNodes = 200000;

/// Copies of STS(9) with the four classes closed by four shared apexes,
/// followed by an augmentation search on the leftover vertices.
/// InputError for n < 13; CapacityError for n > 256.
E4PlusConstruction e4plus_lower_construction(int n,
                                             std::uint64_t node_budget = kDefaultAugmentationNodes);

/// Hardcoded optimal 2-(m,4,1) packings for m in {8, 9, 10, 11, 17, 19}.
Construction packing_optimal_small(int m);

enum class LeaveClass {
  kEmpty,
  kTriangles,           // (m/3) K3
  kMatching,            // (m/2) K2
  kStarPlusMatching,    // K_{1,4} and (m-5)/2 K2
  kK33,                 // K_{3,3}, other vertices isolated
  kK6MinusK4Triangles,  // (K6 minus K4) and (m-6)/3 K3
  kStar,                // K_{1,t}, other vertices isolated
  kOther,
};

struct LeaveClassification {
  LeaveClass kind = LeaveClass::kOther;
  int vertex_count = 0;
  /// Triangles, K2s or star leaves depending on `kind`.
  int count = 0;
};

std::string leave_class_name(const LeaveClassification& c);
LeaveClassification classify_leave(const LeaveGraph& leave);
/// A graph of the classified shape on the same vertex count. Throws
/// InputError for kOther.
LeaveGraph render_leave(const LeaveClassification& c);

struct GConstruction {
  Hypergraph graph;
  std::vector<Vertex> fixed_set;  // A = {0, ..., k-2}
  Certificate certificate;
  int perfect_classes = 0;   // parallel classes covering all 3t outer vertices
  int inner_edges = 0;       // packing edges inside A
  std::string inner_source;  // where the packing inside A came from
};

/// Quadruples through a (k-1)-set A: a packing inside A plus parallel
/// classes of triples outside A, class i joined to the i-th vertex of A.
/// Requires k >= 2 and n >= 4k-4. Throws std::runtime_error when the count
/// would fall below the lower-bound formula.
GConstruction g_lower_construction(int n, int k, std::uint64_t seed = 0);

/// n/(3k-2) disjoint copies of S(2,4,3k-2). InputError unless (3k-2) | n
/// and 3k-2 = 1,4 (mod 12); CapacityError when no such Steiner system is
/// available.
Construction prop2_construction(int n, int k);

}  // namespace lintur

#endif  // LINTUR_CONSTRUCTIONS_HPP
