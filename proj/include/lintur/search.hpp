#ifndef LINTUR_SEARCH_HPP
#define LINTUR_SEARCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lintur/hypergraph.hpp"
#include "lintur/patterns.hpp"

namespace lintur {

inline constexpr int kMaxSearchVertices = 20;
inline constexpr int kMaxBruteForceVertices = 8;

struct Budget {
  std::uint64_t max_nodes = 100000000;
  double max_seconds = 300.0;

  /// Defaults, overridden by LINTUR_BUDGET_NODES / LINTUR_BUDGET_SECS.
  static Budget from_env();
};

struct SearchResult {
  std::string quantity;
  int n = 0;
  std::string family;
  int value = 0;  // exact when completed, best found otherwise
  Hypergraph witness;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  bool completed = false;
};

/// Largest linear 4-graph on n vertices avoiding every member of `family`.
/// CapacityError for n > kMaxSearchVertices.
SearchResult exact_ex(int n, std::span<const ForbiddenConfig> family,
                      const Budget& budget = Budget::from_env());
SearchResult exact_ex(int n, const ForbiddenConfig& config,
                      const Budget& budget = Budget::from_env());

/// D1(m,4,2): the same search with an empty family.
SearchResult exact_packing(int m, const Budget& budget = Budget::from_env());

/// Plain enumeration of every linear edge set, no pruning. CapacityError for
/// n > kMaxBruteForceVertices.
int brute_force_ex(int n, std::span<const ForbiddenConfig> family);
int brute_force_ex(int n, const ForbiddenConfig& config);

/// Byte string equal for two hypergraphs iff they are isomorphic.
/// CapacityError for n > kMaxSearchVertices.
std::string canonical_form(const Hypergraph& h);

/// Relabelling (old id -> new id) that realises the canonical form.
std::vector<Vertex> canonical_labeling(const Hypergraph& h);

}  // namespace lintur

#endif  // LINTUR_SEARCH_HPP
