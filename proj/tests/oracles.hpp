#ifndef LINTUR_TESTS_ORACLES_HPP
#define LINTUR_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lintur/hypergraph.hpp"
#include "lintur/patterns.hpp"

// Slow, independent re-implementations used to cross-check the library.
namespace oracle {

using lintur::Hypergraph;
using lintur::LeaveGraph;

/// Random linear hypergraph: `attempts` random r-sets, each kept if it
/// keeps the system linear.
Hypergraph random_linear(std::mt19937_64& rng, int r, int n, int attempts);

/// Tree containment by brute force over ordered tuples of distinct host
/// edges. A tuple realises the pattern iff the multiset of vertex
/// signatures (which tuple slots contain the vertex) matches the pattern's.
bool contains_tree(const Hypergraph& host, const lintur::TreePattern& pattern);

/// k pairwise disjoint edges, by subset enumeration.
bool contains_matching(const Hypergraph& host, int k);

bool contains(const Hypergraph& host, const lintur::ForbiddenConfig& config);

/// Three pairwise disjoint edges plus a fourth edge meeting each of them.
bool contains_three_disjoint_plus_transversal(const Hypergraph& host);

/// Subset DP over edge sets: S is buildable iff some e in S has S - e
/// buildable and |e ∩ V(S - e)| <= 1.
bool acyclic_by_subsets(const Hypergraph& h);

/// Graph isomorphism by backtracking. Both graphs are simple.
bool isomorphic(const LeaveGraph& a, const LeaveGraph& b);

/// Largest F-free linear 4-graph on n vertices, by enumerating every edge
/// subset with an oracle containment check. Only for tiny n.
int max_free_edges(int n, const std::vector<lintur::ForbiddenConfig>& family);

}  // namespace oracle

#endif  // LINTUR_TESTS_ORACLES_HPP
