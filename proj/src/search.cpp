#include "lintur/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <unordered_set>

namespace lintur {

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("LINTUR_BUDGET_NODES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') b.max_nodes = v;
  }
  if (const char* s = std::getenv("LINTUR_BUDGET_SECS")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && *end == '\0' && v > 0) b.max_seconds = v;
  }
  return b;
}

namespace {

using Mask = std::uint32_t;
using Clock = std::chrono::steady_clock;

struct Candidate {
  Mask mask;
  Edge edge;
  int min_vertex;
};

std::vector<Candidate> all_quadruples(int n) {
  std::vector<Candidate> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          out.push_back({(Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c) | (Mask{1} << d),
                         Edge{a, b, c, d}, a});
        }
  return out;
}

std::string family_name(std::span<const ForbiddenConfig> family) {
  if (family.empty()) return "none";
  std::string s;
  for (const auto& f : family) {
    if (!s.empty()) s += ',';
    s += config_name(f);
  }
  return s;
}

void check_family(std::span<const ForbiddenConfig> family) {
  for (const auto& f : family) {
    if (const auto* t = std::get_if<TreePattern>(&f); t && t->uniformity() != 4) {
      throw InputError("the search handles 4-uniform patterns only");
    }
  }
}

class Engine {
 public:
  Engine(int n, std::span<const ForbiddenConfig> family, const Budget& budget)
      : n_(n), family_(family), budget_(budget), candidates_(all_quadruples(n)),
        adjacency_(static_cast<std::size_t>(n), 0) {}

  SearchResult run() {
    start_ = Clock::now();
    SearchResult r;
    r.n = n_;
    r.family = family_name(family_);
    root_cap_ = capacity(0);
    extend(0);
    r.value = static_cast<int>(best_.size());
    r.nodes = nodes_;
    r.completed = !aborted_;
    Hypergraph found(4, n_, best_);
    r.witness = relabel(found, canonical_labeling(found));
    r.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return r;
  }

 private:
  // Upper bound on edges that can still be added using vertices >= low.
  int capacity(int low) const {
    int free_pairs = 0;
    int by_degree = 0;
    for (int v = low; v < n_; ++v) {
      const Mask alive_after = ~((Mask{1} << (v + 1)) - 1) & full_mask();
      const Mask alive = ~((Mask{1} << low) - 1) & full_mask() & ~(Mask{1} << v);
      free_pairs += std::popcount(alive_after & ~adjacency_[v]);
      by_degree += std::popcount(alive & ~adjacency_[v]) / 3;
    }
    return std::min(free_pairs / 6, by_degree / 4);
  }

  Mask full_mask() const { return n_ >= 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  bool compatible(const Candidate& c) const {
    for (int i = 0; i < 4; ++i) {
      const int v = c.edge[i];
      if (adjacency_[v] & c.mask) return false;
    }
    return true;
  }

  bool forbidden_after_adding() const {
    if (family_.empty()) return false;
    Hypergraph h(4, n_, current_);
    const std::size_t idx = *h.find_edge(current_.back());
    for (const auto& f : family_) {
      if (find_config_using(h, f, idx)) return true;
    }
    return false;
  }

  bool out_of_budget() {
    if (aborted_) return true;
    if (nodes_ >= budget_.max_nodes) aborted_ = true;
    if ((nodes_ & 0xfff) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds) {
      aborted_ = true;
    }
    return aborted_;
  }

  void extend(std::size_t from) {
    if (current_.size() > best_.size()) best_ = current_;
    if (static_cast<int>(best_.size()) >= root_cap_) return;
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const Candidate& c = candidates_[i];
      if (!compatible(c)) continue;
      ++nodes_;
      if (out_of_budget()) return;
      if (static_cast<int>(current_.size()) + 1 + capacity_with(c) <=
          static_cast<int>(best_.size())) {
        continue;
      }
      current_.push_back(c.edge);
      for (int k = 0; k < 4; ++k) adjacency_[c.edge[k]] |= c.mask & ~(Mask{1} << c.edge[k]);
      bool skip = forbidden_after_adding();
      if (!skip && current_.size() <= 3) {
        Hypergraph prefix(4, n_, current_);
        skip = !seen_.insert(canonical_form(prefix)).second;
      }
      if (!skip) extend(i + 1);
      for (int k = 0; k < 4; ++k) adjacency_[c.edge[k]] &= ~(c.mask & ~(Mask{1} << c.edge[k]));
      current_.pop_back();
      if (aborted_ || static_cast<int>(best_.size()) >= root_cap_) return;
    }
  }

  // Capacity after tentatively adding c (later edges start at c's minimum).
  int capacity_with(const Candidate& c) {
    for (int k = 0; k < 4; ++k) adjacency_[c.edge[k]] |= c.mask & ~(Mask{1} << c.edge[k]);
    const int cap = capacity(c.min_vertex);
    for (int k = 0; k < 4; ++k) adjacency_[c.edge[k]] &= ~(c.mask & ~(Mask{1} << c.edge[k]));
    return cap;
  }

  int n_;
  std::span<const ForbiddenConfig> family_;
  Budget budget_;
  std::vector<Candidate> candidates_;
  std::vector<Mask> adjacency_;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
  std::unordered_set<std::string> seen_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  int root_cap_ = 0;
  Clock::time_point start_;
};

}  // namespace

SearchResult exact_ex(int n, std::span<const ForbiddenConfig> family, const Budget& budget) {
  if (n < 0) throw InputError("n must be non-negative");
  if (n > kMaxSearchVertices) {
    throw CapacityError("exact search supports at most " + std::to_string(kMaxSearchVertices) +
                        " vertices");
  }
  check_family(family);
  SearchResult r = Engine(n, family, budget).run();
  r.quantity = "ex4lin(n,F)";
  return r;
}

SearchResult exact_ex(int n, const ForbiddenConfig& config, const Budget& budget) {
  return exact_ex(n, std::span<const ForbiddenConfig>(&config, 1), budget);
}

SearchResult exact_packing(int m, const Budget& budget) {
  SearchResult r = exact_ex(m, std::span<const ForbiddenConfig>{}, budget);
  r.quantity = "D1(m,4,2)";
  return r;
}

namespace {

struct BruteForce {
  const std::vector<Candidate>& candidates;
  std::span<const ForbiddenConfig> family;
  int n;
  std::vector<Edge> current;
  std::vector<Mask> adjacency;
  int best = 0;

  void run(std::size_t from) {
    if (static_cast<int>(current.size()) > best && is_free(Hypergraph(4, n, current), family)) {
      best = static_cast<int>(current.size());
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Candidate& c = candidates[i];
      bool ok = true;
      for (int k = 0; k < 4 && ok; ++k) ok = (adjacency[c.edge[k]] & c.mask) == 0;
      if (!ok) continue;
      current.push_back(c.edge);
      for (int k = 0; k < 4; ++k) adjacency[c.edge[k]] |= c.mask & ~(Mask{1} << c.edge[k]);
      run(i + 1);
      for (int k = 0; k < 4; ++k) adjacency[c.edge[k]] &= ~(c.mask & ~(Mask{1} << c.edge[k]));
      current.pop_back();
    }
  }
};

}  // namespace

int brute_force_ex(int n, std::span<const ForbiddenConfig> family) {
  if (n < 0) throw InputError("n must be non-negative");
  if (n > kMaxBruteForceVertices) {
    throw CapacityError("brute force supports at most " +
                        std::to_string(kMaxBruteForceVertices) + " vertices");
  }
  check_family(family);
  const auto candidates = all_quadruples(n);
  BruteForce bf{candidates, family, n, {}, std::vector<Mask>(static_cast<std::size_t>(n), 0)};
  bf.run(0);
  return bf.best;
}

int brute_force_ex(int n, const ForbiddenConfig& config) {
  return brute_force_ex(n, std::span<const ForbiddenConfig>(&config, 1));
}

}  // namespace lintur
