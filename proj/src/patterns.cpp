#include "lintur/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

namespace lintur {

TreePattern::TreePattern(int uniformity, std::vector<Attachment> attachments, std::string name)
    : r_(uniformity), attachments_(std::move(attachments)), name_(std::move(name)) {
  if (r_ < 3 || r_ > kMaxUniformity) throw InputError("pattern uniformity must be 3 or 4");
  if (edge_count() > kMaxPatternEdges) {
    throw CapacityError("pattern has " + std::to_string(edge_count()) + " edges; at most " +
                        std::to_string(kMaxPatternEdges) + " supported");
  }
  edge_vertices_.push_back({});
  for (Vertex v = 0; v < r_; ++v) edge_vertices_[0].push_back(v);
  Vertex next = r_;
  for (std::size_t i = 0; i < attachments_.size(); ++i) {
    const Attachment& a = attachments_[i];
    const int self = static_cast<int>(i) + 1;
    if (a.edge < 0 || a.edge >= self) {
      throw InputError("attachment of edge " + std::to_string(self) +
                       " must reference an earlier edge");
    }
    if (a.slot < 0 || a.slot >= r_) {
      throw InputError("attachment slot " + std::to_string(a.slot) + " out of range");
    }
    std::vector<Vertex> vs{edge_vertices_[a.edge][a.slot]};
    for (int s = 1; s < r_; ++s) vs.push_back(next++);
    edge_vertices_.push_back(std::move(vs));
  }
  degrees_.assign(static_cast<std::size_t>(vertex_count()), 0);
  for (const auto& vs : edge_vertices_) {
    for (Vertex v : vs) ++degrees_[v];
  }
}

Hypergraph TreePattern::realize() const {
  std::vector<Edge> edges;
  for (const auto& vs : edge_vertices_) edges.emplace_back(vs);
  return Hypergraph(r_, vertex_count(), std::move(edges));
}

TreePattern TreePattern::rerooted(int edge, std::vector<int>* edge_map,
                                  std::vector<Vertex>* vertex_map) const {
  const int k = edge_count();
  if (edge < 0 || edge >= k) throw InputError("re-root edge out of range");

  std::vector<std::vector<int>> edges_of(static_cast<std::size_t>(vertex_count()));
  for (int e = 0; e < k; ++e) {
    for (Vertex v : edge_vertices_[e]) edges_of[v].push_back(e);
  }

  // BFS over edges; new slots follow the old slot order with the attach
  // vertex rotated to the front.
  std::vector<int> new_index(static_cast<std::size_t>(k), -1);
  std::vector<int> order;
  std::vector<std::vector<Vertex>> new_slots(static_cast<std::size_t>(k));
  std::vector<Attachment> atts;
  new_index[edge] = 0;
  order.push_back(edge);
  new_slots[edge] = edge_vertices_[edge];
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int e = order[head];
    for (std::size_t s = 0; s < new_slots[e].size(); ++s) {
      const Vertex v = new_slots[e][s];
      for (int f : edges_of[v]) {
        if (new_index[f] >= 0) continue;
        new_index[f] = static_cast<int>(order.size());
        order.push_back(f);
        std::vector<Vertex> slots{v};
        for (Vertex w : edge_vertices_[f]) {
          if (w != v) slots.push_back(w);
        }
        new_slots[f] = std::move(slots);
        atts.push_back({new_index[e], static_cast<int>(s)});
      }
    }
  }

  TreePattern out(r_, std::move(atts), name_);
  if (edge_map) edge_map->assign(order.begin(), order.end());
  if (vertex_map) {
    vertex_map->assign(static_cast<std::size_t>(vertex_count()), -1);
    for (int ne = 0; ne < k; ++ne) {
      const auto& nv = out.edge_vertices_[ne];
      const auto& ov = new_slots[order[ne]];
      for (std::size_t s = 0; s < nv.size(); ++s) (*vertex_map)[nv[s]] = ov[s];
    }
  }
  return out;
}

TreePattern path_pattern(int k, int uniformity) {
  if (k < 1) throw InputError("path needs k >= 1");
  std::vector<Attachment> atts;
  for (int i = 1; i < k; ++i) atts.push_back({i - 1, uniformity - 1});
  return TreePattern(uniformity, std::move(atts), "P" + std::to_string(k));
}

TreePattern star_pattern(int k, int uniformity) {
  if (k < 1) throw InputError("star needs k >= 1");
  std::vector<Attachment> atts(static_cast<std::size_t>(k - 1), Attachment{0, 0});
  return TreePattern(uniformity, std::move(atts), "S" + std::to_string(k));
}

TreePattern s3_plus_pattern(int uniformity) {
  return TreePattern(uniformity, {{0, 0}, {0, 0}, {1, 1}}, "S3plus");
}

TreePattern e4_plus_pattern(int uniformity) {
  return TreePattern(uniformity, {{0, 0}, {0, 1}, {0, 2}}, "E4plus");
}

TreePattern named_pattern(std::string_view name, int k, int uniformity) {
  if (name == "S3plus" || name == "S3_plus") return s3_plus_pattern(uniformity);
  if (name == "E4plus" || name == "E4_plus") return e4_plus_pattern(uniformity);
  if (k > kMaxPatternEdges) {
    throw CapacityError("pattern size " + std::to_string(k) + " exceeds " +
                        std::to_string(kMaxPatternEdges));
  }
  if (name == "P" || name == "P_k") return path_pattern(k, uniformity);
  if (name == "S" || name == "S_k") return star_pattern(k, uniformity);
  throw InputError("unknown pattern '" + std::string(name) + "'");
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace

ForbiddenConfig parse_config(std::string_view text, int uniformity) {
  if (text == "S3plus" || text == "E4plus") return named_pattern(text, 0, uniformity);
  if (text.starts_with("T:")) {
    std::vector<Attachment> atts;
    std::string_view rest = text.substr(2);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      auto dot = item.find('.');
      if (dot == std::string_view::npos) {
        throw InputError("attachment '" + std::string(item) + "' must be edge.slot");
      }
      atts.push_back({parse_int(item.substr(0, dot), text), parse_int(item.substr(dot + 1), text)});
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return TreePattern(uniformity, std::move(atts), std::string(text));
  }
  if (text.size() >= 2 && (text[0] == 'P' || text[0] == 'S' || text[0] == 'M')) {
    int k = parse_int(text.substr(1), text);
    if (k < 1) throw InputError("pattern size must be at least 1 in '" + std::string(text) + "'");
    if (text[0] == 'M') return MatchingPattern{k};
    return named_pattern(text.substr(0, 1), k, uniformity);
  }
  throw InputError("unknown configuration '" + std::string(text) + "'");
}

std::string config_name(const ForbiddenConfig& config) {
  if (const auto* m = std::get_if<MatchingPattern>(&config)) return "M" + std::to_string(m->k);
  return std::get<TreePattern>(config).name();
}

namespace {

// Backtracking embedder. Pattern edges are placed in attachment order; a
// pattern vertex gets its host image only when a later edge attaches to it
// (or at the end), so symmetric slots are never enumerated twice.
class TreeEmbedder {
 public:
  TreeEmbedder(const Hypergraph& host, const TreePattern& pattern)
      : host_(host),
        pattern_(pattern),
        edge_image_(static_cast<std::size_t>(pattern.edge_count())),
        vertex_image_(static_cast<std::size_t>(pattern.vertex_count()), -1) {}

  std::optional<Embedding> run(std::span<const std::size_t> roots) {
    for (std::size_t h : roots) {
      edge_image_[0] = h;
      used_ = host_.edge_mask(h);
      if (extend(1)) return finish();
    }
    return std::nullopt;
  }

 private:
  bool extend(int i) {
    if (i == pattern_.edge_count()) return true;
    const Attachment& a = pattern_.attachments()[i - 1];
    const Vertex p = pattern_.edge_vertices()[a.edge][a.slot];
    const int need = pattern_.vertex_degrees()[p];

    if (vertex_image_[p] >= 0) return place(i, vertex_image_[p]);

    const Edge& parent = host_.edge(edge_image_[a.edge]);
    for (Vertex x : parent) {
      if (assigned_.test(static_cast<std::size_t>(x))) continue;
      if (static_cast<int>(host_.incident(x).size()) < need) continue;
      vertex_image_[p] = x;
      assigned_.set(static_cast<std::size_t>(x));
      if (place(i, x)) return true;
      assigned_.reset(static_cast<std::size_t>(x));
      vertex_image_[p] = -1;
    }
    return false;
  }

  // Tries every host edge through x that meets the current image only in x.
  bool place(int i, Vertex x) {
    VertexSet only_x;
    only_x.set(static_cast<std::size_t>(x));
    for (std::size_t h : host_.incident(x)) {
      const VertexSet& m = host_.edge_mask(h);
      if ((m & used_) != only_x) continue;
      edge_image_[i] = h;
      VertexSet saved = used_;
      used_ |= m;
      if (extend(i + 1)) return true;
      used_ = saved;
    }
    return false;
  }

  Embedding finish() {
    Embedding emb;
    emb.edge_map = edge_image_;
    emb.vertex_map = vertex_image_;
    VertexSet taken = assigned_;
    for (int e = 0; e < pattern_.edge_count(); ++e) {
      const Edge& he = host_.edge(edge_image_[e]);
      for (Vertex p : pattern_.edge_vertices()[e]) {
        if (emb.vertex_map[p] >= 0) continue;
        for (Vertex x : he) {
          if (!taken.test(static_cast<std::size_t>(x))) {
            emb.vertex_map[p] = x;
            taken.set(static_cast<std::size_t>(x));
            break;
          }
        }
      }
    }
    return emb;
  }

  const Hypergraph& host_;
  const TreePattern& pattern_;
  std::vector<std::size_t> edge_image_;
  std::vector<Vertex> vertex_image_;
  VertexSet used_;
  VertexSet assigned_;
};

std::vector<std::size_t> roots_by_degree(const Hypergraph& host) {
  std::vector<std::vector<int>> dv(host.edge_count());
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    for (Vertex v : host.edge(i)) dv[i].push_back(static_cast<int>(host.incident(v).size()));
    std::sort(dv[i].begin(), dv[i].end(), std::greater<>());
  }
  std::vector<std::size_t> order(host.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dv[a] > dv[b]; });
  return order;
}

void check_uniformity(const Hypergraph& host, int r) {
  if (host.uniformity() != r) {
    throw InputError("pattern uniformity " + std::to_string(r) + " differs from host uniformity " +
                     std::to_string(host.uniformity()));
  }
}

}  // namespace

std::optional<Embedding> contains_tree(const Hypergraph& host, const TreePattern& pattern) {
  check_uniformity(host, pattern.uniformity());
  if (host.edge_count() < static_cast<std::size_t>(pattern.edge_count())) return std::nullopt;
  auto roots = roots_by_degree(host);
  return TreeEmbedder(host, pattern).run(roots);
}

std::optional<Embedding> contains_tree_using(const Hypergraph& host, const TreePattern& pattern,
                                             std::size_t host_edge) {
  check_uniformity(host, pattern.uniformity());
  if (host_edge >= host.edge_count()) throw InputError("host edge out of range");
  const std::size_t root[] = {host_edge};
  for (int e = 0; e < pattern.edge_count(); ++e) {
    std::vector<int> edge_map;
    std::vector<Vertex> vertex_map;
    TreePattern re = pattern.rerooted(e, &edge_map, &vertex_map);
    auto emb = TreeEmbedder(host, re).run(root);
    if (!emb) continue;
    Embedding out;
    out.edge_map.assign(emb->edge_map.size(), 0);
    out.vertex_map.assign(emb->vertex_map.size(), -1);
    for (std::size_t i = 0; i < edge_map.size(); ++i) out.edge_map[edge_map[i]] = emb->edge_map[i];
    for (std::size_t i = 0; i < vertex_map.size(); ++i) {
      out.vertex_map[vertex_map[i]] = emb->vertex_map[i];
    }
    return out;
  }
  return std::nullopt;
}

namespace {

bool extend_matching(const Hypergraph& host, int k, std::size_t from, VertexSet used,
                     std::vector<std::size_t>& chosen) {
  if (static_cast<int>(chosen.size()) == k) return true;
  const std::size_t need = static_cast<std::size_t>(k) - chosen.size();
  for (std::size_t i = from; i + need <= host.edge_count(); ++i) {
    const VertexSet& m = host.edge_mask(i);
    if ((m & used).any()) continue;
    chosen.push_back(i);
    if (extend_matching(host, k, i + 1, used | m, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

Embedding matching_embedding(const Hypergraph& host, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  Embedding emb;
  emb.edge_map = chosen;
  for (std::size_t h : chosen) {
    for (Vertex v : host.edge(h)) emb.vertex_map.push_back(v);
  }
  return emb;
}

}  // namespace

std::optional<Embedding> contains_matching(const Hypergraph& host, int k) {
  if (k < 1) throw InputError("matching size must be at least 1");
  // Greedy pass first; it only ever proves presence.
  std::vector<std::size_t> chosen;
  VertexSet used;
  for (std::size_t i = 0; i < host.edge_count() && static_cast<int>(chosen.size()) < k; ++i) {
    if ((host.edge_mask(i) & used).none()) {
      chosen.push_back(i);
      used |= host.edge_mask(i);
    }
  }
  if (static_cast<int>(chosen.size()) == k) return matching_embedding(host, chosen);

  chosen.clear();
  if (extend_matching(host, k, 0, VertexSet{}, chosen)) return matching_embedding(host, chosen);
  return std::nullopt;
}

std::optional<Embedding> contains_matching_using(const Hypergraph& host, int k,
                                                 std::size_t host_edge) {
  if (k < 1) throw InputError("matching size must be at least 1");
  if (host_edge >= host.edge_count()) throw InputError("host edge out of range");
  std::vector<std::size_t> chosen{host_edge};
  std::vector<std::size_t> rest;
  const VertexSet& base = host.edge_mask(host_edge);
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    if ((host.edge_mask(i) & base).none()) rest.push_back(i);
  }
  if (k == 1) return matching_embedding(host, chosen);
  // Search the edges disjoint from host_edge only.
  std::vector<Edge> sub;
  for (std::size_t i : rest) sub.push_back(host.edge(i));
  Hypergraph reduced(host.uniformity(), host.vertex_count(), std::move(sub));
  auto inner = contains_matching(reduced, k - 1);
  if (!inner) return std::nullopt;
  for (std::size_t i : inner->edge_map) chosen.push_back(rest[i]);
  return matching_embedding(host, chosen);
}

std::optional<Embedding> find_config(const Hypergraph& host, const ForbiddenConfig& config) {
  if (const auto* m = std::get_if<MatchingPattern>(&config)) return contains_matching(host, m->k);
  return contains_tree(host, std::get<TreePattern>(config));
}

std::optional<Embedding> find_config_using(const Hypergraph& host, const ForbiddenConfig& config,
                                           std::size_t host_edge) {
  if (const auto* m = std::get_if<MatchingPattern>(&config)) {
    return contains_matching_using(host, m->k, host_edge);
  }
  return contains_tree_using(host, std::get<TreePattern>(config), host_edge);
}

bool validate_embedding(const Hypergraph& host, const TreePattern& pattern,
                        const Embedding& emb) {
  const auto k = static_cast<std::size_t>(pattern.edge_count());
  const auto nv = static_cast<std::size_t>(pattern.vertex_count());
  if (emb.edge_map.size() != k || emb.vertex_map.size() != nv) return false;
  if (host.uniformity() != pattern.uniformity()) return false;

  std::vector<std::size_t> edges = emb.edge_map;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
  if (!edges.empty() && edges.back() >= host.edge_count()) return false;

  std::vector<Vertex> verts = emb.vertex_map;
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
  if (!verts.empty() && (verts.front() < 0 || verts.back() >= host.vertex_count())) return false;

  for (std::size_t e = 0; e < k; ++e) {
    std::vector<Vertex> image;
    for (Vertex p : pattern.edge_vertices()[e]) image.push_back(emb.vertex_map[p]);
    if (Edge(image) != host.edge(emb.edge_map[e])) return false;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& pa = pattern.edge_vertices()[a];
      const auto& pb = pattern.edge_vertices()[b];
      std::size_t shared = 0;
      for (Vertex v : pa) shared += std::count(pb.begin(), pb.end(), v);
      std::size_t host_shared =
          (host.edge_mask(emb.edge_map[a]) & host.edge_mask(emb.edge_map[b])).count();
      if (shared != host_shared) return false;
    }
  }
  return true;
}

bool validate_matching(const Hypergraph& host, int k, const Embedding& emb) {
  const int r = host.uniformity();
  if (static_cast<int>(emb.edge_map.size()) != k ||
      static_cast<int>(emb.vertex_map.size()) != k * r) {
    return false;
  }
  VertexSet seen;
  for (int i = 0; i < k; ++i) {
    if (emb.edge_map[i] >= host.edge_count()) return false;
    std::vector<Vertex> image(emb.vertex_map.begin() + i * r, emb.vertex_map.begin() + (i + 1) * r);
    for (Vertex v : image) {
      if (v < 0 || v >= host.vertex_count() || seen.test(static_cast<std::size_t>(v))) return false;
      seen.set(static_cast<std::size_t>(v));
    }
    if (Edge(image) != host.edge(emb.edge_map[i])) return false;
  }
  return true;
}

bool validate_config(const Hypergraph& host, const ForbiddenConfig& config,
                     const Embedding& emb) {
  if (const auto* m = std::get_if<MatchingPattern>(&config)) return validate_matching(host, m->k, emb);
  return validate_embedding(host, std::get<TreePattern>(config), emb);
}

bool is_free(const Hypergraph& host, std::span<const ForbiddenConfig> family) {
  for (const auto& f : family) {
    if (find_config(host, f)) return false;
  }
  return true;
}

bool is_free(const Hypergraph& host, const ForbiddenConfig& config) {
  return !find_config(host, config);
}

}  // namespace lintur
