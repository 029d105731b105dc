#include <algorithm>
#include <numeric>

#include "lintur/constructions.hpp"

namespace lintur {

namespace {

struct GraphComponent {
  std::vector<Vertex> vertices;
  std::vector<VertexPair> edges;
};

struct Split {
  std::vector<GraphComponent> parts;  // components with at least one edge
  int isolated = 0;
};

Split split(const LeaveGraph& g) {
  const int n = g.vertex_count;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<int> deg(n, 0);
  for (auto [u, v] : g.uncovered_pairs) {
    parent[find(u)] = find(v);
    ++deg[u];
    ++deg[v];
  }
  Split out;
  std::vector<int> slot(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 0) {
      ++out.isolated;
      continue;
    }
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.parts.size());
      out.parts.emplace_back();
    }
    out.parts[slot[root]].vertices.push_back(v);
  }
  for (auto e : g.uncovered_pairs) out.parts[slot[find(e.first)]].edges.push_back(e);
  return out;
}

std::vector<int> degrees(const GraphComponent& c) {
  std::vector<int> d;
  for (Vertex v : c.vertices) {
    int k = 0;
    for (auto [a, b] : c.edges) k += (a == v || b == v) ? 1 : 0;
    d.push_back(k);
  }
  std::sort(d.rbegin(), d.rend());
  return d;
}

bool is_triangle(const GraphComponent& c) { return c.vertices.size() == 3 && c.edges.size() == 3; }
bool is_k2(const GraphComponent& c) { return c.vertices.size() == 2; }

bool is_star(const GraphComponent& c) {
  const std::size_t t = c.edges.size();
  return c.vertices.size() == t + 1 && degrees(c).front() == static_cast<int>(t);
}

bool is_k33(const GraphComponent& c) {
  if (c.vertices.size() != 6 || c.edges.size() != 9) return false;
  const auto d = degrees(c);
  if (!std::all_of(d.begin(), d.end(), [](int x) { return x == 3; })) return false;
  // 3-regular on six vertices: K_{3,3} or the prism; only the prism has a triangle.
  for (auto [a, b] : c.edges)
    for (auto [x, y] : c.edges) {
      if (a == x && b < y) {
        for (auto [p, q] : c.edges) {
          if ((p == b && q == y) || (p == y && q == b)) return false;
        }
      }
    }
  return true;
}

// K6 minus the edges of a K4: two adjacent vertices joined to four
// independent ones.
bool is_k6_minus_k4(const GraphComponent& c) {
  if (c.vertices.size() != 6 || c.edges.size() != 9) return false;
  return degrees(c) == std::vector<int>{5, 5, 2, 2, 2, 2};
}

}  // namespace

std::string leave_class_name(const LeaveClassification& c) {
  const std::string k = std::to_string(c.count);
  switch (c.kind) {
    case LeaveClass::kEmpty: return "empty";
    case LeaveClass::kTriangles: return k + "K3";
    case LeaveClass::kMatching: return k + "K2";
    case LeaveClass::kStarPlusMatching: return "K1,4+" + k + "K2";
    case LeaveClass::kK33: return "K3,3";
    case LeaveClass::kK6MinusK4Triangles: return "(K6-K4)+" + k + "K3";
    case LeaveClass::kStar: return "K1," + k;
    case LeaveClass::kOther: return "other";
  }
  return "other";
}

LeaveClassification classify_leave(const LeaveGraph& leave) {
  LeaveClassification out;
  out.vertex_count = leave.vertex_count;
  const Split s = split(leave);
  const auto& parts = s.parts;
  auto count_if = [&](auto pred) {
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), pred));
  };
  const int parts_n = static_cast<int>(parts.size());

  if (parts.empty()) {
    out.kind = LeaveClass::kEmpty;
    return out;
  }
  if (s.isolated == 0 && count_if(is_triangle) == parts_n) {
    out.kind = LeaveClass::kTriangles;
    out.count = parts_n;
    return out;
  }
  if (s.isolated == 0 && count_if(is_k2) == parts_n) {
    out.kind = LeaveClass::kMatching;
    out.count = parts_n;
    return out;
  }
  auto is_k14 = [](const GraphComponent& c) { return c.edges.size() == 4 && is_star(c); };
  if (s.isolated == 0 && count_if(is_k14) == 1 && count_if(is_k2) == parts_n - 1) {
    out.kind = LeaveClass::kStarPlusMatching;
    out.count = parts_n - 1;
    return out;
  }
  if (parts_n == 1 && is_k33(parts[0])) {
    out.kind = LeaveClass::kK33;
    return out;
  }
  if (s.isolated == 0 && count_if(is_k6_minus_k4) == 1 && count_if(is_triangle) == parts_n - 1) {
    out.kind = LeaveClass::kK6MinusK4Triangles;
    out.count = parts_n - 1;
    return out;
  }
  if (parts_n == 1 && is_star(parts[0])) {
    out.kind = LeaveClass::kStar;
    out.count = static_cast<int>(parts[0].edges.size());
    return out;
  }
  out.kind = LeaveClass::kOther;
  return out;
}

LeaveGraph render_leave(const LeaveClassification& c) {
  LeaveGraph g;
  g.vertex_count = c.vertex_count;
  auto& e = g.uncovered_pairs;
  Vertex next = 0;
  auto triangles = [&](int count) {
    for (int i = 0; i < count; ++i, next += 3) {
      e.push_back({next, next + 1});
      e.push_back({next, next + 2});
      e.push_back({next + 1, next + 2});
    }
  };
  auto star = [&](int leaves) {
    for (int i = 1; i <= leaves; ++i) e.push_back({next, next + i});
    next += leaves + 1;
  };
  switch (c.kind) {
    case LeaveClass::kEmpty: break;
    case LeaveClass::kTriangles: triangles(c.count); break;
    case LeaveClass::kMatching:
      for (int i = 0; i < c.count; ++i, next += 2) e.push_back({next, next + 1});
      break;
    case LeaveClass::kStarPlusMatching:
      star(4);
      for (int i = 0; i < c.count; ++i, next += 2) e.push_back({next, next + 1});
      break;
    case LeaveClass::kK33:
      for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b) e.push_back({a, b});
      next = 6;
      break;
    case LeaveClass::kK6MinusK4Triangles:
      e.push_back({0, 1});
      for (Vertex x = 2; x < 6; ++x) {
        e.push_back({0, x});
        e.push_back({1, x});
      }
      next = 6;
      triangles(c.count);
      break;
    case LeaveClass::kStar: star(c.count); break;
    case LeaveClass::kOther: throw InputError("cannot render an unclassified leave");
  }
  if (next > c.vertex_count) throw InputError("classified shape exceeds the vertex count");
  std::sort(e.begin(), e.end());
  return g;
}

}  // namespace lintur
