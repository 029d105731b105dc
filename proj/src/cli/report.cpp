#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "lintur/bounds.hpp"
#include "lintur/cli.hpp"
#include "lintur/constructions.hpp"
#include "lintur/patterns.hpp"

namespace lintur {

namespace {

struct Point {
  std::int64_t n = 0, k = 0, m = 0;
};

using Findings = std::vector<Finding>;
using Check = std::function<Findings(const Point&)>;

std::string tag(const Point& p, bool n, bool k, bool m) {
  std::string s;
  auto add = [&](const char* key, std::int64_t v) {
    s += (s.empty() ? "" : " ") + std::string(key) + "=" + std::to_string(v);
  };
  if (n) add("n", p.n);
  if (k) add("k", p.k);
  if (m) add("m", p.m);
  return s;
}

void note(Findings& f, const std::string& where, std::string claim, bool pass,
          std::string detail = {}) {
  f.push_back({where + " " + claim, pass, std::move(detail), {}});
}

void certificate_findings(Findings& f, const std::string& where, const Certificate& cert) {
  for (const Claim& c : cert.claims) note(f, where, c.name, c.pass, c.detail);
}

void consistency_findings(Findings& f, const std::string& where, const BoundReport& report,
                          const Hypergraph* witness, bool claims_lower) {
  const ConsistencyResult c = check_consistency(report, witness, std::nullopt, claims_lower);
  std::string detail = "[" + to_string(report.lower) + ", " + to_string(report.upper) + "]";
  if (witness) detail = std::to_string(witness->edge_count()) + " edges in " + detail;
  for (const auto& s : c.findings) detail += "; " + s;
  note(f, where, "within " + report.quantity + " bounds", c.pass, detail);
}

Hypergraph matching(int n, int edges) {
  std::vector<Edge> e;
  for (int i = 0; i < edges; ++i) e.push_back(Edge{4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3});
  return Hypergraph(4, n, std::move(e));
}

// Copies of `block` followed by a matching on the remaining vertices.
Hypergraph copies_plus_matching(const Hypergraph& block, int n) {
  const int v = block.vertex_count();
  const int copies = n / v;
  const int rest = n - copies * v;
  return disjoint_union({disjoint_copies(block, copies), matching(rest, rest / 4)});
}

void free_finding(Findings& f, const std::string& where, const Hypergraph& h,
                  const ForbiddenConfig& cfg) {
  const auto emb = find_config(h, cfg);
  note(f, where, "free:" + config_name(cfg), !emb, emb ? "embedding found" : "");
}

// --- per-result checks ------------------------------------------------------

Findings check_prop1(const Point& p) {
  Findings f;
  const std::string where = tag(p, true, true, false);
  const BoundReport r = prop1_bound(p.n, p.k);
  note(f, where, "upper (3k-5)n", r.upper == Rational((3 * p.k - 5) * p.n), to_string(r.upper));
  if (prop2_lower(p.n, p.k).applicable && (3 * p.k - 2 == 4 || 3 * p.k - 2 == 13 ||
                                           3 * p.k - 2 == 16)) {
    const Construction c = prop2_construction(static_cast<int>(p.n), static_cast<int>(p.k));
    certificate_findings(f, where, c.certificate);
    if (p.k <= kMaxPatternEdges) free_finding(f, where, c.graph, path_pattern(static_cast<int>(p.k)));
    consistency_findings(f, where, r, &c.graph, true);
  } else {
    consistency_findings(f, where, r, nullptr, false);
  }
  return f;
}

Findings check_prop2(const Point& p) {
  Findings f;
  const std::string where = tag(p, true, true, false);
  const BoundReport r = prop2_bound(p.n, p.k);
  if (!r.lower_applicable) return f;
  if (!r.achievable) {
    note(f, where, "formula only", true,
         "no S(2,4," + std::to_string(3 * p.k - 2) + ") available; lower " + to_string(r.lower));
    consistency_findings(f, where, r, nullptr, false);
    return f;
  }
  const Construction c = prop2_construction(static_cast<int>(p.n), static_cast<int>(p.k));
  certificate_findings(f, where, c.certificate);
  note(f, where, "edges = n(k-1)/4", Rational(static_cast<std::int64_t>(c.graph.edge_count())) ==
                                         Rational(p.n * (p.k - 1), 4),
       std::to_string(c.graph.edge_count()));
  consistency_findings(f, where, r, &c.graph, true);
  return f;
}

Findings check_prop3(const Point& p, const Budget& budget) {
  Findings f;
  const std::string where = tag(p, true, false, false);
  const BoundReport r = p3_bound(p.n);
  const Hypergraph w = copies_plus_matching(steiner_2_4_13(), static_cast<int>(p.n));
  note(f, where, "linear", is_linear(w).has_value());
  free_finding(f, where, w, path_pattern(3));
  note(f, where, "witness reaches lower", Rational(static_cast<std::int64_t>(w.edge_count())) ==
                                              r.lower,
       std::to_string(w.edge_count()) + " = " + to_string(r.lower));
  if (r.exact) {
    note(f, where, "edges = n", static_cast<std::int64_t>(w.edge_count()) == p.n,
         std::to_string(w.edge_count()));
  }
  consistency_findings(f, where, r, &w, true);
  if (p.n <= 10) {
    const SearchResult s = exact_ex(static_cast<int>(p.n), path_pattern(3), budget);
    note(f, where, "search value <= n", s.value <= p.n,
         std::to_string(s.value) + (s.completed ? " (exact)" : " (budget hit)"));
  }
  return f;
}

Findings check_th11(const Point& p) {
  Findings f;
  const std::string where = tag(p, true, false, false);
  const BoundReport r = th11_bound(p.n);
  const Hypergraph w = copies_plus_matching(steiner_2_4_16(), static_cast<int>(p.n));
  note(f, where, "linear", is_linear(w).has_value());
  free_finding(f, where, w, s3_plus_pattern());
  free_finding(f, where, w, path_pattern(4));
  note(f, where, "witness reaches lower", Rational(static_cast<std::int64_t>(w.edge_count())) ==
                                              r.lower,
       std::to_string(w.edge_count()) + " = " + to_string(r.lower));
  if (r.exact) {
    note(f, where, "edges = 5n/4", static_cast<std::int64_t>(w.edge_count()) * 4 == 5 * p.n,
         std::to_string(w.edge_count()));
  }
  consistency_findings(f, where, r, &w, true);
  return f;
}

Findings check_th12(const Point& p) {
  Findings f;
  const std::string where = tag(p, true, false, false);
  const BoundReport r = th12_bound(p.n);
  const E4PlusConstruction c = e4plus_lower_construction(static_cast<int>(p.n));
  certificate_findings(f, where, c.certificate);
  consistency_findings(f, where, r, &c.graph, false);
  return f;
}

Findings check_th13(const Point& p) {
  Findings f;
  const std::string where = tag(p, true, true, false);
  const BoundReport r = th13_bound(p.n, p.k);
  note(f, where, "upper 2.5kn", th13_upper(p.n, p.k) == Rational(5 * p.k * p.n, 2),
       to_string(th13_upper(p.n, p.k)));
  std::optional<Hypergraph> w;
  const int n = static_cast<int>(p.n);
  if (p.k == 2) w = matching(n, n / 4);
  if (p.k == 3) w = copies_plus_matching(steiner_2_4_13(), n);
  if (p.k >= 4) w = copies_plus_matching(steiner_2_4_16(), n);
  if (w && p.k <= kMaxPatternEdges) {
    free_finding(f, where, *w, path_pattern(static_cast<int>(p.k)));
    consistency_findings(f, where, r, &*w, true);
  } else {
    consistency_findings(f, where, r, nullptr, false);
  }
  return f;
}

Findings check_th14(const Point& p, std::uint64_t seed) {
  Findings f;
  const std::string where = tag(p, false, true, false);
  const std::int64_t n0 = th14_threshold(p.k);
  note(f, where, "threshold 37(k-1)^2+3", n0 == 37 * (p.k - 1) * (p.k - 1) + 3,
       std::to_string(n0));
  if (p.k < 2) return f;
  const std::int64_t n = n0 + 1;
  const BoundReport g = g_bounds(n, p.k);
  if (n > kMaxVertices) {
    note(f, where, "formula only", true,
         "n0+1 = " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices) +
             " vertices; g in [" + to_string(g.lower) + ", " + to_string(g.upper) + "]");
    consistency_findings(f, where, g, nullptr, false);
    return f;
  }
  const GConstruction c = g_lower_construction(static_cast<int>(n), static_cast<int>(p.k), seed);
  certificate_findings(f, where + " n=" + std::to_string(n), c.certificate);
  consistency_findings(f, where + " n=" + std::to_string(n), g, &c.graph, true);
  return f;
}

LeaveClassification expected_leave(int m) {
  LeaveClassification c;
  c.vertex_count = m;
  switch (m % 12) {
    case 0: case 3: c.kind = LeaveClass::kTriangles; c.count = m / 3; break;
    case 1: case 4: c.kind = LeaveClass::kEmpty; break;
    case 2: case 8: c.kind = LeaveClass::kMatching; c.count = m / 2; break;
    case 5: case 11: c.kind = LeaveClass::kStarPlusMatching; c.count = (m - 5) / 2; break;
    case 7: case 10: c.kind = LeaveClass::kK33; break;
    default: c.kind = LeaveClass::kK6MinusK4Triangles; c.count = (m - 6) / 3; break;
  }
  return c;
}

bool is_table_order(std::int64_t m) {
  return m == 8 || m == 9 || m == 10 || m == 11 || m == 17 || m == 19;
}

Findings check_lem41(const Point& p, const Budget& budget) {
  Findings f;
  const std::string where = tag(p, false, false, true);
  const int m = static_cast<int>(p.m);
  if (m == 17) {
    const Construction c = packing_optimal_small(17);
    const auto cls = classify_leave(leave_graph(c.graph));
    note(f, where, "leave K1,16", cls.kind == LeaveClass::kStar && cls.count == 16,
         leave_class_name(cls));
    return f;
  }
  Hypergraph h;
  std::string source;
  if (is_table_order(m)) {
    h = packing_optimal_small(m).graph;
    source = "table";
  } else if (m <= 13) {
    const SearchResult s = exact_packing(m, budget);
    note(f, where, "search completed", s.completed, std::to_string(s.nodes) + " nodes");
    h = s.witness;
    source = "search";
  } else {
    note(f, where, "skipped", true, "no optimal packing available at this order");
    return f;
  }
  const auto cls = classify_leave(leave_graph(h));
  if (is_table_order(m)) {
    note(f, where, "leave (outside the classified residues)", true,
         leave_class_name(cls) + " from " + source);
    return f;
  }
  const auto want = expected_leave(m);
  note(f, where, "leave " + leave_class_name(want),
       cls.kind == want.kind && cls.count == want.count,
       "got " + leave_class_name(cls) + " from " + source);
  return f;
}

Findings check_lem42(const Point& p, const Budget& budget) {
  Findings f;
  const std::string where = tag(p, false, false, true);
  const int m = static_cast<int>(p.m);
  const std::int64_t d = packing_number(m);
  if (is_table_order(m)) {
    const Construction c = packing_optimal_small(m);
    certificate_findings(f, where, c.certificate);
  }
  if (m <= 13) {
    const SearchResult s = exact_packing(m, budget);
    note(f, where, "search = D1(m,4,2)", s.completed && s.value == d,
         std::to_string(s.value) + " vs " + std::to_string(d) +
             (s.completed ? "" : " (budget hit)"));
  } else if (m % 12 == 1 || m % 12 == 4) {
    note(f, where, "Steiner order", d * 12 == static_cast<std::int64_t>(m) * (m - 1),
         "D1 = m(m-1)/12 = " + std::to_string(d));
  } else if (!is_table_order(m)) {
    note(f, where, "formula only", true, "D1 = " + std::to_string(d));
  }
  return f;
}

std::vector<std::int64_t> values(const std::optional<IntRange>& r, std::int64_t lo,
                                 std::int64_t hi) {
  const IntRange use = r ? *r : IntRange{lo, hi};
  if (use.hi - use.lo > 100000) throw InputError("range too large");
  std::vector<std::int64_t> out;
  for (std::int64_t v = use.lo; v <= use.hi; ++v) out.push_back(v);
  return out;
}

Findings run_points(const std::vector<Point>& points, const Check& check, int jobs) {
  std::vector<Findings> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = check(points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Findings all;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::runtime_error& e) {
        // A construction that falls short is a failed claim, not bad input.
        all.push_back({"point " + std::to_string(i) + " error", false, e.what(), {}});
        continue;
      }
    }
    all.insert(all.end(), results[i].begin(), results[i].end());
  }
  return all;
}

std::string range_text(const std::vector<std::int64_t>& v) {
  if (v.empty()) return "none";
  if (v.size() == 1) return std::to_string(v.front());
  return std::to_string(v.front()) + ".." + std::to_string(v.back());
}

}  // namespace

RunReport run_report(const std::string& id, const ReportOptions& o) {
  RunReport report;
  report.subcommand = "report " + id;
  std::vector<Point> points;
  auto grid = [&](std::int64_t n_lo, std::int64_t n_hi, std::int64_t k_lo, std::int64_t k_hi) {
    const auto ns = values(o.n, n_lo, n_hi);
    const auto ks = values(o.k, k_lo, k_hi);
    for (auto n : ns)
      for (auto k : ks) points.push_back({n, k, 0});
    report.parameters = {{"n", range_text(ns)}, {"k", range_text(ks)}};
  };
  auto line = [&](const char* key, std::int64_t lo, std::int64_t hi) {
    const auto& r = key[0] == 'n' ? o.n : key[0] == 'k' ? o.k : o.m;
    const auto vs = values(r, lo, hi);
    for (auto v : vs) {
      Point p;
      (key[0] == 'n' ? p.n : key[0] == 'k' ? p.k : p.m) = v;
      points.push_back(p);
    }
    report.parameters = {{key, range_text(vs)}};
  };

  Check check;
  if (id == "prop1") {
    grid(1, 32, 2, 6);
    check = check_prop1;
  } else if (id == "prop2") {
    grid(1, 32, 2, 6);
    check = check_prop2;
  } else if (id == "prop3") {
    line("n", 13, 26);
    check = [&](const Point& p) { return check_prop3(p, o.budget); };
  } else if (id == "th11") {
    line("n", 16, 32);
    check = check_th11;
  } else if (id == "th12") {
    line("n", 13, 40);
    check = check_th12;
  } else if (id == "th13") {
    grid(1, 30, 1, 6);
    check = check_th13;
  } else if (id == "th14") {
    line("k", 1, 4);
    check = [&](const Point& p) { return check_th14(p, o.seed); };
  } else if (id == "lem41") {
    line("m", 4, 13);
    check = [&](const Point& p) { return check_lem41(p, o.budget); };
  } else if (id == "lem42") {
    line("m", 4, 13);
    check = [&](const Point& p) { return check_lem42(p, o.budget); };
  } else {
    throw InputError("unknown report '" + id +
                     "' (expected prop1, prop2, prop3, th11, th12, th13, th14, lem41, lem42)");
  }
  report.parameters.push_back({"seed", std::to_string(o.seed)});
  report.findings = run_points(points, check, o.jobs);
  return report;
}

}  // namespace lintur
