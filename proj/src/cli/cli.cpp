#include "lintur/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lintur/bounds.hpp"
#include "lintur/constructions.hpp"
#include "lintur/patterns.hpp"
#include "lintur/text_format.hpp"

namespace lintur {

void RunReport::add(std::string claim, bool pass, std::string detail, std::string witness) {
  findings.push_back({std::move(claim), pass, std::move(detail), std::move(witness)});
}

int RunReport::exit_code() const {
  const bool ok =
      std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.pass; });
  return ok ? kExitPass : kExitClaimFailed;
}

std::string RunReport::format_text() const {
  std::ostringstream os;
  os << subcommand;
  for (const auto& [k, v] : parameters) os << "  " << k << '=' << v;
  os << '\n';
  std::size_t width = 0;
  for (const Finding& f : findings) width = std::max(width, f.claim.size());
  std::size_t passed = 0;
  for (const Finding& f : findings) {
    passed += f.pass ? 1 : 0;
    os << (f.pass ? "PASS  " : "FAIL  ");
    if (f.detail.empty() && f.witness_path.empty()) {
      os << f.claim;
    } else {
      os << std::left << std::setw(static_cast<int>(width)) << f.claim;
    }
    if (!f.detail.empty()) os << "  " << f.detail;
    if (!f.witness_path.empty()) os << "  [" << f.witness_path << ']';
    os << '\n';
  }
  os << "summary: " << passed << '/' << findings.size() << " passed\n";
  return os.str();
}

std::string RunReport::format_kv() const {
  std::ostringstream os;
  os << "subcommand=" << subcommand << '\n';
  for (const auto& [k, v] : parameters) os << "param." << k << '=' << v << '\n';
  for (std::size_t i = 0; i < findings.size(); ++i) {
    const Finding& f = findings[i];
    os << "finding." << i << ".claim=" << f.claim << '\n';
    os << "finding." << i << ".status=" << (f.pass ? "pass" : "fail") << '\n';
    os << "finding." << i << ".detail=" << f.detail << '\n';
    os << "finding." << i << ".witness=" << f.witness_path << '\n';
  }
  os << "findings=" << findings.size() << '\n';
  os << "exit_code=" << exit_code() << '\n';
  return os.str();
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& what) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InputError("bad " + what + ": '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::int64_t v = parse_int(text, "integer");
    return {v, v};
  }
  IntRange r{parse_int(std::string_view(text).substr(0, dots), "range start"),
             parse_int(std::string_view(text).substr(dots + 2), "range end")};
  if (r.lo > r.hi) throw InputError("empty range '" + text + "'");
  return r;
}

namespace {

struct Options {
  std::string format = "text";
  std::string n, k, m;
  std::vector<std::string> forbidden;
  std::string output;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_secs;
  int jobs = 1;
};

std::string edge_text(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i] + 1);
  }
  return s + "}";
}

std::int64_t single(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing ") + flag);
  const IntRange r = parse_range(text);
  if (r.lo != r.hi) throw InputError(std::string(flag) + " takes a single value here");
  return r.lo;
}

int as_int(std::int64_t v, const char* flag) {
  if (v < -1000000 || v > 1000000) throw InputError(std::string(flag) + " out of range");
  return static_cast<int>(v);
}

Budget budget_of(const Options& o) {
  Budget b = Budget::from_env();
  if (o.budget_nodes) b.max_nodes = *o.budget_nodes;
  if (o.budget_secs) b.max_seconds = *o.budget_secs;
  return b;
}

void emit(const RunReport& report, const Options& o, std::ostream& out) {
  out << (o.format == "kv" ? report.format_kv() : report.format_text());
}

void add_certificate(RunReport& report, const Certificate& cert, const std::string& witness) {
  for (const Claim& c : cert.claims) {
    std::string detail = c.params;
    if (!c.detail.empty()) detail += (detail.empty() ? "" : "; ") + c.detail;
    report.add(c.name, c.pass, detail, witness);
  }
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::string& file, std::vector<std::string> props, const Options& o,
               std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(file);
  if (props.empty()) props.push_back("linear");
  RunReport report;
  report.subcommand = "verify";
  report.parameters = {{"file", file},
                       {"r", std::to_string(h.uniformity())},
                       {"n", std::to_string(h.vertex_count())},
                       {"m", std::to_string(h.edge_count())}};
  for (const std::string& prop : props) {
    if (prop == "linear") {
      const auto bad = find_linearity_violation(h);
      report.add("linear", !bad,
                 bad ? "pair {" + std::to_string(bad->pair.first + 1) + "," +
                           std::to_string(bad->pair.second + 1) + "} in edges " +
                           edge_text(h.edge(bad->first_edge)) + " and " +
                           edge_text(h.edge(bad->second_edge))
                     : "");
    } else if (prop == "steiner") {
      const Certificate c = certify_steiner(h);
      std::string failed;
      for (const Claim& cl : c.claims) {
        if (!cl.pass) failed += (failed.empty() ? "" : ", ") + cl.name;
      }
      report.add("steiner", c.all_pass(), failed.empty() ? "every pair covered exactly once"
                                                         : "failed: " + failed);
    } else if (prop == "regular") {
      const auto seq = degree_sequence(h);
      const bool regular = seq.empty() || seq.front() == seq.back();
      report.add("regular", regular,
                 seq.empty() ? "no vertices"
                             : "degrees " + std::to_string(seq.back()) + ".." +
                                   std::to_string(seq.front()));
    } else if (prop == "acyclic") {
      if (!is_linear(h)) {
        report.add("acyclic", false, "not linear");
        continue;
      }
      const auto res = is_acyclic(h);
      std::string detail;
      if (res.acyclic) {
        detail = "order";
        for (std::size_t i : res.order) detail += ' ' + edge_text(h.edge(i));
      } else {
        detail = "no construction order exists";
      }
      report.add("acyclic", res.acyclic, detail);
    } else if (prop.rfind("free:", 0) == 0) {
      const ForbiddenConfig cfg = parse_config(prop.substr(5), h.uniformity());
      const auto emb = find_config(h, cfg);
      std::string detail;
      if (emb) {
        detail = "embedding";
        for (std::size_t i : emb->edge_map) detail += ' ' + edge_text(h.edge(i));
      }
      report.add("free:" + config_name(cfg), !emb, detail);
    } else {
      throw InputError("unknown property '" + prop +
                       "' (expected linear, steiner, regular, acyclic, free:<config>)");
    }
  }
  emit(report, o, out);
  return report.exit_code();
}

// --- construct ------------------------------------------------------------

int cmd_construct(const std::string& name, const Options& o, std::ostream& out) {
  RunReport report;
  report.subcommand = "construct " + name;
  Hypergraph h;
  Certificate cert;
  std::vector<std::pair<std::string, std::string>> extra;
  if (name == "s13" || name == "s16") {
    Construction c = steiner_system(name == "s13" ? 13 : 16);
    h = std::move(c.graph);
    cert = std::move(c.certificate);
  } else if (name == "sts9") {
    const ResolvableTripleSystem sts = sts9_resolvable();
    h = sts.base;
    cert = certify_resolvable(sts);
  } else if (name == "e4plus") {
    const int n = as_int(single(o.n, "-n"), "-n");
    E4PlusConstruction c = e4plus_lower_construction(n);
    h = std::move(c.graph);
    cert = std::move(c.certificate);
    report.parameters.push_back({"n", std::to_string(n)});
    extra = {{"copies", std::to_string(c.copies)},
             {"augmented", std::to_string(c.augmented)},
             {"epsilon", std::to_string(c.epsilon_target)}};
  } else if (name == "packing") {
    const int m = as_int(single(o.m, "-m"), "-m");
    report.parameters.push_back({"m", std::to_string(m)});
    Construction c = packing_optimal_small(m);
    h = std::move(c.graph);
    cert = std::move(c.certificate);
  } else if (name == "g-lower") {
    const int n = as_int(single(o.n, "-n"), "-n");
    const int k = as_int(single(o.k, "-k"), "-k");
    report.parameters.push_back({"n", std::to_string(n)});
    report.parameters.push_back({"k", std::to_string(k)});
    report.parameters.push_back({"seed", std::to_string(o.seed)});
    GConstruction c = g_lower_construction(n, k, o.seed);
    h = std::move(c.graph);
    cert = std::move(c.certificate);
    extra = {{"A", "1.." + std::to_string(k - 1)},
             {"perfect_classes", std::to_string(c.perfect_classes)}};
  } else if (name == "prop2") {
    const int n = as_int(single(o.n, "-n"), "-n");
    const int k = as_int(single(o.k, "-k"), "-k");
    report.parameters.push_back({"n", std::to_string(n)});
    report.parameters.push_back({"k", std::to_string(k)});
    Construction c = prop2_construction(n, k);
    h = std::move(c.graph);
    cert = std::move(c.certificate);
  } else {
    throw InputError("unknown construction '" + name +
                     "' (expected s13, s16, sts9, e4plus, packing, g-lower, prop2)");
  }
  report.parameters.push_back({"edges", std::to_string(h.edge_count())});
  for (auto& kv : extra) report.parameters.push_back(std::move(kv));
  if (!o.output.empty()) {
    write_hypergraph_file(o.output, h);
    add_certificate(report, cert, o.output);
    emit(report, o, out);
  } else {
    // Hypergraph on stdout, report as comments so the output stays parseable.
    add_certificate(report, cert, "");
    out << serialize(h);
    std::istringstream lines(o.format == "kv" ? report.format_kv() : report.format_text());
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  }
  return report.exit_code();
}

// --- bounds ---------------------------------------------------------------

int cmd_bounds(const std::string& quantity, const Options& o, std::ostream& out) {
  auto n = [&] { return single(o.n, "-n"); };
  auto k = [&] { return single(o.k, "-k"); };
  BoundReport r;
  if (quantity == "prop1") {
    r = prop1_bound(n(), k());
  } else if (quantity == "prop2") {
    r = prop2_bound(n(), k());
  } else if (quantity == "p3" || quantity == "prop3") {
    r = p3_bound(n());
  } else if (quantity == "th11") {
    r = th11_bound(n());
  } else if (quantity == "th12") {
    r = th12_bound(n());
  } else if (quantity == "th13") {
    r = th13_bound(n(), k());
  } else if (quantity == "packing") {
    r = packing_bound(single(o.m, "-m"));
  } else if (quantity == "g") {
    r = g_bounds(n(), k());
  } else if (quantity == "th14") {
    const std::int64_t kk = k();
    if (kk < 1) throw InputError("k must be positive");
    r.quantity = "n0(k) = 37(k-1)^2+3";
    r.params = {{"k", kk}};
    r.lower = r.upper = Rational(th14_threshold(kk));
    r.exact = th14_threshold(kk);
    r.provenance.push_back("ex4lin(n,M_k) = g(n,k) for n > n0(k)");
  } else {
    throw InputError("unknown quantity '" + quantity +
                     "' (expected prop1, prop2, p3, th11, th12, th13, packing, g, th14)");
  }
  out << (o.format == "kv" ? format_kv(r) : format_text(r));
  const ConsistencyResult c = check_consistency(r);
  for (const auto& f : c.findings) out << "inconsistent: " << f << '\n';
  return c.pass ? kExitPass : kExitClaimFailed;
}

// --- search ---------------------------------------------------------------

// Smallest applicable upper bound on ex4lin(n, family), with its source.
std::pair<std::optional<Rational>, std::string> family_upper(std::int64_t n,
                                                             const std::vector<ForbiddenConfig>& fam) {
  std::optional<Rational> best;
  std::string source;
  auto offer = [&](Rational v, std::string why) {
    if (!best || v < *best) {
      best = v;
      source = std::move(why);
    }
  };
  bool has_s3plus = false, has_p4 = false;
  for (const auto& f : fam) {
    const auto* t = std::get_if<TreePattern>(&f);
    if (!t) continue;
    const std::string name = config_name(f);
    const int k = t->edge_count();
    if (name == "S3plus") has_s3plus = true;
    if (name == "P4") has_p4 = true;
    if (k >= 2) offer(prop1_upper(n, k), "(3k-5)n");
    if (name == "P" + std::to_string(k)) {
      offer(th13_upper(n, k), "2.5kn");
      if (k == 2) offer(Rational(n / 4), "floor(n/4)");
      if (k == 3) offer(Rational(n), "n");
    }
    if (name == "E4plus" && n >= 4) offer(Rational(2 * n), "2n");
  }
  if (has_s3plus && has_p4) offer(Rational(5 * n, 4), "5n/4");
  return {best, source};
}

int cmd_search(const std::string& what, const Options& o, std::ostream& out, std::ostream& err) {
  const Budget budget = budget_of(o);
  RunReport report;
  SearchResult r;
  std::vector<ForbiddenConfig> family;
  if (what == "ex") {
    const int n = as_int(single(o.n, "-n"), "-n");
    if (o.forbidden.empty()) throw InputError("search ex needs at least one -F");
    for (const auto& f : o.forbidden) family.push_back(parse_config(f));
    r = exact_ex(n, family, budget);
  } else {
    r = exact_packing(as_int(single(o.m, "-m"), "-m"), budget);
  }
  report.subcommand = "search " + what;
  report.parameters = {{"quantity", r.quantity},
                       {what == "ex" ? "n" : "m", std::to_string(r.n)},
                       {"family", r.family},
                       {"value", std::to_string(r.value)},
                       {"completed", r.completed ? "true" : "false"},
                       {"nodes", std::to_string(r.nodes)}};
  const std::string witness = o.output;
  if (!witness.empty()) write_hypergraph_file(witness, r.witness);
  report.add("witness_edges=value", static_cast<int>(r.witness.edge_count()) == r.value,
             std::to_string(r.witness.edge_count()) + " edges", witness);
  report.add("witness_linear", is_linear(r.witness).has_value(), "", witness);
  if (!family.empty()) {
    report.add("witness_free", is_free(r.witness, family), r.family, witness);
    const auto [upper, source] = family_upper(r.n, family);
    if (upper) {
      report.add("value<=upper", Rational(r.value) <= *upper, source + " = " + to_string(*upper));
    }
  } else {
    const std::int64_t d = packing_number(r.n);
    const bool ok = r.completed ? r.value == d : r.value <= d;
    report.add(r.completed ? "value=D1(m,4,2)" : "value<=D1(m,4,2)", ok,
               "formula " + std::to_string(d));
  }
  emit(report, o, out);
  if (o.output.empty()) {
    std::istringstream lines(serialize(r.witness));
    out << "witness:\n";
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
  err << "search time " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  return report.exit_code();
}

// --- report ---------------------------------------------------------------

int cmd_report(const std::string& id, const Options& o, std::ostream& out) {
  ReportOptions ro;
  if (!o.n.empty()) ro.n = parse_range(o.n);
  if (!o.k.empty()) ro.k = parse_range(o.k);
  if (!o.m.empty()) ro.m = parse_range(o.m);
  ro.seed = o.seed;
  ro.budget = budget_of(o);
  ro.jobs = std::max(1, o.jobs);
  const RunReport report = run_report(id, ro);
  emit(report, o, out);
  return report.exit_code();
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear 3-/4-uniform hypergraphs: constructions, containment, bounds, search",
               "lintur"};
  app.require_subcommand(1, 1);
  Options o;

  std::string file;
  std::vector<std::string> props;
  auto* verify = app.add_subcommand("verify", "Check properties of a hypergraph file");
  verify->add_option("file", file, "Hypergraph file")->required();
  verify->add_option("properties", props,
                     "linear | steiner | regular | acyclic | free:<config> (default: linear)");
  add_common(verify, o);

  std::string name;
  auto* construct = app.add_subcommand("construct", "Build a certified construction");
  construct->add_option("name", name, "s13 | s16 | sts9 | e4plus | packing | g-lower | prop2")
      ->required();
  construct->add_option("-n", o.n, "Vertex count");
  construct->add_option("-k", o.k, "Parameter k");
  construct->add_option("-m", o.m, "Packing order");
  construct->add_option("--seed", o.seed, "Tie-break seed")->capture_default_str();
  construct->add_option("-o", o.output, "Write the hypergraph here");
  add_common(construct, o);

  std::string quantity;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound report");
  bounds->add_option("quantity", quantity,
                     "prop1 | prop2 | p3 | th11 | th12 | th13 | packing | g | th14")
      ->required();
  bounds->add_option("-n", o.n, "Vertex count");
  bounds->add_option("-k", o.k, "Parameter k");
  bounds->add_option("-m", o.m, "Packing order");
  add_common(bounds, o);

  auto* search = app.add_subcommand("search", "Exact branch-and-bound search");
  search->require_subcommand(1, 1);
  auto* search_ex = search->add_subcommand("ex", "Largest F-free linear 4-graph on n vertices");
  search_ex->add_option("-n", o.n, "Vertex count")->required();
  search_ex->add_option("-F", o.forbidden, "Forbidden configuration (repeatable)")->required();
  auto* search_packing = search->add_subcommand("packing", "Packing number D1(m,4,2)");
  search_packing->add_option("-m", o.m, "Packing order")->required();
  for (auto* cmd : {search_ex, search_packing}) {
    cmd->add_option("--budget-nodes", o.budget_nodes, "Node budget (default 1e8)");
    cmd->add_option("--budget-secs", o.budget_secs, "Time budget in seconds (default 300)");
    cmd->add_option("-o", o.output, "Write the witness here");
    add_common(cmd, o);
  }

  std::string id;
  auto* report = app.add_subcommand("report", "Cross-check one result end to end");
  report->add_option("id", id, "prop1 | prop2 | prop3 | th11 | th12 | th13 | th14 | lem41 | lem42")
      ->required();
  report->add_option("-n", o.n, "Vertex count or range a..b");
  report->add_option("-k", o.k, "k or range a..b");
  report->add_option("-m", o.m, "Packing order or range a..b");
  report->add_option("--seed", o.seed, "Tie-break seed")->capture_default_str();
  report->add_option("--budget-nodes", o.budget_nodes, "Search node budget");
  report->add_option("--budget-secs", o.budget_secs, "Search time budget in seconds");
  report->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  add_common(report, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, props, o, out);
    if (construct->parsed()) return cmd_construct(name, o, out);
    if (bounds->parsed()) return cmd_bounds(quantity, o, out);
    if (search_ex->parsed()) return cmd_search("ex", o, out, err);
    if (search_packing->parsed()) return cmd_search("packing", o, out, err);
    if (report->parsed()) return cmd_report(id, o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "failed: " << e.what() << '\n';
    return kExitClaimFailed;
  }
  return kExitUsage;
}

}  // namespace lintur
