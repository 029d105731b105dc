#include "lintur/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace lintur {

std::int64_t floor_of(const Rational& q) {
  std::int64_t num = q.numerator(), den = q.denominator();  // den > 0
  std::int64_t d = num / den;
  if (num % den != 0 && num < 0) --d;
  return d;
}

std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return floor_of(Rational(a, b)); }

BoundReport make_report(std::string quantity,
                        std::vector<std::pair<std::string, std::int64_t>> params) {
  BoundReport r;
  r.quantity = std::move(quantity);
  r.params = std::move(params);
  return r;
}

}  // namespace

Rational prop1_upper(std::int64_t n, std::int64_t k) {
  require(k > 1, "the tree bound needs k > 1");
  require(n >= 0, "n must be non-negative");
  return Rational((3 * k - 5) * n);
}

Prop2Value prop2_lower(std::int64_t n, std::int64_t k) {
  const std::int64_t v = 3 * k - 2;
  const bool applicable = v > 0 && n % v == 0 && (v % 12 == 1 || v % 12 == 4);
  return {Rational(n * (k - 1), 4), applicable};
}

BoundReport prop1_bound(std::int64_t n, std::int64_t k) {
  BoundReport r = make_report("ex4lin(n,T_k)", {{"n", n}, {"k", k}});
  r.upper = prop1_upper(n, k);
  r.provenance.push_back("upper (3k-5)n = " + to_string(r.upper));
  auto p2 = prop2_lower(n, k);
  if (p2.applicable) {
    r.lower = p2.value;
    r.provenance.push_back("lower n(k-1)/4 = " + to_string(p2.value) +
                           " from disjoint S(2,4," + std::to_string(3 * k - 2) + ")");
  } else {
    r.provenance.push_back("lower 0 (no Steiner decomposition for these parameters)");
  }
  return r;
}

BoundReport prop2_bound(std::int64_t n, std::int64_t k) {
  require(k > 1, "the star bound needs k > 1");
  require(n >= 0, "n must be non-negative");
  BoundReport r = make_report("ex4lin(n,S_k)", {{"n", n}, {"k", k}});
  auto p2 = prop2_lower(n, k);
  // An S_k-free system has maximum degree k-1.
  r.upper = std::min(prop1_upper(n, k), Rational(n * (k - 1), 4));
  r.provenance.push_back("upper min((3k-5)n, n(k-1)/4) = " + to_string(r.upper));
  r.lower_applicable = p2.applicable;
  if (p2.applicable) {
    r.lower = p2.value;
    r.exact = floor_of(p2.value);
    const std::int64_t v = 3 * k - 2;
    r.provenance.push_back("lower n(k-1)/4 = " + to_string(p2.value) + " from " +
                           std::to_string(n / v) + " disjoint S(2,4," + std::to_string(v) + ")");
    if (v == 4 || v == 13 || v == 16) {
      r.achievable = true;
      r.witness = "prop2_construction(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    }
  } else {
    r.provenance.push_back("lower formula inapplicable: needs (3k-2) | n and 3k-2 = 1,4 mod 12");
  }
  return r;
}

BoundReport p3_bound(std::int64_t n) {
  require(n >= 0, "n must be non-negative");
  BoundReport r = make_report("ex4lin(n,P3)", {{"n", n}});
  r.upper = Rational(n);
  r.lower = Rational(13 * (n / 13) + (n % 13) / 4);
  r.provenance.push_back("upper n");
  r.provenance.push_back("lower " + to_string(r.lower) +
                         " from disjoint S(2,4,13) copies plus a matching on the rest");
  if (n % 13 == 0) {
    r.exact = n;
    r.achievable = true;
    r.witness = "disjoint_union of " + std::to_string(n / 13) + " x S(2,4,13)";
  }
  return r;
}

BoundReport th11_bound(std::int64_t n) {
  require(n >= 0, "n must be non-negative");
  BoundReport r = make_report("ex4lin(n,{S3plus,P4})", {{"n", n}});
  r.upper = Rational(5 * n, 4);
  r.lower = Rational(20 * (n / 16) + (n % 16) / 4);
  r.provenance.push_back("upper 5n/4 = " + to_string(r.upper));
  r.provenance.push_back("lower " + to_string(r.lower) +
                         " from disjoint S(2,4,16) copies plus a matching on the rest");
  if (n % 16 == 0) {
    r.exact = 5 * n / 4;
    r.achievable = true;
    r.witness = "disjoint_union of " + std::to_string(n / 16) + " x S(2,4,16)";
  }
  return r;
}

int epsilon(std::int64_t n) {
  require(n >= 4, "epsilon needs n >= 4");
  static constexpr int kTable[9] = {0, 0, 0, 1, 1, 2, 4, 5, 8};
  return kTable[(n - 4) % 9];
}

BoundReport th12_bound(std::int64_t n) {
  require(n >= 4, "the E4+ bound needs n >= 4");
  BoundReport r = make_report("ex4lin(n,E4plus)", {{"n", n}});
  const std::int64_t copies = (n - 4) / 9;
  r.lower = Rational(12 * copies + epsilon(n));
  r.upper = Rational(2 * n);
  r.provenance.push_back("lower 12*floor((n-4)/9) + eps = 12*" + std::to_string(copies) + " + " +
                         std::to_string(epsilon(n)));
  r.provenance.push_back("upper 2n = " + std::to_string(2 * n));
  r.witness = "e4plus_lower_construction(n=" + std::to_string(n) + ")";
  return r;
}

Rational th13_upper(std::int64_t n, std::int64_t k) {
  require(n >= 0, "n must be non-negative");
  require(k >= 1, "k must be positive");
  return Rational(5 * k * n, 2);
}

BoundReport th13_bound(std::int64_t n, std::int64_t k) {
  BoundReport r = make_report("ex4lin(n,P_k)", {{"n", n}, {"k", k}});
  r.upper = th13_upper(n, k);
  r.provenance.push_back("upper 2.5kn = " + to_string(r.upper));
  if (k == 1) {
    r.upper = r.lower = Rational(0);
    r.exact = 0;
    r.achievable = true;
    r.witness = "empty hypergraph";
    r.provenance.push_back("P1-free means no edges");
  } else if (k == 2) {
    r.upper = r.lower = Rational(n / 4);
    r.exact = n / 4;
    r.achievable = true;
    r.witness = "matching of floor(n/4) edges";
    r.provenance.push_back("sharp: P2-free systems are matchings, floor(n/4) = " +
                           std::to_string(n / 4));
  } else if (k == 3) {
    BoundReport p3 = p3_bound(n);
    r.upper = std::min(r.upper, p3.upper);
    r.lower = p3.lower;
    r.exact = p3.exact;
    r.achievable = p3.achievable;
    r.witness = p3.witness;
    r.provenance.push_back("sharper upper n for P3");
  } else {
    BoundReport t11 = th11_bound(n);
    if (k == 4) {
      r.upper = std::min(r.upper, t11.upper);
      r.exact = t11.exact;
      r.achievable = t11.achievable;
      r.witness = t11.witness;
      r.provenance.push_back("sharper upper 5n/4 for P4");
    }
    r.lower = t11.lower;
    r.provenance.push_back("lower " + to_string(t11.lower) + " from P4-free S(2,4,16) copies");
  }
  return r;
}

std::int64_t packing_deficiency(std::int64_t m) {
  if (m == 8 || m == 10 || m == 11) return 2;
  if (m == 19) return 3;
  if (m == 9 || m == 17) return 1;
  if (m % 12 == 7 || m % 12 == 10) return 1;
  return 0;
}

std::int64_t packing_number(std::int64_t m) {
  require(m >= 0, "m must be non-negative");
  if (m < 4) return 0;
  const std::int64_t schonheim = floor_of(Rational(m, 4) * ((m - 1) / 3));
  return schonheim - packing_deficiency(m);
}

BoundReport packing_bound(std::int64_t m) {
  BoundReport r = make_report("D1(m,4,2)", {{"m", m}});
  const std::int64_t d = packing_number(m);
  r.lower = r.upper = Rational(d);
  r.exact = d;
  r.provenance.push_back("floor((m/4)floor((m-1)/3)) - deficiency " +
                         std::to_string(m < 4 ? 0 : packing_deficiency(m)));
  switch (m) {
    case 8: case 9: case 10: case 11: case 17: case 19:
      r.achievable = true;
      r.witness = "packing_optimal_small(m=" + std::to_string(m) + ")";
      break;
    case 4: case 13: case 16:
      r.achievable = true;
      r.witness = "Steiner system S(2,4," + std::to_string(m) + ")";
      break;
    default:
      if (m < 4) {
        r.achievable = true;
        r.witness = "empty hypergraph";
      }
  }
  return r;
}

Rational g_lower(std::int64_t n, std::int64_t k) {
  const std::int64_t a = k - 1;
  return Rational(a * floor_div(n - k + 1, 3)) + Rational(a * (a - 1) / 2, 6) - Rational(7, 2) -
         Rational(k + 2, 6);
}

Rational g_upper(std::int64_t n, std::int64_t k) {
  const std::int64_t a = k - 1;
  return Rational(a * floor_div(n - k + 1, 3)) + Rational(a * (a - 1) / 2, 2);
}

std::int64_t th14_threshold(std::int64_t k) { return 37 * (k - 1) * (k - 1) + 3; }

BoundReport g_bounds(std::int64_t n, std::int64_t k) {
  require(k >= 1, "k must be positive");
  require(n >= 0, "n must be non-negative");
  BoundReport r = make_report("g(n,k)", {{"n", n}, {"k", k}});
  if (k == 1) {
    r.exact = 0;
    r.achievable = true;
    r.witness = "empty hypergraph";
    r.provenance.push_back("no edge meets the empty set");
    return r;
  }
  r.upper = g_upper(n, k);
  r.provenance.push_back("upper (k-1)floor((n-k+1)/3) + C(k-1,2)/2 = " + to_string(r.upper));
  r.lower_applicable = n >= 4 * k - 4;
  if (r.lower_applicable) {
    r.lower = g_lower(n, k);
    r.provenance.push_back("lower (k-1)floor((n-k+1)/3) + C(k-1,2)/6 - 7/2 - (k+2)/6 = " +
                           to_string(r.lower));
    r.witness = "g_lower_construction(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  } else {
    r.provenance.push_back("lower formula inapplicable: needs n >= 4k-4 = " +
                           std::to_string(4 * k - 4));
  }
  if (k == 2 && n >= 1) {
    r.exact = (n - 1) / 3;
    r.lower = std::max(r.lower, Rational(*r.exact));
    r.achievable = true;
    r.witness = "star of floor((n-1)/3) edges";
    r.provenance.push_back("g(n,2) = floor((n-1)/3) = " + std::to_string(*r.exact));
  }
  if (n > th14_threshold(k)) {
    r.provenance.push_back("n > 37(k-1)^2+3 = " + std::to_string(th14_threshold(k)) +
                           ": ex4lin(n,M_k) = g(n,k)");
  }
  return r;
}

ConsistencyResult check_consistency(const BoundReport& report, const Hypergraph* witness,
                                    std::optional<std::int64_t> exact, bool witness_claims_lower) {
  ConsistencyResult out;
  auto fail = [&](std::string msg) {
    out.pass = false;
    out.findings.push_back(std::move(msg));
  };
  const std::int64_t lo = ceil_of(report.lower);
  const std::int64_t hi = floor_of(report.upper);
  if (report.lower > report.upper) {
    fail("lower " + to_string(report.lower) + " exceeds upper " + to_string(report.upper));
  }
  std::optional<std::int64_t> value = exact ? exact : report.exact;
  if (exact && report.exact && *exact != *report.exact) {
    fail("exact " + std::to_string(*exact) + " disagrees with reported " +
         std::to_string(*report.exact));
  }
  if (value) {
    if (*value > hi) fail("exact " + std::to_string(*value) + " above upper " + std::to_string(hi));
    if (report.lower_applicable && *value < lo) {
      fail("exact " + std::to_string(*value) + " below lower " + std::to_string(lo));
    }
  }
  if (witness) {
    const auto edges = static_cast<std::int64_t>(witness->edge_count());
    if (edges > hi) {
      fail("witness has " + std::to_string(edges) + " edges, above upper " + std::to_string(hi));
    }
    if (witness_claims_lower && report.lower_applicable && edges < lo) {
      fail("witness has " + std::to_string(edges) + " edges, below lower " + std::to_string(lo));
    }
  }
  return out;
}

namespace {

std::string params_string(const BoundReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ' ';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace

std::string format_text(const BoundReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << "  " << std::left << std::setw(12) << key << value << '\n';
  };
  os << r.quantity << "  [" << params_string(r) << "]\n";
  row("lower", to_string(r.lower) + " (integer " + std::to_string(ceil_of(r.lower)) + ")" +
                   (r.lower_applicable ? "" : " [formula inapplicable]"));
  row("upper", to_string(r.upper) + " (integer " + std::to_string(floor_of(r.upper)) + ")");
  row("exact", r.exact ? std::to_string(*r.exact) : "unset");
  row("achievable", r.achievable ? "yes" : "no");
  if (!r.witness.empty()) row("witness", r.witness);
  for (const auto& p : r.provenance) row("note", p);
  return os.str();
}

std::string format_kv(const BoundReport& r) {
  std::ostringstream os;
  os << "quantity=" << r.quantity << '\n';
  for (const auto& [k, v] : r.params) os << "param." << k << '=' << v << '\n';
  os << "lower=" << to_string(r.lower) << '\n';
  os << "lower_int=" << ceil_of(r.lower) << '\n';
  os << "lower_applicable=" << (r.lower_applicable ? "true" : "false") << '\n';
  os << "upper=" << to_string(r.upper) << '\n';
  os << "upper_int=" << floor_of(r.upper) << '\n';
  os << "exact=" << (r.exact ? std::to_string(*r.exact) : "unset") << '\n';
  os << "achievable=" << (r.achievable ? "true" : "false") << '\n';
  os << "witness=" << r.witness << '\n';
  for (std::size_t i = 0; i < r.provenance.size(); ++i) {
    os << "provenance." << i << '=' << r.provenance[i] << '\n';
  }
  return os.str();
}

}  // namespace lintur
