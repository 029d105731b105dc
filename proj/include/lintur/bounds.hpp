#ifndef LINTUR_BOUNDS_HPP
#define LINTUR_BOUNDS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lintur/hypergraph.hpp"

namespace lintur {

using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);
std::string to_string(const Rational& q);

/// Bounds on one extremal quantity. `lower`/`upper` are exact rationals;
/// integer comparisons round lower up and upper down.
struct BoundReport {
  std::string quantity;
  std::vector<std::pair<std::string, std::int64_t>> params;
  Rational lower{0};
  Rational upper{0};
  /// False when the lower-bound formula's hypothesis fails; `lower` then
  /// falls back to 0.
  bool lower_applicable = true;
  std::optional<std::int64_t> exact;
  /// Set only when a certified construction attains `exact`.
  bool achievable = false;
  std::string witness;
  std::vector<std::string> provenance;
};

/// (3k-5)n. Throws InputError for k <= 1 or n < 0.
Rational prop1_upper(std::int64_t n, std::int64_t k);

struct Prop2Value {
  Rational value;
  bool applicable;
};
/// n(k-1)/4, applicable iff (3k-2) | n and 3k-2 = 1,4 (mod 12).
Prop2Value prop2_lower(std::int64_t n, std::int64_t k);

BoundReport prop1_bound(std::int64_t n, std::int64_t k);
BoundReport prop2_bound(std::int64_t n, std::int64_t k);
BoundReport p3_bound(std::int64_t n);
BoundReport th11_bound(std::int64_t n);

/// Additive term of the E4+ lower bound by (n-4) mod 9. Throws for n < 4.
int epsilon(std::int64_t n);
BoundReport th12_bound(std::int64_t n);

Rational th13_upper(std::int64_t n, std::int64_t k);
BoundReport th13_bound(std::int64_t n, std::int64_t k);

/// floor((m/4) floor((m-1)/3)) minus the known deficiency.
std::int64_t packing_number(std::int64_t m);
std::int64_t packing_deficiency(std::int64_t m);
BoundReport packing_bound(std::int64_t m);

Rational g_lower(std::int64_t n, std::int64_t k);
Rational g_upper(std::int64_t n, std::int64_t k);
BoundReport g_bounds(std::int64_t n, std::int64_t k);

/// 37(k-1)^2 + 3.
std::int64_t th14_threshold(std::int64_t k);

struct ConsistencyResult {
  bool pass = true;
  std::vector<std::string> findings;
};

/// Checks lower <= exact <= upper (integer-rounded) and that a witness is no
/// larger than the upper bound; when `witness_claims_lower` the witness must
/// also reach the lower bound.
ConsistencyResult check_consistency(const BoundReport& report,
                                    const Hypergraph* witness = nullptr,
                                    std::optional<std::int64_t> exact = std::nullopt,
                                    bool witness_claims_lower = false);

/// Aligned human-readable rendering and stable key=value lines.
std::string format_text(const BoundReport& report);
std::string format_kv(const BoundReport& report);

}  // namespace lintur

#endif  // LINTUR_BOUNDS_HPP
