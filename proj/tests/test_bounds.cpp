#include <doctest.h>

#include "lintur/bounds.hpp"
#include "lintur/constructions.hpp"
#include "lintur/search.hpp"

using namespace lintur;

namespace {

std::int64_t table_packing(std::int64_t m) {
  if (m < 4) return 0;
  const std::int64_t schoenheim = (m * ((m - 1) / 3)) / 4;
  std::int64_t gap = 0;
  if (m == 8 || m == 10 || m == 11) {
    gap = 2;
  } else if (m == 19) {
    gap = 3;
  } else if (m % 12 == 7 || m % 12 == 10 || m == 9 || m == 17) {
    gap = 1;
  }
  return schoenheim - gap;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("rational helpers") {
  CHECK(floor_of(Rational(-1, 6)) == -1);
  CHECK(ceil_of(Rational(-1, 6)) == 0);
  CHECK(floor_of(Rational(119, 6)) == 19);
  CHECK(ceil_of(Rational(119, 6)) == 20);
  CHECK(to_string(Rational(325, 2)) == "325/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("path upper bound") {
  CHECK(prop1_upper(13, 3) == Rational(52));
  CHECK(prop1_upper(0, 2) == Rational(0));
  CHECK(prop1_upper(10, 2) == Rational(10));
  CHECK_THROWS_AS(prop1_upper(10, 1), InputError);
  CHECK_THROWS_AS(prop1_upper(-1, 3), InputError);
}

TEST_CASE("star lower bound") {
  CHECK(prop2_lower(13, 5).value == Rational(13));
  CHECK(prop2_lower(13, 5).applicable);
  CHECK(prop2_lower(16, 6).value == Rational(20));
  CHECK(prop2_lower(16, 6).applicable);
  CHECK_FALSE(prop2_lower(14, 5).applicable);
  CHECK_FALSE(prop2_lower(10, 4).applicable);  // 3k-2 = 10
  const BoundReport r = prop2_bound(26, 5);
  CHECK(r.exact == 26);
  CHECK(r.achievable);
  CHECK_FALSE(prop2_bound(14, 5).exact);
}

TEST_CASE("P3 bound") {
  CHECK(p3_bound(13).exact == 13);
  CHECK(p3_bound(26).exact == 26);
  const BoundReport r5 = p3_bound(5);
  CHECK(r5.upper == Rational(5));
  CHECK_FALSE(r5.exact);
  CHECK(check_consistency(p3_bound(13), nullptr, std::int64_t{13}).pass);
}

TEST_CASE("S3+/P4 bound") {
  CHECK(th11_bound(16).exact == 20);
  CHECK(th11_bound(32).exact == 40);
  const BoundReport r4 = th11_bound(4);
  CHECK(r4.upper == Rational(5));
  CHECK(r4.lower == Rational(1));
  CHECK_FALSE(r4.exact);
}

TEST_CASE("epsilon table") {
  const int table[9] = {0, 0, 0, 1, 1, 2, 4, 5, 8};
  for (int n = 4; n < 100; ++n) CHECK(epsilon(n) == table[(n - 4) % 9]);
  CHECK(epsilon(13) == 0);
  CHECK(epsilon(10) == 4);
  CHECK(epsilon(12) == 8);
  CHECK_THROWS_AS(epsilon(3), InputError);
}

TEST_CASE("E4+ bound") {
  CHECK(th12_bound(13).lower == Rational(12));
  CHECK(th12_bound(13).upper == Rational(26));
  CHECK(th12_bound(4).lower == Rational(0));
  CHECK(th12_bound(4).upper == Rational(8));
  CHECK(th12_bound(22).lower == Rational(24));
  CHECK(th12_bound(22).upper == Rational(44));
  CHECK_THROWS_AS(th12_bound(3), InputError);
}

TEST_CASE("general tree bound") {
  CHECK(th13_upper(13, 5) == Rational(325, 2));
  CHECK(th13_upper(0, 4) == Rational(0));
  CHECK(th13_upper(10, 2) == Rational(50));
  const BoundReport r = th13_bound(10, 2);
  CHECK(r.exact == 2);
  CHECK(r.upper <= Rational(50));
  CHECK(th13_bound(10, 1).exact == 0);
}

TEST_CASE("packing numbers") {
  CHECK(packing_number(9) == 3);
  CHECK(packing_number(19) == 25);
  CHECK(packing_number(13) == 13);
  CHECK(packing_number(16) == 20);
  for (std::int64_t m = 0; m <= 200; ++m) {
    CAPTURE(m);
    CHECK(packing_number(m) == table_packing(m));
    CHECK(packing_number(m) * 6 <= m * (m - 1) / 2);
  }
  for (std::int64_t m : {13, 16, 25, 28, 37, 40}) CHECK(packing_number(m) * 12 == m * (m - 1));
}

TEST_CASE("g bounds") {
  for (std::int64_t n = 4; n <= 60; ++n) CHECK(g_bounds(n, 2).exact == (n - 1) / 3);
  CHECK(g_lower(40, 3) == Rational(119, 6));
  for (std::int64_t k = 2; k <= 8; ++k) CHECK_FALSE(g_bounds(4 * k - 5, k).lower_applicable);
  CHECK(g_bounds(20, 5).lower_applicable);
  CHECK(g_bounds(10, 1).exact == 0);
}

TEST_CASE("threshold") {
  CHECK(th14_threshold(2) == 40);
  CHECK(th14_threshold(3) == 151);
  CHECK(th14_threshold(1) == 3);
}

TEST_CASE("consistency checks") {
  const Hypergraph s13 = steiner_2_4_13();
  CHECK(check_consistency(p3_bound(13), &s13, std::nullopt, true).pass);
  const Hypergraph e13 = e4plus_lower_construction(13).graph;
  CHECK(check_consistency(th12_bound(13), &e13, std::nullopt, true).pass);
  CHECK_FALSE(check_consistency(th12_bound(13), nullptr, std::int64_t{27}).pass);
  const Hypergraph two13 = disjoint_copies(s13, 2);
  CHECK_FALSE(check_consistency(p3_bound(13), &two13).pass);
  const Hypergraph one(4, 13, {Edge{0, 1, 2, 3}});
  CHECK(check_consistency(p3_bound(13), &one).pass);
  CHECK_FALSE(check_consistency(p3_bound(13), &one, std::nullopt, true).pass);
}

TEST_CASE("sweep: lower never exceeds upper") {
  for (std::int64_t n = 0; n <= 60; ++n) {
    CAPTURE(n);
    for (std::int64_t k = 2; k <= 10; ++k) {
      CAPTURE(k);
      CHECK(ceil_of(prop1_bound(n, k).lower) <= floor_of(prop1_bound(n, k).upper));
      CHECK(ceil_of(prop2_bound(n, k).lower) <= floor_of(prop2_bound(n, k).upper));
      CHECK(ceil_of(th13_bound(n, k).lower) <= floor_of(th13_bound(n, k).upper));
      if (n >= 4 * k - 4) {
        CHECK(g_lower(n, k) <= g_upper(n, k));
        CHECK(check_consistency(g_bounds(n, k)).pass);
      }
    }
    CHECK(ceil_of(p3_bound(n).lower) <= floor_of(p3_bound(n).upper));
    CHECK(ceil_of(th11_bound(n).lower) <= floor_of(th11_bound(n).upper));
    if (n >= 4) CHECK(ceil_of(th12_bound(n).lower) <= floor_of(th12_bound(n).upper));
    CHECK(check_consistency(packing_bound(n)).pass);
  }
}

TEST_CASE("formats") {
  const std::string kv = format_kv(p3_bound(13));
  CHECK(kv.find("param.n=13") != std::string::npos);
  CHECK(kv.find("exact=13") != std::string::npos);
  CHECK(kv.find("upper=13") != std::string::npos);
  CHECK(format_kv(p3_bound(5)).find("exact=unset") != std::string::npos);
  const std::string text = format_text(th13_bound(13, 5));
  CHECK(text.find("325/2") != std::string::npos);
}

}  // TEST_SUITE
