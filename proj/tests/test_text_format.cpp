#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "lintur/constructions.hpp"
#include "lintur/text_format.hpp"
#include "oracles.hpp"

using namespace lintur;

namespace {

const char* const kS13Text =
    "# thirteen points\n"
    "4 13 13\n"
    "1 2 3 4\n1 5 6 7\n1 8 9 10\n1 11 12 13\n2 5 9 13\n2 6 10 11\n2 7 8 12\n"
    "3 5 10 12\n3 6 8 13\n3 7 9 11\n4 5 8 11\n4 6 9 12\n4 7 10 13\n";

std::string squeeze(const std::string& s) {
  std::istringstream in(s);
  std::string out, line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w, joined;
    while (words >> w) joined += (joined.empty() ? "" : " ") + w;
    if (!joined.empty()) out += joined + "\n";
  }
  return out;
}

int error_line(const std::string& text) {
  try {
    parse_hypergraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("text_format") {

TEST_CASE("block rows parse to the 13-point design") {
  const Hypergraph h = parse_hypergraph(std::string_view(kS13Text));
  CHECK(h == steiner_2_4_13());
  CHECK(h.edge(0) == Edge{0, 1, 2, 3});
  CHECK(squeeze(serialize(h)) == squeeze(kS13Text));
}

TEST_CASE("comments and blank lines") {
  const Hypergraph h = parse_hypergraph(std::string_view("\n# c\n4 6 1  # header\n\n1 2 3 4 # e\n"));
  CHECK(h == Hypergraph(4, 6, {Edge{0, 1, 2, 3}}));
  CHECK(parse_hypergraph(std::string_view("3 5 0\n")) == Hypergraph(3, 5));
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line("") > 0);
  CHECK(error_line("4 6\n") == 1);
  CHECK(error_line("4 x 1\n") == 1);
  CHECK(error_line("5 6 0\n") == 1);
  CHECK(error_line("4 6 1\n1 2 3\n") == 2);
  CHECK(error_line("4 6 1\n1 1 2 3\n") == 2);
  CHECK(error_line("4 6 1\n1 2 3 7\n") == 2);
  CHECK(error_line("4 6 1\n0 2 3 4\n") == 2);
  CHECK(error_line("4 8 2\n1 2 3 4\n# dup\n4 3 2 1\n") == 4);
  CHECK(error_line("4 8 1\n1 2 3 4\n5 6 7 8\n") == 3);
  CHECK(error_line("4 8 2\n1 2 3 4\n") > 0);
  CHECK_THROWS_AS(parse_hypergraph(std::string_view("4 6 1\n1 1 2 3\n")), InputError);
  CHECK_THROWS_AS(parse_hypergraph(std::string_view("4 300 0\n")), CapacityError);
  try {
    parse_hypergraph(std::string_view("4 6 1\n1 2 3\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("property: parse inverts serialize on 1000 random linear systems") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = trial % 4 == 0 ? 3 : 4;
    const int n = static_cast<int>(rng() % 40);
    const Hypergraph h = oracle::random_linear(rng, r, n, static_cast<int>(rng() % 60));
    const std::string text = serialize(h);
    const Hypergraph back = parse_hypergraph(std::string_view(text));
    CHECK(back == h);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "lintur_text_format_test.txt";
  write_hypergraph_file(path, steiner_2_4_16());
  CHECK(read_hypergraph_file(path) == steiner_2_4_16());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_hypergraph_file(path), InputError);
}

}  // TEST_SUITE
