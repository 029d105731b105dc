#include "lintur/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

namespace lintur {

ParseError::ParseError(int line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<long long> parse_numbers(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::string_view tok = line.substr(i, j - i);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long r = 0, n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = parse_numbers(line, line_no);
    if (fields.empty()) continue;

    if (!have_header) {
      if (fields.size() != 3) throw ParseError(line_no, "header must be 'r n m'");
      r = fields[0];
      n = fields[1];
      m = fields[2];
      if (r != 3 && r != 4) throw ParseError(line_no, "uniformity must be 3 or 4");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      if (n > kMaxVertices) {
        throw CapacityError("line " + std::to_string(line_no) + ": vertex count " +
                            std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
      }
      have_header = true;
      continue;
    }

    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge rows than the header announces");
    }
    if (static_cast<long long>(fields.size()) != r) {
      throw ParseError(line_no, "edge row has " + std::to_string(fields.size()) +
                                    " vertices, expected " + std::to_string(r));
    }
    std::vector<Vertex> vs;
    for (long long id : fields) {
      if (id < 1 || id > n) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) + " outside [1, " +
                                      std::to_string(n) + "]");
      }
      vs.push_back(static_cast<Vertex>(id - 1));
    }
    Edge e(vs);
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] == e[i - 1]) {
        throw ParseError(line_no, "vertex " + std::to_string(e[i] + 1) + " repeated in edge");
      }
    }
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }

  const int last = std::max(line_no, 1);
  if (!have_header) throw ParseError(last, "missing header 'r n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(last, "expected " + std::to_string(m) + " edge rows, found " +
                                  std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

Hypergraph read_hypergraph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_hypergraph(in);
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream os;
  os << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ' ';
      os << e[i] + 1;
    }
    os << '\n';
  }
  return os.str();
}

void write_hypergraph_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << serialize(h);
}

}  // namespace lintur
