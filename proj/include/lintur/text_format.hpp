#ifndef LINTUR_TEXT_FORMAT_HPP
#define LINTUR_TEXT_FORMAT_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lintur/hypergraph.hpp"

namespace lintur {

// Text format:
//
//   # comment
//   r n m
//   v1 v2 ... vr      (m rows, 1-based vertex ids)
//
// Everything after '#' on a line is ignored, as are blank lines.

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph_file(const std::filesystem::path& path);

std::string serialize(const Hypergraph& h);
void write_hypergraph_file(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace lintur

#endif  // LINTUR_TEXT_FORMAT_HPP
