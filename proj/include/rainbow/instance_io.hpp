#pragma once

// Plain-text instance format:
//
//   n m
//   graph 0
//   u v
//   ...
//   end
//   graph 1
//   ...
//
// Blocks appear in index order 0..m-1. Blank lines and '#' comments are
// ignored when reading; the writer emits edges as "u v" with u < v in
// lexicographic order, so written files are canonical.

#include <iosfwd>
#include <string>

#include "rainbow/core.hpp"

namespace rainbow {

GraphCollection read_instance(std::istream& in);
GraphCollection parse_instance(const std::string& text);
GraphCollection load_instance(const std::string& path);

void write_instance(std::ostream& out, const GraphCollection& coll);
std::string format_instance(const GraphCollection& coll);
void save_instance(const std::string& path, const GraphCollection& coll);

}  // namespace rainbow
