#include "rainbow/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-blank line with comments stripped; false at EOF.
  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = raw.find_last_not_of(" \t\r");
      line = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + what);
  }
};

// Parses exactly the listed integers with nothing trailing.
template <class... Ints>
bool scan_ints(const std::string& line, Ints&... out) {
  std::istringstream is(line);
  (is >> ... >> out);
  if (!is) return false;
  std::string rest;
  return !(is >> rest);
}

}  // namespace

GraphCollection read_instance(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) reader.fail("empty instance, expected header 'n m'");
  int n = 0;
  int m = 0;
  if (!scan_ints(line, n, m)) reader.fail("expected header 'n m'");
  if (n < 1 || n > kMaxVertices) reader.fail("n must lie in [1, 64]");
  if (m < 1 || m > kMaxColors) reader.fail("m must lie in [1, 64]");

  std::vector<SimpleGraph> graphs;
  graphs.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!reader.next(line)) reader.fail("missing block 'graph " + std::to_string(i) + "'");
    std::istringstream is(line);
    std::string keyword;
    int index = -1;
    is >> keyword >> index;
    std::string rest;
    if (keyword != "graph" || !is || (is >> rest) || index != i) {
      reader.fail("expected 'graph " + std::to_string(i) + "'");
    }
    std::vector<Edge> edges;
    bool closed = false;
    while (reader.next(line)) {
      if (line == "end") {
        closed = true;
        break;
      }
      int u = 0;
      int v = 0;
      if (!scan_ints(line, u, v)) reader.fail("expected edge 'u v' or 'end'");
      if (u < 0 || u >= n || v < 0 || v >= n) {
        reader.fail("graph " + std::to_string(i) + ": vertex " + std::to_string(u < 0 || u >= n ? u : v) +
                    " out of range [0, " + std::to_string(n) + ")");
      }
      if (u == v) reader.fail("graph " + std::to_string(i) + ": self-loop at " + std::to_string(u));
      edges.emplace_back(u, v);
    }
    if (!closed) reader.fail("graph " + std::to_string(i) + " not terminated by 'end'");
    try {
      graphs.push_back(build_graph(n, edges));
    } catch (const InvalidInput& e) {
      reader.fail("graph " + std::to_string(i) + ": " + e.what());
    }
  }
  if (reader.next(line)) reader.fail("trailing content after graph " + std::to_string(m - 1));
  return GraphCollection(n, std::move(graphs));
}

GraphCollection parse_instance(const std::string& text) {
  std::istringstream is(text);
  return read_instance(is);
}

GraphCollection load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file '" + path + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const GraphCollection& coll) {
  out << coll.order() << ' ' << coll.size() << '\n';
  for (int i = 0; i < coll.size(); ++i) {
    out << "graph " << i << '\n';
    for (const auto& [u, v] : coll[i].edges()) out << u << ' ' << v << '\n';
    out << "end\n";
  }
}

std::string format_instance(const GraphCollection& coll) {
  std::ostringstream os;
  write_instance(os, coll);
  return os.str();
}

void save_instance(const std::string& path, const GraphCollection& coll) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write instance file '" + path + "'");
  write_instance(out, coll);
}

}  // namespace rainbow
