#include "rainbow/core.hpp"

#include <algorithm>
#include <sstream>

namespace rainbow {

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

Mask mask_of(std::span<const int> items) {
  Mask m = 0;
  for (int i : items) m |= bit(i);
  return m;
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidInput("vertex count " + std::to_string(n) + " outside [1, 64]");
  }
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n_) + ")");
  }
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (Mask row : adj_) twice += popcount(row);
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

SimpleGraph SimpleGraph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  SimpleGraph g = *this;
  g.adj_[u] |= bit(v);
  g.adj_[v] |= bit(u);
  return g;
}

SimpleGraph SimpleGraph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  SimpleGraph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

SimpleGraph build_graph(int n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

SimpleGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

SimpleGraph clique_union(int n, std::span<const std::vector<Vertex>> blocks) {
  std::vector<Edge> edges;
  for (const auto& block : blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) edges.emplace_back(block[i], block[j]);
  return build_graph(n, edges);
}

int min_degree(const SimpleGraph& g) {
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::optional<int> sigma2(const SimpleGraph& g) {
  std::optional<int> best;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      int sum = g.degree(u) + g.degree(v);
      if (!best || sum < *best) best = sum;
    }
  }
  return best;
}

GraphCollection::GraphCollection(int n, std::vector<SimpleGraph> graphs)
    : n_(n), graphs_(std::move(graphs)) {
  if (graphs_.empty()) throw InvalidInput("a collection needs at least one graph");
  if (graphs_.size() > kMaxColors) throw InvalidInput("at most 64 graphs per collection");
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].order() != n) {
      throw InvalidInput("graph " + std::to_string(i) + " has " +
                         std::to_string(graphs_[i].order()) + " vertices, expected " +
                         std::to_string(n));
    }
  }
}

GraphCollection GraphCollection::with_graph(Color c, SimpleGraph g) const {
  std::vector<SimpleGraph> graphs = graphs_;
  graphs.at(static_cast<std::size_t>(c)) = std::move(g);
  return GraphCollection(n_, std::move(graphs));
}

bool GraphCollection::all_identical() const {
  return std::all_of(graphs_.begin(), graphs_.end(),
                     [&](const SimpleGraph& g) { return g == graphs_.front(); });
}

GraphCollection replicate(const SimpleGraph& g, int m) {
  return GraphCollection(g.order(), std::vector<SimpleGraph>(static_cast<std::size_t>(m), g));
}

int collection_min_degree(const GraphCollection& coll) {
  int best = coll.order();
  for (const auto& g : coll.graphs()) best = std::min(best, min_degree(g));
  return best;
}

SubCollectionView::SubCollectionView(const GraphCollection& base)
    : base_(&base), vertices_(base.all_vertices()), colors_(base.all_colors()) {}

SubCollectionView::SubCollectionView(const GraphCollection& base, Mask vertices, Mask colors)
    : base_(&base),
      vertices_(vertices & base.all_vertices()),
      colors_(colors & base.all_colors()) {}

bool SubCollectionView::adjacent(Color c, Vertex u, Vertex v) const {
  return has_color(c) && has_vertex(u) && has_vertex(v) && (*base_)[c].adjacent(u, v);
}

Mask SubCollectionView::neighbors(Color c, Vertex v) const {
  if (!has_color(c) || !has_vertex(v)) return 0;
  return (*base_)[c].neighbors(v) & vertices_;
}

Mask SubCollectionView::edge_colors(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return 0;
  Mask out = 0;
  for_each_bit(colors_, [&](int c) {
    if ((*base_)[c].adjacent(u, v)) out |= bit(c);
  });
  return out;
}

Mask SubCollectionView::union_neighbors(Vertex v) const {
  if (!has_vertex(v)) return 0;
  Mask out = 0;
  for_each_bit(colors_, [&](int c) { out |= (*base_)[c].neighbors(v); });
  return out & vertices_;
}

SubCollectionView SubCollectionView::restrict(Mask removed_vertices, Mask removed_colors) const {
  return SubCollectionView(*base_, vertices_ & ~removed_vertices, colors_ & ~removed_colors);
}

SubCollectionView restrict(const GraphCollection& coll, Mask removed_vertices,
                           Mask removed_colors) {
  return SubCollectionView(coll).restrict(removed_vertices, removed_colors);
}

ColoredPath ColoredPath::reversed() const {
  ColoredPath out{{vertices.rbegin(), vertices.rend()}, {colors.rbegin(), colors.rend()}};
  return out;
}

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Shared check for paths (closed = false) and cycles (closed = true).
Verification verify_walk(const SubCollectionView& view, const std::vector<Vertex>& vs,
                         const std::vector<Color>& cs, bool closed) {
  const std::size_t edges = closed ? vs.size() : (vs.empty() ? 0 : vs.size() - 1);
  if (vs.empty()) return {false, "empty vertex sequence"};
  if (closed && vs.size() < 3) return {false, "cycle shorter than 3 vertices"};
  if (cs.size() != edges) {
    return {false, "expected " + std::to_string(edges) + " colors, got " +
                       std::to_string(cs.size())};
  }
  Mask seen = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= view.base_order() || !view.has_vertex(v)) {
      return {false, "vertex " + std::to_string(v) + " not in view"};
    }
    if (seen & bit(v)) return {false, "repeated vertex " + std::to_string(v)};
    seen |= bit(v);
  }
  Mask used = 0;
  for (std::size_t i = 0; i < edges; ++i) {
    Color c = cs[i];
    Vertex u = vs[i];
    Vertex v = vs[(i + 1) % vs.size()];
    if (c < 0 || c >= view.base().size() || !view.has_color(c)) {
      return {false, "color " + std::to_string(c) + " not available"};
    }
    if (used & bit(c)) return {false, "repeated color " + std::to_string(c)};
    used |= bit(c);
    if (!view.adjacent(c, u, v)) {
      return {false, "edge " + edge_name(u, v) + " absent from graph " + std::to_string(c)};
    }
  }
  return {};
}

}  // namespace

Verification verify_colored_path(const SubCollectionView& view, const ColoredPath& p) {
  return verify_walk(view, p.vertices, p.colors, false);
}

Verification verify_colored_cycle(const SubCollectionView& view, const ColoredCycle& c) {
  return verify_walk(view, c.vertices, c.colors, true);
}

std::string to_string(const ColoredPath& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0) os << " -[" << p.colors[i - 1] << "]- ";
    os << p.vertices[i];
  }
  return os.str();
}

std::string to_string(const ColoredCycle& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    os << c.vertices[i] << " -[" << c.colors[i] << "]- ";
  }
  if (!c.vertices.empty()) os << c.vertices.front();
  return os.str();
}

}  // namespace rainbow
