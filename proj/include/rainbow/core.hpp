#pragma once

// Graphs, graph collections and rainbow (transversal) subgraphs.
//
// A collection is an ordered list of simple graphs on the shared vertex set
// 0..n-1. The index of a graph in the collection is its "color". Vertex sets
// and color sets are 64-bit masks, so n <= 64 and m <= 64.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using Color = int;
using Mask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxColors = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask low_bits(int count) {
  return count >= 64 ? ~Mask{0} : bit(count) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> bits_of(Mask m);
Mask mask_of(std::span<const int> items);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex ids, self-loops, inconsistent collections.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionFailure : public Error {
 public:
  using Error::Error;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int order() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  Mask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  std::size_t edge_count() const;
  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  SimpleGraph with_edge(Vertex u, Vertex v) const;
  SimpleGraph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  friend SimpleGraph build_graph(int n, std::span<const Edge> edges);
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Mask> adj_;
};

SimpleGraph build_graph(int n, std::span<const Edge> edges);
SimpleGraph complete_graph(int n);
/// Disjoint union of cliques on the given vertex blocks.
SimpleGraph clique_union(int n, std::span<const std::vector<Vertex>> blocks);

int min_degree(const SimpleGraph& g);
/// Minimum degree sum over nonadjacent pairs; nullopt when g is complete.
std::optional<int> sigma2(const SimpleGraph& g);

class GraphCollection {
 public:
  GraphCollection(int n, std::vector<SimpleGraph> graphs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(graphs_.size()); }
  const SimpleGraph& operator[](Color c) const { return graphs_[c]; }
  const std::vector<SimpleGraph>& graphs() const { return graphs_; }
  Mask all_vertices() const { return low_bits(n_); }
  Mask all_colors() const { return low_bits(size()); }

  GraphCollection with_graph(Color c, SimpleGraph g) const;
  bool all_identical() const;

  friend bool operator==(const GraphCollection&, const GraphCollection&) = default;

 private:
  int n_;
  std::vector<SimpleGraph> graphs_;
};

GraphCollection replicate(const SimpleGraph& g, int m);
int collection_min_degree(const GraphCollection& coll);

/// Copy-free overlay deleting vertices and/or colors from a collection.
/// The base collection must outlive the view.
class SubCollectionView {
 public:
  SubCollectionView(const GraphCollection& base);  // NOLINT: implicit by design of the API
  SubCollectionView(const GraphCollection& base, Mask vertices, Mask colors);

  const GraphCollection& base() const { return *base_; }
  int base_order() const { return base_->order(); }
  Mask vertices() const { return vertices_; }
  Mask colors() const { return colors_; }
  int vertex_count() const { return popcount(vertices_); }
  int color_count() const { return popcount(colors_); }
  bool has_vertex(Vertex v) const { return (vertices_ >> v) & 1U; }
  bool has_color(Color c) const { return (colors_ >> c) & 1U; }

  bool adjacent(Color c, Vertex u, Vertex v) const;
  Mask neighbors(Color c, Vertex v) const;
  int degree(Color c, Vertex v) const { return popcount(neighbors(c, v)); }
  /// Surviving colors whose graph contains uv.
  Mask edge_colors(Vertex u, Vertex v) const;
  Mask union_neighbors(Vertex v) const;

  SubCollectionView restrict(Mask removed_vertices, Mask removed_colors) const;

 private:
  const GraphCollection* base_;
  Mask vertices_;
  Mask colors_;
};

SubCollectionView restrict(const GraphCollection& coll, Mask removed_vertices,
                           Mask removed_colors);

/// k-path: vertices v_0..v_{k-1}; colors[i] is the graph holding v_i v_{i+1}.
struct ColoredPath {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  std::size_t order() const { return vertices.size(); }
  ColoredPath reversed() const;
  friend bool operator==(const ColoredPath&, const ColoredPath&) = default;
};

/// colors[i] is the graph holding vertices[i] vertices[(i+1) % length].
struct ColoredCycle {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const ColoredCycle&, const ColoredCycle&) = default;
};

struct Verification {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

Verification verify_colored_path(const SubCollectionView& view, const ColoredPath& p);
Verification verify_colored_cycle(const SubCollectionView& view, const ColoredCycle& c);

std::string to_string(const ColoredPath& p);
std::string to_string(const ColoredCycle& c);

}  // namespace rainbow
