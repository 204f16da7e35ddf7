#pragma once

// Brute-force reference implementations. They share no code with the
// library's search: paths are enumerated vertex by vertex and colors are
// assigned by plain backtracking over edges.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/core.hpp"

namespace oracle {

using rainbow::Color;
using rainbow::GraphCollection;
using rainbow::Mask;
using rainbow::Vertex;

inline bool assign(const GraphCollection& coll, Mask colors, const std::vector<Vertex>& seq,
                   std::size_t edge, Mask used) {
  if (edge + 1 >= seq.size()) return true;
  for (Color c = 0; c < coll.size(); ++c) {
    if (!((colors >> c) & 1U) || ((used >> c) & 1U)) continue;
    if (!coll[c].adjacent(seq[edge], seq[edge + 1])) continue;
    if (assign(coll, colors, seq, edge + 1, used | rainbow::bit(c))) return true;
  }
  return false;
}

/// Whether the closed (cycle) or open vertex sequence admits distinct colors.
inline bool colorable(const GraphCollection& coll, Mask colors, std::vector<Vertex> seq,
                      bool closed = false) {
  if (closed) seq.push_back(seq.front());
  return assign(coll, colors, seq, 0, 0);
}

struct Enumerator {
  const GraphCollection& coll;
  Mask vertices;
  Mask colors;

  bool any_edge(Vertex u, Vertex v) const {
    for (Color c = 0; c < coll.size(); ++c) {
      if (((colors >> c) & 1U) && coll[c].adjacent(u, v)) return true;
    }
    return false;
  }

  bool extend(std::vector<Vertex>& seq, Vertex target, std::size_t k) const {
    const Vertex last = seq.back();
    if (seq.size() + 1 == k) {
      if (!any_edge(last, target)) return false;
      seq.push_back(target);
      const bool ok = colorable(coll, colors, seq);
      seq.pop_back();
      return ok;
    }
    for (Vertex v = 0; v < coll.order(); ++v) {
      if (!((vertices >> v) & 1U) || v == target) continue;
      if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
      if (!any_edge(last, v)) continue;
      seq.push_back(v);
      const bool ok = extend(seq, target, k);
      seq.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

/// Rainbow x-y path on exactly k vertices inside the given vertex/color sets.
inline bool has_rainbow_path(const GraphCollection& coll, Mask vertices, Mask colors, Vertex x,
                             Vertex y, int k) {
  if (k < 2) return false;
  Enumerator e{coll, vertices, colors};
  std::vector<Vertex> seq{x};
  return e.extend(seq, y, static_cast<std::size_t>(k));
}

inline bool has_rainbow_path(const GraphCollection& coll, Vertex x, Vertex y, int k) {
  return has_rainbow_path(coll, coll.all_vertices(), coll.all_colors(), x, y, k);
}

inline std::optional<int> rainbow_distance(const GraphCollection& coll, Vertex x, Vertex y) {
  for (int k = 2; k <= coll.order(); ++k) {
    if (has_rainbow_path(coll, x, y, k)) return k - 1;
  }
  return std::nullopt;
}

/// Rainbow cycle on exactly `length` vertices.
inline bool has_rainbow_cycle(const GraphCollection& coll, Mask vertices, Mask colors,
                              int length) {
  for (Vertex s = 0; s < coll.order(); ++s) {
    if (!((vertices >> s) & 1U)) continue;
    Enumerator e{coll, vertices & ~rainbow::low_bits(s), colors};
    for (Vertex t = s + 1; t < coll.order(); ++t) {
      if (!((e.vertices >> t) & 1U) || !e.any_edge(s, t)) continue;
      // Enumerate paths s .. t on `length` vertices, then close with ts.
      std::vector<Vertex> seq{s};
      std::function<bool()> go = [&]() -> bool {
        if (static_cast<int>(seq.size()) + 1 == length) {
          if (!e.any_edge(seq.back(), t)) return false;
          seq.push_back(t);
          const bool ok = colorable(coll, colors, seq, true);
          seq.pop_back();
          return ok;
        }
        for (Vertex v = s + 1; v < coll.order(); ++v) {
          if (!((e.vertices >> v) & 1U) || v == t) continue;
          if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
          if (!e.any_edge(seq.back(), v)) continue;
          seq.push_back(v);
          const bool ok = go();
          seq.pop_back();
          if (ok) return true;
        }
        return false;
      };
      if (length >= 3 && go()) return true;
    }
  }
  return false;
}

/// Panconnectivity straight from the definition, for one graph.
inline bool panconnected(const rainbow::SimpleGraph& g) {
  const int n = g.order();
  const auto coll = rainbow::replicate(g, std::max(n - 1, 1));
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const auto d = rainbow_distance(coll, x, y);
      if (!d) return false;
      for (int k = *d + 1; k <= n; ++k) {
        if (!has_rainbow_path(coll, x, y, k)) return false;
      }
    }
  }
  return true;
}

/// Checks a colored x-y path on k vertices edge by edge.
inline bool valid_path(const GraphCollection& coll, const std::vector<Vertex>& vertices,
                       const std::vector<Color>& colors, Vertex x, Vertex y, int k) {
  if (static_cast<int>(vertices.size()) != k || colors.size() + 1 != vertices.size()) return false;
  if (vertices.front() != x || vertices.back() != y) return false;
  std::vector<Vertex> vs = vertices;
  std::vector<Color> cs = colors;
  std::sort(vs.begin(), vs.end());
  std::sort(cs.begin(), cs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 0 || colors[i] >= coll.size()) return false;
    if (!coll[colors[i]].adjacent(vertices[i], vertices[i + 1])) return false;
  }
  return true;
}

}  // namespace oracle
