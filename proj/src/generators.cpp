#include "rainbow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rainbow {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 1));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionFailure("Rng::below: bound must be positive");
  // Largest multiple of bound representable; values above it are rejected.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r <= limit) return r % bound;
  }
}

const char* to_string(Family f) {
  switch (f) {
    case Family::random: return "random";
    case Family::f_family: return "f_family";
    case Family::two_cliques_cor23: return "two_cliques";
    case Family::join_partition_cor23: return "join_partition";
    case Family::lemma_shape: return "lemma_shape";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::random, Family::f_family, Family::two_cliques_cor23,
                   Family::join_partition_cor23, Family::lemma_shape}) {
    if (s == to_string(f)) return f;
  }
  throw InvalidInput("unknown family '" + s + "'");
}

namespace {

SimpleGraph from_masks(int n, const std::vector<Mask>& adj) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for_each_bit(adj[u] & ~low_bits(u + 1), [&](int v) { edges.emplace_back(u, v); });
  }
  return build_graph(n, edges);
}

std::vector<Vertex> shuffled_labels(int n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(derive_seed(seed, 0x5045524dULL));
  rng.shuffle(perm);
  return perm;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

GraphCollection gen_random_collection(int n, int m, int min_degree, std::uint64_t seed) {
  if (n < 2 || n > kMaxVertices) throw InvalidInput("n must be in [2, 64]");
  if (m < 1 || m > kMaxColors) throw InvalidInput("m must be in [1, 64]");
  if (min_degree < 0) throw InvalidInput("min_degree must be non-negative");
  if (min_degree >= n) {
    throw InvalidInput("infeasible: min_degree " + std::to_string(min_degree) +
                       " >= n = " + std::to_string(n));
  }
  const double p = std::min(1.0, static_cast<double>(min_degree + 1) / n);
  std::vector<SimpleGraph> graphs;
  graphs.reserve(m);
  for (int i = 0; i < m; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    std::vector<Mask> adj(n, 0);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.chance(p)) {
          adj[u] |= bit(v);
          adj[v] |= bit(u);
        }
      }
    }
    // Repair: raise low-degree vertices with uniformly chosen non-neighbors.
    for (Vertex u = 0; u < n; ++u) {
      while (popcount(adj[u]) < min_degree) {
        const auto options = bits_of(low_bits(n) & ~adj[u] & ~bit(u));
        const Vertex v = options[rng.below(options.size())];
        adj[u] |= bit(v);
        adj[v] |= bit(u);
      }
    }
    graphs.push_back(from_masks(n, adj));
  }
  return GraphCollection(n, std::move(graphs));
}

PlantedCollection gen_extremal_F(int n, int m, std::span<const Edge> q2_edges,
                                 std::uint64_t seed) {
  if (n % 2 == 0) throw InvalidInput("F family needs odd n");
  if (n == 5) {
    throw InvalidInput(
        "F family is empty for n = 5: Q2 has 3 vertices and cannot have a single-edge "
        "component while keeping min degree 1");
  }
  if (n < 5 || n > kMaxVertices) throw InvalidInput("F family needs odd n in [7, 63]");
  if (m < 1 || m > kMaxColors) throw InvalidInput("m must be in [1, 64]");
  const int p = (n - 1) / 2;
  const int q = (n + 1) / 2;

  std::vector<Mask> local(q, 0);
  auto add = [&](Vertex a, Vertex b) {
    if (a < 0 || b < 0 || a >= q || b >= q) {
      throw InvalidInput("Q2 vertex out of range [0, " + std::to_string(q) + ")");
    }
    if (a == b) throw InvalidInput("Q2 self-loop at " + std::to_string(a));
    local[a] |= bit(b);
    local[b] |= bit(a);
  };
  if (q2_edges.empty()) {
    Rng rng(derive_seed(seed, 0x51324551ULL));
    add(0, 1);
    Vertex v = 2;
    if ((q - 2) % 2 == 1) {
      add(2, 3);
      add(3, 4);
      add(2, 4);
      v = 5;
    }
    for (; v + 1 < q; v += 2) add(v, v + 1);
    for (Vertex a = 2; a < q; ++a) {
      for (Vertex b = a + 1; b < q; ++b) {
        if (rng.chance(0.3)) add(a, b);
      }
    }
  } else {
    for (const auto& [a, b] : q2_edges) add(a, b);
  }
  std::vector<Edge> singles;
  for (Vertex a = 0; a < q; ++a) {
    if (local[a] == 0) throw InvalidInput("Q2 has an isolated vertex " + std::to_string(a));
    if (popcount(local[a]) == 1) {
      const Vertex b = std::countr_zero(local[a]);
      if (a < b && local[b] == bit(a)) singles.emplace_back(a, b);
    }
  }
  if (singles.empty()) throw InvalidInput("Q2 has no single-edge component");

  const auto perm = shuffled_labels(n, seed);
  std::vector<Mask> adj(n, 0);
  std::vector<Vertex> q1, q2;
  for (int i = 0; i < p; ++i) q1.push_back(perm[i]);
  for (int i = 0; i < q; ++i) q2.push_back(perm[p + i]);
  for (Vertex a : q1) {
    for (Vertex b : q2) {
      adj[a] |= bit(b);
      adj[b] |= bit(a);
    }
  }
  for (Vertex a = 0; a < q; ++a) {
    for_each_bit(local[a], [&](int b) { adj[q2[a]] |= bit(q2[b]); });
  }
  PlantedCollection out{replicate(from_masks(n, adj), m), {}};
  out.planted.kind = ExtremalKind::f_family;
  // Report the single-edge component with the smallest relabeled vertex.
  for (const auto& [a, b] : singles) {
    const Edge e{std::min(q2[a], q2[b]), std::max(q2[a], q2[b])};
    if (!out.planted.single_edge || e < *out.planted.single_edge) out.planted.single_edge = e;
  }
  out.planted.parts = {sorted(q1), sorted(q2)};
  return out;
}

PlantedCollection gen_cor23_obstruction(int n, const std::string& which, std::uint64_t seed) {
  if (n % 2 != 0 || n < 4 || n > kMaxVertices) {
    throw InvalidInput("obstruction families need even n in [4, 64]");
  }
  const auto perm = shuffled_labels(n, seed);
  PlantedCollection out{GraphCollection(n, {SimpleGraph(n)}), {}};
  if (which == "ii") {
    std::vector<Vertex> a(perm.begin(), perm.begin() + n / 2);
    std::vector<Vertex> b(perm.begin() + n / 2, perm.end());
    std::vector<std::vector<Vertex>> blocks{sorted(a), sorted(b)};
    std::sort(blocks.begin(), blocks.end());
    out.coll = replicate(clique_union(n, blocks), n);
    out.planted.kind = ExtremalKind::two_cliques;
    out.planted.parts = blocks;
    return out;
  }
  if (which == "iii") {
    const int h = (n - 2) / 2;
    std::vector<Vertex> hs(perm.begin(), perm.begin() + h);
    std::vector<Vertex> is(perm.begin() + h, perm.end());
    std::vector<SimpleGraph> graphs;
    for (int i = 0; i < n; ++i) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      std::vector<Mask> adj(n, 0);
      for (Vertex a : hs) {
        for (Vertex b : is) {
          adj[a] |= bit(b);
          adj[b] |= bit(a);
        }
      }
      for (int s = 0; s < h; ++s) {
        for (int t = s + 1; t < h; ++t) {
          if (rng.chance(0.5)) {
            adj[hs[s]] |= bit(hs[t]);
            adj[hs[t]] |= bit(hs[s]);
          }
        }
      }
      graphs.push_back(from_masks(n, adj));
    }
    out.coll = GraphCollection(n, std::move(graphs));
    out.planted.kind = ExtremalKind::join_partition;
    out.planted.parts = {sorted(hs), sorted(is)};
    return out;
  }
  throw InvalidInput("unknown obstruction case '" + which + "' (use ii or iii)");
}

GraphCollection generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::random:
      return gen_random_collection(spec.n, spec.m, spec.min_degree, spec.seed);
    case Family::f_family:
      return gen_extremal_F(spec.n, spec.m > 0 ? spec.m : spec.n - 1, spec.q2_edges, spec.seed)
          .coll;
    case Family::two_cliques_cor23:
      return gen_cor23_obstruction(spec.n, "ii", spec.seed).coll;
    case Family::join_partition_cor23:
      return gen_cor23_obstruction(spec.n, "iii", spec.seed).coll;
    case Family::lemma_shape:
      return gen_lemma_shape(spec.lemma, spec.n, spec.seed).coll;
  }
  throw InvalidInput("unknown family");
}

}  // namespace rainbow
