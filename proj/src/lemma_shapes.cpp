#include <algorithm>
#include <map>

#include "rainbow/generators.hpp"

namespace rainbow {

namespace {

struct Shape {
  int n;
  Vertex x, y, z;
  Color cx;
  std::vector<std::vector<Mask>> adj;  // per color

  explicit Shape(int n_)
      : n(n_), x(n_ - 2), y(n_ - 1), z(0), cx(n_ - 2),
        adj(n_ - 1, std::vector<Mask>(n_, 0)) {}

  int m() const { return n - 1; }
  int threshold() const { return (n + 1) / 2; }
  Mask core() const { return low_bits(n - 2) & ~bit(0); }

  void add(Color c, Vertex u, Vertex v) {
    adj[c][u] |= bit(v);
    adj[c][v] |= bit(u);
  }
  void remove(Color c, Vertex u, Vertex v) {
    adj[c][u] &= ~bit(v);
    adj[c][v] &= ~bit(u);
  }
  bool has(Color c, Vertex u, Vertex v) const { return (adj[c][u] >> v) & 1U; }
  void add_all(Vertex u, Vertex v) {
    for (Color c = 0; c < m(); ++c) add(c, u, v);
  }

  /// Every core vertex joined to x, y, z; xy and yz everywhere; xz in every
  /// graph but cx.
  void attach_frame() {
    for (Color c = 0; c < m(); ++c) {
      for_each_bit(core(), [&](int u) {
        add(c, u, x);
        add(c, u, y);
        add(c, u, z);
      });
      add(c, x, y);
      add(c, y, z);
      if (c != cx) add(c, x, z);
    }
  }

  bool deletable(Color c, Vertex u, Vertex v) const {
    return has(c, u, v) && popcount(adj[c][u]) > threshold() &&
           popcount(adj[c][v]) > threshold();
  }

  bool try_remove(Color c, Vertex u, Vertex v) {
    if (!deletable(c, u, v)) return false;
    remove(c, u, v);
    return true;
  }

  /// Up to `count` degree-safe deletions of edges between {x, y} and the core.
  void random_deletions(Rng& rng, int count) {
    std::vector<std::tuple<Color, Vertex, Vertex>> options;
    for (Color c = 0; c < m(); ++c) {
      for_each_bit(core(), [&](int u) {
        options.emplace_back(c, x, u);
        options.emplace_back(c, y, u);
      });
    }
    rng.shuffle(options);
    for (const auto& [c, a, b] : options) {
      if (count == 0) break;
      if (try_remove(c, a, b)) --count;
    }
  }

  /// Raises core degrees inside every graph to `target` with random core
  /// chords.
  void repair_core(Rng& rng, int target) {
    for (Color c = 0; c < m(); ++c) {
      for_each_bit(core(), [&](int u) {
        while (popcount(adj[c][u] & core()) < target) {
          const auto options = bits_of(core() & ~adj[c][u] & ~bit(u));
          add(c, u, options[rng.below(options.size())]);
        }
      });
    }
  }

  GraphCollection build() const {
    std::vector<SimpleGraph> graphs;
    for (Color c = 0; c < m(); ++c) {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for_each_bit(adj[c][u] & ~low_bits(u + 1), [&](int v) { edges.emplace_back(u, v); });
      }
      graphs.push_back(build_graph(n, edges));
    }
    GraphCollection coll(n, std::move(graphs));
    if (collection_min_degree(coll) < threshold()) {
      throw std::logic_error("lemma shape generator produced a low-degree graph");
    }
    return coll;
  }
};

LemmaInstance make_instance(const std::string& lemma, const std::string& variant,
                            const Shape& s, Color j) {
  LemmaInstance out;
  out.lemma = lemma;
  out.variant = variant;
  out.coll = s.build();
  out.frame = {s.x, s.y, s.z, s.cx};
  out.j = j;
  return out;
}

ColoredCycle planted_cycle(int length) {
  ColoredCycle cyc;
  for (int i = 0; i < length; ++i) {
    cyc.vertices.push_back(i + 1);
    cyc.colors.push_back(i);
  }
  return cyc;
}

void require_odd(int n, int low, int high, const std::string& lemma) {
  if (n % 2 == 0 || n < low || n > high) {
    throw InvalidInput(lemma + " shapes need odd n in [" + std::to_string(low) + ", " +
                       std::to_string(high) + "], got " + std::to_string(n));
  }
}

LemmaInstance lem2(int n, std::uint64_t seed) {
  require_odd(n, 7, 63, "lem2");
  Shape s(n);
  Rng rng(derive_seed(seed, 2));
  const int len = n - 3;
  for (int i = 0; i < len; ++i) s.add_all(i + 1, (i + 1) % len + 1);
  for (Color c = 0; c < s.m(); ++c) {
    for (Vertex u = 1; u <= len; ++u) {
      for (Vertex v = u + 1; v <= len; ++v) {
        if (rng.chance(0.3)) s.add(c, u, v);
      }
    }
  }
  s.repair_core(rng, (n - 5) / 2);
  s.attach_frame();
  s.random_deletions(rng, static_cast<int>(rng.below(2 * n)));
  auto out = make_instance("lem2", "random", s, n - 3);
  out.cycle = planted_cycle(len);
  return out;
}

LemmaInstance lem3(int n, const std::string& variant, std::uint64_t seed) {
  if (n != 7 && n != 9) throw InvalidInput("lem3 shapes exist for n in {7, 9}");
  if (variant == "case3" && n == 7) {
    throw InvalidInput("lem3 case3 needs n >= 9: at n = 7 its vertex range is empty");
  }
  Shape s(n);
  Rng rng(derive_seed(seed, 3));
  const int len = n - 4;
  const Vertex w = n - 3;
  for (int i = 0; i < len; ++i) s.add_all(i + 1, (i + 1) % len + 1);
  for (int i = 1; i <= len - 2; i += 2) s.add_all(w, i);
  s.attach_frame();
  const Color a = n - 4;
  auto must = [&](Color c, Vertex u, Vertex v) {
    if (!s.try_remove(c, u, v)) throw std::logic_error("lem3: planned deletion infeasible");
  };
  if (variant == "random") {
    s.random_deletions(rng, static_cast<int>(rng.below(n)));
  } else if (variant == "case1_u1" || variant == "case1_z" || variant == "case1_pair") {
    for (Vertex u = 1; u <= len - 2; u += 2) must(s.cx, s.x, u);
    if (variant != "case1_u1") {
      for (Vertex u = 1; u <= len - 2; u += 2) must(a, s.y, u);
    }
    if (variant == "case1_pair") must(a, s.y, s.z);
  } else if (variant == "case3") {
    // Spare degree outside H lets x avoid the last two cycle vertices.
    s.add(s.cx, len - 1, 1);
    s.add(s.cx, len, 2);
    must(s.cx, s.x, len - 1);
    must(s.cx, s.x, len);
  } else {
    throw InvalidInput("unknown lem3 variant '" + variant + "'");
  }
  auto out = make_instance("lem3", variant, s, n - 3);
  out.cycle = planted_cycle(len);
  out.w = w;
  return out;
}

// Extra core edges beyond the path u_1 .. u_{n-3}, in path coordinates.
const std::map<std::string, std::vector<Edge>>& lem6_chords() {
  static const std::map<std::string, std::vector<Edge>> table{
      {"a", {{1, 3}, {1, 4}, {2, 4}, {4, 6}}},
      {"b", {{1, 4}, {4, 6}}},
      {"c1", {{1, 3}, {3, 6}, {4, 6}}},
      {"c2_q3", {{1, 3}, {4, 6}}},
      {"c2_q4", {{1, 3}, {3, 6}}},
      {"c2_q5", {{1, 3}, {3, 6}, {4, 6}, {3, 5}}},
  };
  return table;
}

LemmaInstance lem6(int n, const std::string& variant, std::uint64_t seed) {
  if (n != 7 && n != 9) throw InvalidInput("lem6 shapes exist for n in {7, 9}");
  Shape s(n);
  Rng rng(derive_seed(seed, 6));
  const int len = n - 3;
  for (Vertex u = 1; u < len; ++u) s.add_all(u, u + 1);
  if (n == 7) {
    if (variant != "c2_q2") throw InvalidInput("lem6 at n = 7 has only variant c2_q2");
  } else {
    const auto it = lem6_chords().find(variant);
    if (it == lem6_chords().end()) throw InvalidInput("unknown lem6 variant '" + variant + "'");
    for (const auto& [u, v] : it->second) s.add_all(u, v);
    if (variant == "a") s.remove(n - 4, 1, 2);
    if (variant == "c2_q5") s.remove(n - 3, 5, 6);
  }
  s.attach_frame();
  s.random_deletions(rng, static_cast<int>(rng.below(n)));
  auto out = make_instance("lem6", variant, s, n - 3);
  ColoredPath p;
  for (Vertex u = 1; u <= len; ++u) p.vertices.push_back(u);
  for (Color c = 0; c + 1 < len; ++c) p.colors.push_back(c);
  out.path = p;
  return out;
}

LemmaInstance lem7(int n, const std::string& variant, std::uint64_t seed) {
  require_odd(n, 7, 63, "lem7");
  if (variant != "cross" && variant != "nocross") {
    throw InvalidInput("unknown lem7 variant '" + variant + "'");
  }
  Shape s(n);
  Rng rng(derive_seed(seed, 7));
  const int h = (n - 3) / 2;
  const Color j = n - 3;
  std::vector<Vertex> u1, u2;
  for (Vertex u = 1; u <= h; ++u) u1.push_back(u);
  for (Vertex u = h + 1; u <= 2 * h; ++u) u2.push_back(u);
  for (const auto& block : {u1, u2}) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t k = i + 1; k < block.size(); ++k) s.add_all(block[i], block[k]);
    }
  }
  for (Vertex a : u1) {
    for (Vertex b : u2) {
      if (rng.chance(0.3)) s.add(s.cx, a, b);
    }
  }
  if (variant == "cross") {
    s.add(j, u1[rng.below(u1.size())], u2[rng.below(u2.size())]);
  }
  s.attach_frame();
  s.random_deletions(rng, static_cast<int>(rng.below(n)));
  auto out = make_instance("lem7", variant, s, j);
  out.part_a = u1;
  out.part_b = u2;
  return out;
}

LemmaInstance lem8(int n, const std::string& variant, std::uint64_t seed) {
  require_odd(n, 7, 63, "lem8");
  if (variant != "case1" && variant != "case2.1" && variant != "case2.2") {
    throw InvalidInput("unknown lem8 variant '" + variant + "'");
  }
  Shape s(n);
  Rng rng(derive_seed(seed, 8));
  const int f = (n - 5) / 2;
  std::vector<Vertex> fs, is;
  for (Vertex u = 1; u <= n - 3; ++u) (u <= f ? fs : is).push_back(u);
  const bool identical = variant == "case2.2";
  for (Color c = 0; c < s.m(); ++c) {
    Rng local(derive_seed(seed, identical ? 0 : 100 + c));
    for (Vertex i : is) {
      for (Vertex o : fs) s.add(c, i, o);
      s.add(c, i, s.x);
      s.add(c, i, s.y);
      s.add(c, i, s.z);
    }
    s.add(c, s.x, s.y);
    for (Vertex o : fs) s.add(c, s.z, o);
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        if (local.chance(0.5)) s.add(c, fs[a], fs[b]);
      }
    }
  }
  if (variant != "case2.2") {
    // One edge between {x, y} and F + {z}, never xz in the missing graph.
    const Vertex end = rng.chance(0.5) ? s.x : s.y;
    std::vector<Vertex> others = fs;
    others.push_back(s.z);
    const Vertex other = others[rng.below(others.size())];
    Color c = static_cast<Color>(rng.below(s.m()));
    if (end == s.x && other == s.z && c == s.cx) c = 0;
    s.add(c, end, other);
  }
  if (variant == "case1") {
    const auto a = rng.below(is.size());
    auto b = rng.below(is.size() - 1);
    if (b >= a) ++b;
    s.add(s.cx, is[a], is[b]);
  }
  auto out = make_instance("lem8", variant, s, n - 3);
  out.part_a = fs;
  out.part_b = is;
  return out;
}

}  // namespace

std::vector<std::string> lemma_variants(const std::string& lemma, int n) {
  if (lemma == "lem2") return {"random"};
  if (lemma == "lem3") {
    if (n == 9) return {"random", "case1_u1", "case1_z", "case1_pair", "case3"};
    return {"random", "case1_u1", "case1_z", "case1_pair"};
  }
  if (lemma == "lem6") {
    if (n == 7) return {"c2_q2"};
    return {"a", "b", "c1", "c2_q3", "c2_q4", "c2_q5"};
  }
  if (lemma == "lem7") return {"cross", "nocross"};
  if (lemma == "lem8") return {"case1", "case2.1", "case2.2"};
  throw InvalidInput("unknown lemma shape '" + lemma + "'");
}

LemmaInstance gen_lemma_shape(const std::string& lemma_id, int n, std::uint64_t seed) {
  const auto colon = lemma_id.find(':');
  const std::string lemma = lemma_id.substr(0, colon);
  std::string variant;
  if (colon != std::string::npos) {
    variant = lemma_id.substr(colon + 1);
  } else {
    const auto options = lemma_variants(lemma, n);
    variant = options[splitmix64(seed) % options.size()];
  }
  if (lemma == "lem2") return lem2(n, seed);
  if (lemma == "lem3") return lem3(n, variant, seed);
  if (lemma == "lem6" || lemma == "lem5") {
    auto inst = lem6(n, variant, seed);
    inst.lemma = lemma;
    return inst;
  }
  if (lemma == "lem7") return lem7(n, variant, seed);
  if (lemma == "lem8") return lem8(n, variant, seed);
  throw InvalidInput("unknown lemma shape '" + lemma + "'");
}

}  // namespace rainbow
