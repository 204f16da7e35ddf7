#pragma once

// Seeded instance generators.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard, seeded per stream through a splitmix64 mix of
// (seed, stream id). Bounded draws use rejection sampling on the raw 64-bit
// output instead of <random> distributions, whose algorithms are
// implementation-defined, so instances reproduce across platforms.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/frame.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { random, f_family, two_cliques_cor23, join_partition_cor23, lemma_shape };

const char* to_string(Family f);
Family family_from_string(const std::string& s);

struct GenSpec {
  Family family = Family::random;
  int n = 0;
  int m = 0;
  int min_degree = 0;
  std::uint64_t seed = 0;
  std::string lemma;          // lemma_shape only, e.g. "lem6:c2_q3"
  std::vector<Edge> q2_edges; // f_family only, local Q2 indices; empty = default
};

GraphCollection generate(const GenSpec& spec);

GraphCollection gen_random_collection(int n, int m, int min_degree, std::uint64_t seed);

/// Generated collection with the structure it was built from.
struct PlantedCollection {
  GraphCollection coll;
  ExtremalWitness planted;
};

/// m identical copies of Q1 join Q2, vertex labels shuffled by the seed.
/// q2_edges use local indices 0..(n+1)/2-1; empty selects a default Q2
/// (one isolated edge plus disjoint edges, with a triangle if needed).
PlantedCollection gen_extremal_F(int n, int m, std::span<const Edge> q2_edges,
                                 std::uint64_t seed);

/// 'ii': n copies of K_{n/2} U K_{n/2}; 'iii': n graphs G[H] join I with I
/// independent, |H| = (n-2)/2, random G[H].
PlantedCollection gen_cor23_obstruction(int n, const std::string& which, std::uint64_t seed);

/// Instance planting the structural hypotheses of one proof lemma.
struct LemmaInstance {
  std::string lemma;    // "lem2", "lem3", "lem6", "lem7", "lem8"
  std::string variant;
  GraphCollection coll{1, {SimpleGraph(1)}};
  ProofFrame frame;
  Color j = 0;                        // the graph dropped from H to form H_j
  std::optional<ColoredCycle> cycle;  // lem2: Ham cycle of H_j; lem3: (n-4)-cycle
  std::optional<Vertex> w;            // lem3: the vertex off the cycle
  std::optional<ColoredPath> path;    // lem6: Ham path of H_j
  std::vector<Vertex> part_a;         // lem7: U1, lem8: F
  std::vector<Vertex> part_b;         // lem7: U2, lem8: I
};

/// lemma_id is "<lemma>" or "<lemma>:<variant>"; without a variant the seed
/// picks one. Layout: z = 0, core vertices 1..n-3 (so core vertex i plays
/// u_i), x = n-2, y = n-1, missing color n-2 (m = n-1), j = n-3.
LemmaInstance gen_lemma_shape(const std::string& lemma_id, int n, std::uint64_t seed);

/// Variants accepted by gen_lemma_shape for (lemma, n).
std::vector<std::string> lemma_variants(const std::string& lemma, int n);

}  // namespace rainbow
