#pragma once

// Global properties of graph collections: (rainbow) panconnectivity,
// rainbow Hamiltonian connectivity, and recognizers for the extremal
// structures that block them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

enum class Verdict { holds, fails, unknown };

const char* to_string(Verdict v);

struct CheckOptions {
  SearchBudget budget;
  int jobs = 1;
};

struct FailingTriple {
  Vertex x = 0;
  Vertex y = 0;
  int k = 0;
  friend auto operator<=>(const FailingTriple&, const FailingTriple&) = default;
};

enum class ExtremalKind { f_family, two_cliques, join_partition, single_graph_split };

const char* to_string(ExtremalKind k);

/// Structural witness. parts holds the vertex partition, in the order
/// (Q1, Q2) for f_family, (H, I) for join_partition, and the clique blocks
/// for two_cliques / single_graph_split.
struct ExtremalWitness {
  ExtremalKind kind = ExtremalKind::f_family;
  std::vector<std::vector<Vertex>> parts;
  std::optional<Edge> single_edge;  // f_family: the single-edge component of Q2
};

/// Re-checks a witness against every member graph of the collection.
bool reverify(const ExtremalWitness& w, const GraphCollection& coll);

struct PairCertificate {
  Vertex x = 0;
  Vertex y = 0;
  Outcome distance_outcome = Outcome::none;
  std::optional<int> distance;
  std::map<int, ColoredPath> witnesses;
};

struct PanconnectivityCertificate {
  int n = 0;
  int m = 0;
  Verdict verdict = Verdict::holds;
  int k_max = 0;
  bool k_capped = false;  // m + 1 < n: the k-range stops at m + 1
  std::vector<PairCertificate> pairs;
  std::optional<FailingTriple> failure;
  std::optional<FailingTriple> first_unknown;
  std::optional<ExtremalWitness> extremal;
};

PanconnectivityCertificate is_rainbow_panconnected(const GraphCollection& coll,
                                                   const CheckOptions& options = {});

/// Ordinary panconnectivity of one graph (n-1 identical copies).
Verdict is_panconnected_single(const SimpleGraph& g, const CheckOptions& options = {});

struct HamConnectivityResult {
  Verdict verdict = Verdict::holds;
  std::vector<ColoredPath> witnesses;  // one per pair x < y, in lexicographic order
  std::optional<Edge> failing_pair;
  std::optional<Edge> first_unknown;
};

HamConnectivityResult is_rainbow_ham_connected(const GraphCollection& coll,
                                               const CheckOptions& options = {});

std::optional<ExtremalWitness> recognize_F_family(const GraphCollection& coll);

/// All surviving graphs equal K_l U K_{r-l} on the surviving vertices.
std::optional<ExtremalWitness> recognize_clique_split(const SubCollectionView& view);
/// Clique split with two halves of equal size.
std::optional<ExtremalWitness> recognize_two_cliques(const SubCollectionView& view);
/// Partition (H, I) with |I| = independent_size, every surviving graph equal
/// to G[H] join G[I] and G[I] edgeless.
std::optional<ExtremalWitness> recognize_join_partition(const SubCollectionView& view,
                                                        int independent_size);

enum class ObstructionCase { has_ham_path, two_cliques, join_partition, unresolved };

const char* to_string(ObstructionCase c);

struct ObstructionReport {
  ObstructionCase tag = ObstructionCase::unresolved;
  std::optional<ExtremalWitness> witness;
  std::optional<ColoredPath> ham_path;
  Outcome search_outcome = Outcome::none;
  bool outside_hypothesis = false;  // some graph has min degree < n/2 - 1
};

ObstructionReport classify_ham_path_obstruction(const GraphCollection& coll,
                                                const CheckOptions& options = {});

struct TheoremCheck {
  Verdict verdict = Verdict::holds;  // holds / fails = violated / unknown = inconclusive
  std::string branch;                // "panconnected" or "F_family" when it holds
  PanconnectivityCertificate certificate;
  std::optional<ExtremalWitness> extremal;
  std::string recognition_trace;
};

/// Either the collection is rainbow panconnected or it is the extremal F
/// family. Requires m = n-1 and every graph with min degree >= (n+1)/2.
TheoremCheck verify_theorem_1_5(const GraphCollection& coll, const CheckOptions& options = {});

/// Degree threshold ceil((n+1)/2).
constexpr int dirac_threshold(int n) { return (n + 2) / 2; }

}  // namespace rainbow
