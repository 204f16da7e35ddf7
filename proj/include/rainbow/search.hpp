#pragma once

// Exact rainbow path and cycle search.
//
// Color assignment for a fixed vertex sequence is a bipartite matching
// between its edges and the colors whose graph contains them. The
// backtracking search keeps that matching incrementally: extending the
// partial path by one edge tries a single augmenting path, and a failed
// augmentation prunes the branch.
//
// Every search is exhaustive up to a node budget. Running out of budget is
// reported as Outcome::exhausted, never as Outcome::none.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

enum class Outcome { found, none, exhausted };

const char* to_string(Outcome o);

struct SearchBudget {
  static constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

  std::uint64_t node_limit = kDefaultNodeLimit;
  bool deterministic = true;

  /// Default budget, overridden by the RAINBOW_BUDGET environment variable.
  static SearchBudget from_environment();
};

template <class T>
struct SearchResult {
  Outcome outcome = Outcome::none;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  bool found() const { return outcome == Outcome::found; }
};

/// Injective edge->color assignment for the path `sequence`, avoiding
/// `forbidden`. Throws InvalidInput on repeated vertices or when a
/// consecutive pair is not an edge of any allowed graph.
std::optional<std::vector<Color>> assign_colors(const SubCollectionView& view,
                                                std::span<const Vertex> sequence,
                                                Mask forbidden = 0);

/// Builds and verifies a ColoredPath from a vertex sequence, or nullopt.
std::optional<ColoredPath> realize_path(const SubCollectionView& view,
                                        std::span<const Vertex> sequence, Mask forbidden = 0);

SearchResult<ColoredPath> find_rainbow_path(const SubCollectionView& view, Vertex x, Vertex y,
                                            int k, Mask forbidden = 0, SearchBudget budget = {});

/// Shortest-path distance in the union of the allowed graphs.
std::optional<int> union_distance(const SubCollectionView& view, Vertex x, Vertex y,
                                  Mask forbidden = 0);

struct DistanceResult {
  Outcome outcome = Outcome::none;  // none: unreachable, exhausted: unknown
  std::optional<int> distance;
  std::uint64_t nodes = 0;
};

/// Length (edge count) of a shortest rainbow x-y path.
DistanceResult rainbow_distance(const SubCollectionView& view, Vertex x, Vertex y,
                                SearchBudget budget = {});

/// Rainbow path from x to y through every vertex of the view.
SearchResult<ColoredPath> find_rainbow_ham_path(const SubCollectionView& view, Vertex x,
                                                Vertex y, SearchBudget budget = {});

/// Rainbow Hamiltonian path of the view with free endpoints.
SearchResult<ColoredPath> find_any_rainbow_ham_path(const SubCollectionView& view,
                                                    SearchBudget budget = {});

/// Rainbow cycle on exactly `length` vertices.
SearchResult<ColoredCycle> find_rainbow_cycle(const SubCollectionView& view, int length,
                                              SearchBudget budget = {});

}  // namespace rainbow
