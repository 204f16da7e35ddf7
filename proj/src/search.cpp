#include "rainbow/search.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

namespace rainbow {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::found: return "found";
    case Outcome::none: return "none";
    case Outcome::exhausted: return "exhausted";
  }
  return "?";
}

SearchBudget SearchBudget::from_environment() {
  SearchBudget budget;
  if (const char* env = std::getenv("RAINBOW_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      throw InvalidInput(std::string("RAINBOW_BUDGET must be a positive integer, got '") + env +
                         "'");
    }
    budget.node_limit = value;
  }
  return budget;
}

namespace {

// Edge-color matching for a growing sequence of edges. Edge e may use any
// color in options[e]; Kuhn-style augmentation in ascending color order.
class EdgeColorMatching {
 public:
  EdgeColorMatching() { owner_.fill(-1); }

  int size() const { return static_cast<int>(options_.size()); }

  // Appends an edge and tries to saturate it; on failure the edge is dropped.
  bool push(Mask options) {
    options_.push_back(options);
    color_.push_back(-1);
    Mask visited = 0;
    if (augment(size() - 1, visited)) return true;
    options_.pop_back();
    color_.pop_back();
    return false;
  }

  void pop() {
    owner_[static_cast<std::size_t>(color_.back())] = -1;
    options_.pop_back();
    color_.pop_back();
  }

  const std::vector<Color>& colors() const { return color_; }

 private:
  bool augment(int e, Mask& visited) {
    Mask candidates = options_[static_cast<std::size_t>(e)] & ~visited;
    while (candidates != 0) {
      int c = std::countr_zero(candidates);
      candidates &= candidates - 1;
      visited |= bit(c);
      int holder = owner_[static_cast<std::size_t>(c)];
      if (holder < 0 || augment(holder, visited)) {
        owner_[static_cast<std::size_t>(c)] = e;
        color_[static_cast<std::size_t>(e)] = c;
        return true;
      }
    }
    return false;
  }

  std::vector<Mask> options_;
  std::vector<Color> color_;
  std::array<int, kMaxColors> owner_{};
};

// Backtracking over simple walks from a start vertex with a fixed number of
// edges. target >= 0 pins the final vertex (for cycles, target == start).
class PathEngine {
 public:
  PathEngine(const SubCollectionView& view, Mask allowed, std::uint64_t limit)
      : n_(view.base_order()), limit_(limit) {
    options_.assign(static_cast<std::size_t>(n_ * n_), 0);
    union_adj_.assign(static_cast<std::size_t>(n_), 0);
    const Mask colors = view.colors() & allowed;
    for_each_bit(view.vertices(), [&](int u) {
      for_each_bit(colors, [&](int c) {
        Mask nb = view.neighbors(c, u);
        union_adj_[static_cast<std::size_t>(u)] |= nb;
        for_each_bit(nb, [&](int v) { options_[idx(u, v)] |= bit(c); });
      });
    });
  }

  Outcome run(Vertex start, Vertex target, int edge_count, Mask pool) {
    seq_.assign(1, start);
    matching_ = EdgeColorMatching();
    target_ = target;
    total_ = edge_count;
    pool_ = pool;
    used_ = bit(start);
    aborted_ = false;
    if (!feasible(start, total_)) return Outcome::none;
    if (dfs()) return Outcome::found;
    return aborted_ ? Outcome::exhausted : Outcome::none;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Vertex>& sequence() const { return seq_; }
  const std::vector<Color>& colors() const { return matching_.colors(); }

 private:
  std::size_t idx(Vertex u, Vertex v) const { return static_cast<std::size_t>(u * n_ + v); }
  Mask options(Vertex u, Vertex v) const { return options_[idx(u, v)]; }

  // Can `remaining` more edges still be laid from v?
  bool feasible(Vertex v, int remaining) const {
    if (remaining == 0) return true;
    const Mask target_bit = target_ >= 0 ? bit(target_) : 0;
    const Mask avail = pool_ & ~used_ & ~target_bit;
    Mask frontier = bit(v);
    Mask reached = 0;
    int dist = 0;
    int target_dist = -1;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int u) { next |= union_adj_[static_cast<std::size_t>(u)]; });
      ++dist;
      if (target_dist < 0 && (next & target_bit) != 0) target_dist = dist;
      frontier = next & avail & ~reached;
      reached |= frontier;
    }
    if (target_ >= 0) {
      return target_dist >= 0 && target_dist <= remaining && popcount(reached) >= remaining - 1;
    }
    return popcount(reached) >= remaining;
  }

  bool dfs() {
    const int done = static_cast<int>(seq_.size()) - 1;
    if (done == total_) return true;
    const Vertex cur = seq_.back();
    const int remaining = total_ - done;
    const Mask adj = union_adj_[static_cast<std::size_t>(cur)];
    Mask cand;
    if (target_ >= 0 && remaining == 1) {
      cand = adj & bit(target_);
    } else {
      cand = adj & pool_ & ~used_;
      if (target_ >= 0) cand &= ~bit(target_);
    }
    if (cand == 0) return false;

    // Fail-first: fewest color options, then smallest vertex id.
    std::array<std::pair<int, Vertex>, kMaxVertices> order{};
    std::size_t count = 0;
    for_each_bit(cand, [&](int v) { order[count++] = {popcount(options(cur, v)), v}; });
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));

    for (std::size_t i = 0; i < count; ++i) {
      if (++nodes_ > limit_) {
        aborted_ = true;
        return false;
      }
      const Vertex v = order[i].second;
      if (!matching_.push(options(cur, v))) continue;
      seq_.push_back(v);
      const Mask before = used_;
      used_ |= bit(v);
      if (feasible(v, remaining - 1) && dfs()) return true;
      used_ = before;
      seq_.pop_back();
      matching_.pop();
      if (aborted_) return false;
    }
    return false;
  }

  int n_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> options_;
  std::vector<Mask> union_adj_;

  std::vector<Vertex> seq_;
  EdgeColorMatching matching_;
  Vertex target_ = -1;
  int total_ = 0;
  Mask pool_ = 0;
  Mask used_ = 0;
  bool aborted_ = false;
};

void check_view_vertex(const SubCollectionView& view, Vertex v) {
  if (v < 0 || v >= view.base_order() || !view.has_vertex(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " not in view");
  }
}

void check_budget(const SearchBudget& budget) {
  if (budget.node_limit == 0) throw InvalidInput("search budget must be positive");
}

}  // namespace

std::optional<std::vector<Color>> assign_colors(const SubCollectionView& view,
                                                std::span<const Vertex> sequence,
                                                Mask forbidden) {
  Mask seen = 0;
  for (Vertex v : sequence) {
    check_view_vertex(view, v);
    if (seen & bit(v)) throw InvalidInput("repeated vertex " + std::to_string(v));
    seen |= bit(v);
  }
  EdgeColorMatching matching;
  bool ok = true;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    Vertex u = sequence[i];
    Vertex v = sequence[i + 1];
    Mask options = view.edge_colors(u, v) & ~forbidden;
    if (options == 0) {
      throw InvalidInput("(" + std::to_string(u) + "," + std::to_string(v) +
                         ") is not an edge of any allowed graph");
    }
    if (ok && !matching.push(options)) ok = false;
  }
  if (!ok) return std::nullopt;
  return matching.colors();
}

std::optional<ColoredPath> realize_path(const SubCollectionView& view,
                                        std::span<const Vertex> sequence, Mask forbidden) {
  Mask seen = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    Vertex v = sequence[i];
    if (v < 0 || v >= view.base_order() || !view.has_vertex(v) || (seen & bit(v))) {
      return std::nullopt;
    }
    seen |= bit(v);
    if (i > 0 && (view.edge_colors(sequence[i - 1], v) & ~forbidden) == 0) return std::nullopt;
  }
  auto colors = assign_colors(view, sequence, forbidden);
  if (!colors) return std::nullopt;
  ColoredPath p{{sequence.begin(), sequence.end()}, std::move(*colors)};
  if (!verify_colored_path(view, p)) return std::nullopt;
  return p;
}

SearchResult<ColoredPath> find_rainbow_path(const SubCollectionView& view, Vertex x, Vertex y,
                                            int k, Mask forbidden, SearchBudget budget) {
  check_view_vertex(view, x);
  check_view_vertex(view, y);
  check_budget(budget);
  if (x == y) throw InvalidInput("path endpoints must differ");
  if (k < 2 || k > view.vertex_count()) {
    throw InvalidInput("k = " + std::to_string(k) + " outside [2, " +
                       std::to_string(view.vertex_count()) + "]");
  }
  const Mask allowed = view.colors() & ~forbidden;
  SearchResult<ColoredPath> result;
  if (k - 1 > popcount(allowed)) return result;

  PathEngine engine(view, allowed, budget.node_limit);
  result.outcome = engine.run(x, y, k - 1, view.vertices());
  result.nodes = engine.nodes();
  if (result.found()) result.witness = ColoredPath{engine.sequence(), engine.colors()};
  return result;
}

std::optional<int> union_distance(const SubCollectionView& view, Vertex x, Vertex y,
                                  Mask forbidden) {
  const SubCollectionView v = view.restrict(0, forbidden);
  Mask frontier = bit(x);
  Mask reached = bit(x);
  for (int dist = 1; frontier != 0; ++dist) {
    Mask next = 0;
    for_each_bit(frontier, [&](int u) { next |= v.union_neighbors(u); });
    if (next & bit(y)) return dist;
    frontier = next & ~reached;
    reached |= next;
  }
  return std::nullopt;
}

DistanceResult rainbow_distance(const SubCollectionView& view, Vertex x, Vertex y,
                                SearchBudget budget) {
  check_view_vertex(view, x);
  check_view_vertex(view, y);
  if (x == y) throw InvalidInput("distance endpoints must differ");
  DistanceResult result;
  auto base = union_distance(view, x, y);
  if (!base) return result;
  const int max_len = std::min(view.vertex_count() - 1, view.color_count());
  for (int len = *base; len <= max_len; ++len) {
    auto r = find_rainbow_path(view, x, y, len + 1, 0, budget);
    result.nodes += r.nodes;
    if (r.outcome == Outcome::found) {
      result.outcome = Outcome::found;
      result.distance = len;
      return result;
    }
    if (r.outcome == Outcome::exhausted) {
      result.outcome = Outcome::exhausted;
      return result;
    }
  }
  return result;
}

SearchResult<ColoredPath> find_rainbow_ham_path(const SubCollectionView& view, Vertex x,
                                                Vertex y, SearchBudget budget) {
  return find_rainbow_path(view, x, y, view.vertex_count(), 0, budget);
}

SearchResult<ColoredPath> find_any_rainbow_ham_path(const SubCollectionView& view,
                                                    SearchBudget budget) {
  check_budget(budget);
  SearchResult<ColoredPath> result;
  const int count = view.vertex_count();
  if (count == 0) return result;
  if (count == 1) {
    result.outcome = Outcome::found;
    result.witness = ColoredPath{{std::countr_zero(view.vertices())}, {}};
    return result;
  }
  if (count - 1 > view.color_count()) return result;
  bool exhausted = false;
  for (Vertex start : bits_of(view.vertices())) {
    SearchBudget remaining = budget;
    if (result.nodes >= budget.node_limit) {
      exhausted = true;
      break;
    }
    remaining.node_limit = budget.node_limit - result.nodes;
    PathEngine engine(view, view.colors(), remaining.node_limit);
    Outcome o = engine.run(start, -1, count - 1, view.vertices());
    result.nodes += engine.nodes();
    if (o == Outcome::found) {
      result.outcome = Outcome::found;
      result.witness = ColoredPath{engine.sequence(), engine.colors()};
      return result;
    }
    if (o == Outcome::exhausted) {
      exhausted = true;
      break;
    }
  }
  result.outcome = exhausted ? Outcome::exhausted : Outcome::none;
  return result;
}

SearchResult<ColoredCycle> find_rainbow_cycle(const SubCollectionView& view, int length,
                                              SearchBudget budget) {
  check_budget(budget);
  if (length < 3 || length > view.vertex_count()) {
    throw InvalidInput("cycle length " + std::to_string(length) + " outside [3, " +
                       std::to_string(view.vertex_count()) + "]");
  }
  SearchResult<ColoredCycle> result;
  if (length > view.color_count()) return result;
  bool exhausted = false;
  // The smallest vertex of the cycle is its start.
  for (Vertex start : bits_of(view.vertices())) {
    const Mask pool = view.vertices() & ~low_bits(start);
    if (popcount(pool) < length) break;
    if (result.nodes >= budget.node_limit) {
      exhausted = true;
      break;
    }
    PathEngine engine(view, view.colors(), budget.node_limit - result.nodes);
    Outcome o = engine.run(start, start, length, pool);
    result.nodes += engine.nodes();
    if (o == Outcome::found) {
      std::vector<Vertex> vs = engine.sequence();
      vs.pop_back();
      result.outcome = Outcome::found;
      result.witness = ColoredCycle{std::move(vs), engine.colors()};
      return result;
    }
    if (o == Outcome::exhausted) {
      exhausted = true;
      break;
    }
  }
  result.outcome = exhausted ? Outcome::exhausted : Outcome::none;
  return result;
}

}  // namespace rainbow
