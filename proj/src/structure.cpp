#include "rainbow/structure.hpp"

#include <algorithm>

#include "rainbow/parallel.hpp"

namespace rainbow {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::f_family: return "F_family";
    case ExtremalKind::two_cliques: return "two_cliques";
    case ExtremalKind::join_partition: return "join_partition";
    case ExtremalKind::single_graph_split: return "single_graph_split";
  }
  return "?";
}

const char* to_string(ObstructionCase c) {
  switch (c) {
    case ObstructionCase::has_ham_path: return "i";
    case ObstructionCase::two_cliques: return "ii";
    case ObstructionCase::join_partition: return "iii";
    case ObstructionCase::unresolved: return "unresolved";
  }
  return "?";
}

namespace {

std::vector<std::pair<Vertex, Vertex>> ordered_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  return pairs;
}

struct PairOutcome {
  PairCertificate cert;
  std::optional<FailingTriple> failure;
  std::optional<FailingTriple> unknown;
};

PairOutcome check_pair(const GraphCollection& coll, Vertex x, Vertex y, int k_max,
                       const SearchBudget& budget) {
  PairOutcome out;
  out.cert.x = x;
  out.cert.y = y;
  const SubCollectionView view(coll);
  DistanceResult d = rainbow_distance(view, x, y, budget);
  out.cert.distance_outcome = d.outcome;
  if (d.outcome == Outcome::exhausted) {
    out.unknown = FailingTriple{x, y, 0};
    return out;
  }
  if (d.outcome == Outcome::none) {
    // No rainbow path of any length: the pair is not connected at all.
    out.failure = FailingTriple{x, y, 2};
    return out;
  }
  out.cert.distance = d.distance;
  for (int k = *d.distance + 1; k <= k_max; ++k) {
    auto r = find_rainbow_path(view, x, y, k, 0, budget);
    if (r.outcome == Outcome::found) {
      out.cert.witnesses.emplace(k, std::move(*r.witness));
    } else if (r.outcome == Outcome::none) {
      out.failure = FailingTriple{x, y, k};
      return out;
    } else if (!out.unknown) {
      out.unknown = FailingTriple{x, y, k};
    }
  }
  return out;
}

// Identical graphs, n odd, and some vertex v whose neighborhood is Q2.
std::optional<ExtremalWitness> find_f_partition(const GraphCollection& coll,
                                                std::string* reason) {
  const int n = coll.order();
  auto fail = [&](const char* why) -> std::optional<ExtremalWitness> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  if (n % 2 == 0) return fail("n is even");
  if (n < 5) return fail("n < 5");
  if (!coll.all_identical()) return fail("member graphs are not identical");
  const SimpleGraph& g = coll[0];
  const Mask all = coll.all_vertices();
  for (Vertex v = 0; v < n; ++v) {
    const Mask q2 = g.neighbors(v);
    const Mask q1 = all & ~q2;
    if (popcount(q1) != (n - 1) / 2) continue;
    bool ok = true;
    for_each_bit(q1, [&](int u) { ok = ok && g.neighbors(u) == q2; });
    if (!ok) continue;
    std::optional<Edge> single;
    for_each_bit(q2, [&](int u) {
      const Mask inner = g.neighbors(u) & q2;
      if (inner == 0) ok = false;
      if (popcount(inner) == 1) {
        const Vertex w = std::countr_zero(inner);
        if ((g.neighbors(w) & q2) == bit(u) && !single) single = Edge{std::min(u, w), std::max(u, w)};
      }
    });
    if (!ok || !single) continue;
    ExtremalWitness w{ExtremalKind::f_family, {bits_of(q1), bits_of(q2)}, single};
    return w;
  }
  return fail("no vertex neighborhood yields an independent Q1 fully joined to Q2 "
              "with min degree >= 1 and a single-edge component");
}

bool is_join(const SimpleGraph& g, Mask h, Mask i) {
  bool ok = true;
  for_each_bit(i, [&](int v) { ok = ok && (g.neighbors(v) & (h | i)) == h; });
  return ok;
}

}  // namespace

bool reverify(const ExtremalWitness& w, const GraphCollection& coll) {
  const int n = coll.order();
  Mask covered = 0;
  for (const auto& part : w.parts) {
    for (Vertex v : part) {
      if (v < 0 || v >= n || (covered & bit(v))) return false;
      covered |= bit(v);
    }
  }
  if (covered != coll.all_vertices()) return false;

  switch (w.kind) {
    case ExtremalKind::f_family: {
      if (w.parts.size() != 2 || !w.single_edge || n % 2 == 0) return false;
      const Mask q1 = mask_of(w.parts[0]);
      const Mask q2 = mask_of(w.parts[1]);
      if (popcount(q1) != (n - 1) / 2 || popcount(q2) != (n + 1) / 2) return false;
      if (!coll.all_identical()) return false;
      const auto [a, b] = *w.single_edge;
      if (!(q2 & bit(a)) || !(q2 & bit(b))) return false;
      for (const auto& g : coll.graphs()) {
        if (!is_join(g, q2, q1)) return false;
        bool ok = true;
        for_each_bit(q2, [&](int u) { ok = ok && (g.neighbors(u) & q2) != 0; });
        if (!ok) return false;
        if ((g.neighbors(a) & q2) != bit(b) || (g.neighbors(b) & q2) != bit(a)) return false;
      }
      return true;
    }
    case ExtremalKind::two_cliques:
    case ExtremalKind::single_graph_split: {
      if (w.parts.size() != 2) return false;
      if (w.kind == ExtremalKind::two_cliques && w.parts[0].size() != w.parts[1].size()) {
        return false;
      }
      const SimpleGraph expected = clique_union(n, w.parts);
      return std::all_of(coll.graphs().begin(), coll.graphs().end(),
                         [&](const SimpleGraph& g) { return g == expected; });
    }
    case ExtremalKind::join_partition: {
      if (w.parts.size() != 2) return false;
      const Mask h = mask_of(w.parts[0]);
      const Mask i = mask_of(w.parts[1]);
      return std::all_of(coll.graphs().begin(), coll.graphs().end(),
                         [&](const SimpleGraph& g) { return is_join(g, h, i); });
    }
  }
  return false;
}

PanconnectivityCertificate is_rainbow_panconnected(const GraphCollection& coll,
                                                   const CheckOptions& options) {
  PanconnectivityCertificate cert;
  cert.n = coll.order();
  cert.m = coll.size();
  cert.k_max = std::min(cert.n, cert.m + 1);
  cert.k_capped = cert.m + 1 < cert.n;

  const auto pairs = ordered_pairs(cert.n);
  std::vector<PairOutcome> outcomes(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    outcomes[i] = check_pair(coll, pairs[i].first, pairs[i].second, cert.k_max, options.budget);
  });

  for (auto& o : outcomes) {
    if (o.failure && (!cert.failure || *o.failure < *cert.failure)) cert.failure = o.failure;
    if (o.unknown && (!cert.first_unknown || *o.unknown < *cert.first_unknown)) {
      cert.first_unknown = o.unknown;
    }
    cert.pairs.push_back(std::move(o.cert));
  }
  if (cert.failure) {
    cert.verdict = Verdict::fails;
    cert.extremal = recognize_F_family(coll);
  } else if (cert.first_unknown) {
    cert.verdict = Verdict::unknown;
  }
  return cert;
}

Verdict is_panconnected_single(const SimpleGraph& g, const CheckOptions& options) {
  if (g.order() < 2) throw PreconditionFailure("panconnectivity needs n >= 2");
  return is_rainbow_panconnected(replicate(g, g.order() - 1), options).verdict;
}

HamConnectivityResult is_rainbow_ham_connected(const GraphCollection& coll,
                                               const CheckOptions& options) {
  const int n = coll.order();
  if (coll.size() < n - 1) {
    throw PreconditionFailure("rainbow Hamiltonian connectivity needs m >= n-1");
  }
  HamConnectivityResult result;
  const auto pairs = ordered_pairs(n);
  std::vector<SearchResult<ColoredPath>> found(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    found[i] = find_rainbow_ham_path(SubCollectionView(coll), pairs[i].first, pairs[i].second,
                                     options.budget);
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (found[i].found()) {
      result.witnesses.push_back(std::move(*found[i].witness));
    } else if (found[i].outcome == Outcome::none) {
      if (!result.failing_pair) result.failing_pair = pairs[i];
    } else if (!result.first_unknown) {
      result.first_unknown = pairs[i];
    }
  }
  if (result.failing_pair) {
    result.verdict = Verdict::fails;
  } else if (result.first_unknown) {
    result.verdict = Verdict::unknown;
  }
  return result;
}

std::optional<ExtremalWitness> recognize_F_family(const GraphCollection& coll) {
  return find_f_partition(coll, nullptr);
}

std::optional<ExtremalWitness> recognize_clique_split(const SubCollectionView& view) {
  const Mask alive = view.vertices();
  if (popcount(alive) < 2 || view.color_count() == 0) return std::nullopt;
  const int c0 = std::countr_zero(view.colors());
  const Vertex first = std::countr_zero(alive);
  // The block of `first` is its closed neighborhood; it must be a clique.
  const Mask block_a = view.neighbors(c0, first) | bit(first);
  const Mask block_b = alive & ~block_a;
  if (block_b == 0) return std::nullopt;
  bool ok = true;
  for_each_bit(view.colors(), [&](int c) {
    for_each_bit(block_a, [&](int v) { ok = ok && (view.neighbors(c, v) | bit(v)) == block_a; });
    for_each_bit(block_b, [&](int v) { ok = ok && (view.neighbors(c, v) | bit(v)) == block_b; });
  });
  if (!ok) return std::nullopt;
  return ExtremalWitness{ExtremalKind::single_graph_split, {bits_of(block_a), bits_of(block_b)},
                         std::nullopt};
}

std::optional<ExtremalWitness> recognize_two_cliques(const SubCollectionView& view) {
  auto w = recognize_clique_split(view);
  if (!w || w->parts[0].size() != w->parts[1].size()) return std::nullopt;
  w->kind = ExtremalKind::two_cliques;
  return w;
}

std::optional<ExtremalWitness> recognize_join_partition(const SubCollectionView& view,
                                                        int independent_size) {
  const Mask alive = view.vertices();
  if (view.color_count() == 0) return std::nullopt;
  const int c0 = std::countr_zero(view.colors());
  for (Vertex v : bits_of(alive)) {
    const Mask h = view.neighbors(c0, v);
    const Mask i = alive & ~h;
    if (popcount(i) != independent_size) continue;
    bool ok = true;
    for_each_bit(view.colors(), [&](int c) {
      for_each_bit(i, [&](int u) { ok = ok && view.neighbors(c, u) == h; });
    });
    if (ok) {
      return ExtremalWitness{ExtremalKind::join_partition, {bits_of(h), bits_of(i)},
                             std::nullopt};
    }
  }
  return std::nullopt;
}

ObstructionReport classify_ham_path_obstruction(const GraphCollection& coll,
                                                const CheckOptions& options) {
  const int n = coll.order();
  if (coll.size() != n) {
    throw PreconditionFailure("classification expects n graphs on n vertices (got m = " +
                              std::to_string(coll.size()) + ", n = " + std::to_string(n) + ")");
  }
  ObstructionReport report;
  report.outside_hypothesis = 2 * collection_min_degree(coll) < n - 2;
  const SubCollectionView view(coll);
  if (n % 2 == 0) {
    if (auto w = recognize_two_cliques(view)) {
      report.tag = ObstructionCase::two_cliques;
      report.witness = std::move(w);
      return report;
    }
    if (auto w = recognize_join_partition(view, (n + 2) / 2)) {
      report.tag = ObstructionCase::join_partition;
      report.witness = std::move(w);
      return report;
    }
  }
  auto r = find_any_rainbow_ham_path(view, options.budget);
  report.search_outcome = r.outcome;
  if (r.found()) {
    report.tag = ObstructionCase::has_ham_path;
    report.ham_path = std::move(r.witness);
  }
  return report;
}

TheoremCheck verify_theorem_1_5(const GraphCollection& coll, const CheckOptions& options) {
  const int n = coll.order();
  if (coll.size() != n - 1) {
    throw PreconditionFailure("expects m = n-1 graphs (got m = " + std::to_string(coll.size()) +
                              ", n = " + std::to_string(n) + ")");
  }
  const int delta = collection_min_degree(coll);
  if (delta < dirac_threshold(n)) {
    throw PreconditionFailure("min degree " + std::to_string(delta) + " below (n+1)/2 = " +
                              std::to_string(dirac_threshold(n)));
  }
  TheoremCheck check;
  check.certificate = is_rainbow_panconnected(coll, options);
  if (check.certificate.verdict == Verdict::holds) {
    check.branch = "panconnected";
    return check;
  }
  check.extremal = find_f_partition(coll, &check.recognition_trace);
  if (check.extremal) {
    check.branch = "F_family";
    check.recognition_trace.clear();
    return check;
  }
  check.verdict = check.certificate.verdict == Verdict::unknown ? Verdict::unknown : Verdict::fails;
  return check;
}

}  // namespace rainbow
