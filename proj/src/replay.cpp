#include <algorithm>

#include "construct_util.hpp"
#include "rainbow/constructions.hpp"

namespace rainbow {

const char* to_string(ReplayVerdict v) {
  switch (v) {
    case ReplayVerdict::r1:
      return "R1";
    case ReplayVerdict::r2:
      return "R2";
    case ReplayVerdict::delegated:
      return "delegated";
  }
  return "?";
}

namespace {

class Replayer {
 public:
  Replayer(const GraphCollection& coll, Vertex x, Vertex y, const ConstructionOptions& options)
      : coll_(coll), n_(coll.order()), x_(x), y_(y), options_(options) {
    out_.x = x;
    out_.y = y;
  }

  ReplayResult run();

 private:
  void record(int k, BranchTrace trace, const ColoredPath& p);
  // Falls back to search; any fallback after a failed branch is a discrepancy.
  void fallback(int k, const std::string& branch, const std::string& detail, bool discrepancy);
  void fill_by_search(int lo, int hi, const std::string& why);

  void edge_and_short();
  void five_vertices();
  bool shortcut_from_ham_path();
  ProofFrame choose_frame() const;
  void dispatch(const ProofFrame& frame);

  template <class F>
  void each_k(const std::string& branch, F&& build) {
    for (int k = 4; k <= n_ - 1; ++k) {
      try {
        build(k);
      } catch (const HypothesisViolation& e) {
        fallback(k, branch, e.what(), true);
      } catch (const ConstructionGap& e) {
        fallback(k, branch, e.what(), true);
      }
    }
  }

  const GraphCollection& coll_;
  const int n_;
  const Vertex x_;
  const Vertex y_;
  const ConstructionOptions& options_;
  ReplayResult out_;
};

void Replayer::record(int k, BranchTrace trace, const ColoredPath& p) {
  const bool ends = p.vertices.front() == x_ && p.vertices.back() == y_;
  if (!ends || static_cast<int>(p.order()) != k || !verify_colored_path(coll_, p)) {
    fallback(k, trace.lemma, "construction returned an invalid path", true);
    return;
  }
  trace.k = k;
  trace.path = p;
  out_.paths[k] = p;
  out_.traces.push_back(std::move(trace));
}

void Replayer::fallback(int k, const std::string& branch, const std::string& detail,
                        bool discrepancy) {
  const auto r = find_rainbow_path(coll_, x_, y_, k, 0, options_.budget);
  if (r.found()) {
    out_.paths[k] = *r.witness;
    BranchTrace t = detail::make_trace("search", k);
    t.path = r.witness;
    t.notes.push_back("after " + branch);
    out_.traces.push_back(std::move(t));
  }
  if (discrepancy) {
    std::string what = detail;
    if (r.outcome == Outcome::exhausted) what += " (search exhausted)";
    out_.discrepancies.push_back({k, branch, what, r.found()});
  }
}

void Replayer::fill_by_search(int lo, int hi, const std::string& why) {
  for (int k = lo; k <= hi; ++k) {
    if (!out_.paths.count(k)) fallback(k, why, "", false);
  }
}

void Replayer::edge_and_short() {
  try {
    const auto sp = construct_short_paths(coll_, x_, y_);
    if (sp.two) record(2, detail::make_trace("short", 2), *sp.two);
    record(3, detail::make_trace("short", 3), sp.three);
  } catch (const HypothesisViolation& e) {
    fallback(3, "short", e.what(), true);
  }
  const auto ham = find_rainbow_ham_path(coll_, x_, y_, options_.budget);
  if (ham.found()) {
    auto t = detail::make_trace("ham", n_);
    record(n_, t, *ham.witness);
  } else {
    out_.discrepancies.push_back(
        {n_, "ham", "no rainbow Hamiltonian path", false});
  }
}

void Replayer::five_vertices() {
  std::vector<Vertex> u;
  for (Vertex v = 0; v < n_; ++v) {
    if (v != x_ && v != y_) u.push_back(v);
  }
  // An edge inside U, entered from x at one end.
  std::vector<detail::Candidate> cands;
  for (Vertex a : u) {
    for (Vertex b : u) {
      if (a == b) continue;
      bool inside = false;
      for (Color c = 0; c < coll_.size(); ++c) inside = inside || coll_[c].adjacent(a, b);
      if (inside) cands.push_back({"x-a-b-y", {x_, a, b, y_}});
    }
  }
  auto t = detail::make_trace("lem1", 4);
  const auto got = detail::first_realizable(coll_, cands);
  if (!got) {
    fallback(4, "lem1", "no 4-path through an edge of U", true);
    return;
  }
  t.case_name = got->candidate->label;
  record(4, t, got->path);
}

bool Replayer::shortcut_from_ham_path() {
  for (Vertex v = 0; v < n_; ++v) {
    if (v == x_ || v == y_) continue;
    for (Color c = 0; c < coll_.size(); ++c) {
      if (!coll_[c].adjacent(x_, v)) return false;
    }
  }
  if (!out_.paths.count(n_)) return false;
  const auto& ham = out_.paths.at(n_).vertices;
  each_k("shortcut", [&](int k) {
    std::vector<Vertex> seq{x_};
    seq.insert(seq.end(), ham.end() - (k - 1), ham.end());
    auto p = realize_path(coll_, seq);
    if (!p) throw ConstructionGap("shortcut", "no coloring");
    auto t = detail::make_trace("shortcut", k);
    t.case_name = "x_universal";
    record(k, t, *p);
  });
  return true;
}

ProofFrame Replayer::choose_frame() const {
  for (Color c = coll_.size() - 1; c >= 0; --c) {
    for (Vertex u = 0; u < n_; ++u) {
      if (u != x_ && u != y_ && !coll_[c].adjacent(x_, u)) return {x_, y_, u, c};
    }
  }
  throw Error("replay: x is adjacent to everything in every graph");
}

void Replayer::dispatch(const ProofFrame& frame) {
  ConstructionOptions quiet = options_;
  quiet.check_hypotheses = false;
  const Mask h_colors = coll_.all_colors() & ~bit(frame.missing);
  const auto colors = bits_of(h_colors);

  for (Color j : colors) {
    const auto r = find_rainbow_cycle(frame.hj_view(coll_, j), n_ - 3, options_.budget);
    if (!r.found()) continue;
    each_k("lem2", [&](int k) {
      const auto res = rotation_k_path(coll_, frame, j, *r.witness, k);
      record(k, res.trace, res.path);
    });
    return;
  }
  for (Color j : colors) {
    const auto r = find_rainbow_cycle(frame.hj_view(coll_, j), n_ - 4, options_.budget);
    if (!r.found()) continue;
    each_k("lem3", [&](int k) {
      const auto res = near_cycle_k_path(coll_, frame, j, *r.witness, k, quiet);
      record(k, res.trace, res.path);
    });
    return;
  }
  for (Color j : colors) {
    const auto hj = frame.hj_view(coll_, j);
    const auto r = find_any_rainbow_ham_path(hj, options_.budget);
    if (r.found()) {
      each_k("lem6", [&](int k) {
        const auto res = ham_path_k_path(coll_, frame, j, *r.witness, k, quiet);
        record(k, res.trace, res.path);
      });
      return;
    }
    if (const auto w = recognize_two_cliques(hj)) {
      each_k("lem7", [&](int k) {
        const auto res = two_clique_k_path(coll_, frame, j, w->parts[0], w->parts[1], k);
        record(k, res.trace, res.path);
      });
      return;
    }
  }
  const auto w = recognize_join_partition(frame.h_view(coll_), (n_ - 1) / 2);
  if (!w) {
    for (int k = 4; k <= n_ - 1; ++k) fallback(k, "trichotomy", "no case applies", true);
    return;
  }
  bool extremal = false;
  each_k("lem8", [&](int k) {
    if (extremal) return;
    auto res = join_partition_k_path(coll_, frame, w->parts[0], w->parts[1], k);
    if (res.f_family) {
      extremal = true;
      out_.verdict = ReplayVerdict::r2;
      out_.extremal = res.witness;
      out_.traces.push_back(res.trace);
      return;
    }
    record(k, res.trace, *res.path);
  });
  if (extremal) fill_by_search(4, n_ - 1, "extremal");
}

ReplayResult Replayer::run() {
  if (n_ % 2 == 0) {
    out_.verdict = ReplayVerdict::delegated;
    fill_by_search(2, n_, "delegated");
    return out_;
  }
  edge_and_short();
  if (n_ == 5) {
    five_vertices();
  } else if (!shortcut_from_ham_path()) {
    const auto frame = choose_frame();
    out_.frame = frame;
    dispatch(frame);
  }
  return out_;
}

}  // namespace

ReplayResult constructive_panconnect(const GraphCollection& coll, Vertex x, Vertex y,
                                     const ConstructionOptions& options) {
  const int n = coll.order();
  if (x < 0 || x >= n || y < 0 || y >= n || x == y) {
    throw InvalidInput("replay: need two distinct vertices in range");
  }
  if (n < 5) throw PreconditionFailure("replay: needs n >= 5");
  if (coll.size() != n - 1) {
    throw PreconditionFailure("replay: needs m = n - 1 graphs, got " +
                              std::to_string(coll.size()));
  }
  if (collection_min_degree(coll) < (n + 1) / 2) {
    throw PreconditionFailure("replay: min degree below (n+1)/2");
  }
  return Replayer(coll, x, y, options).run();
}

}  // namespace rainbow
