#include "construct_util.hpp"

#include <algorithm>

namespace rainbow::detail {

std::optional<Realized> first_realizable(const GraphCollection& coll,
                                         const std::vector<Candidate>& candidates) {
  for (const auto& c : candidates) {
    if (auto p = realize_path(coll, c.seq)) return Realized{std::move(*p), &c};
  }
  return std::nullopt;
}

std::vector<Vertex> framed(Vertex x, const std::vector<Vertex>& middle, Vertex y) {
  std::vector<Vertex> seq;
  seq.reserve(middle.size() + 2);
  seq.push_back(x);
  seq.insert(seq.end(), middle.begin(), middle.end());
  seq.push_back(y);
  return seq;
}

void push_both(std::vector<Candidate>& out, const std::string& label, Vertex x,
               const std::vector<Vertex>& middle, Vertex y, bool from_menu) {
  out.push_back({label, framed(x, middle, y), from_menu});
  std::vector<Vertex> back(middle.rbegin(), middle.rend());
  out.push_back({label + "/mirror", framed(x, back, y), from_menu});
}

void check_setting(const GraphCollection& coll, const ProofFrame& frame, const char* lemma) {
  const int n = coll.order();
  const std::string who = lemma;
  if (n < 5 || n % 2 == 0) {
    throw PreconditionFailure(who + ": needs odd n >= 5, got n = " + std::to_string(n));
  }
  if (coll.size() != n - 1) {
    throw PreconditionFailure(who + ": needs m = n - 1 graphs, got " +
                              std::to_string(coll.size()));
  }
  for (Vertex v : {frame.x, frame.y, frame.z}) {
    if (v < 0 || v >= n) throw InvalidInput(who + ": frame vertex out of range");
  }
  if (frame.x == frame.y || frame.x == frame.z || frame.y == frame.z) {
    throw InvalidInput(who + ": x, y, z must be distinct");
  }
  if (frame.missing < 0 || frame.missing >= coll.size()) {
    throw InvalidInput(who + ": missing color out of range");
  }
  if (coll[frame.missing].adjacent(frame.x, frame.z)) {
    throw PreconditionFailure(who + ": xz lies in the graph of the missing color");
  }
  const int need = (n + 1) / 2;
  for (Color c = 0; c < coll.size(); ++c) {
    if (min_degree(coll[c]) < need) {
      throw HypothesisViolation("min degree", "graph " + std::to_string(c) +
                                                  " has a vertex of degree below " +
                                                  std::to_string(need));
    }
  }
}

void check_k(int k, int lo, int hi, const char* lemma) {
  if (k < lo || k > hi) {
    throw InvalidInput(std::string(lemma) + ": k = " + std::to_string(k) + " outside [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Mask hj_colors(const GraphCollection& coll, const ProofFrame& frame, Color j) {
  return coll.all_colors() & ~bit(frame.missing) & ~bit(j);
}

void check_no_rainbow_cycle(const GraphCollection& coll, const ProofFrame& frame,
                            const std::vector<int>& lengths, const SearchBudget& budget) {
  const auto h = frame.h_view(coll);
  for (int len : lengths) {
    const auto r = find_rainbow_cycle(h, len, budget);
    if (r.found()) {
      throw HypothesisViolation("no rainbow " + std::to_string(len) + "-cycle in H",
                                "found " + to_string(*r.witness), r.witness);
    }
    if (r.outcome == Outcome::exhausted) {
      throw Error("search budget exhausted while checking for rainbow " +
                  std::to_string(len) + "-cycles in H");
    }
  }
}

BranchTrace make_trace(const char* lemma, int k) {
  BranchTrace t;
  t.lemma = lemma;
  t.k = k;
  return t;
}

}  // namespace rainbow::detail
