#pragma once

// Shared pieces of the proof constructions. Positions are 1-based.

#include <optional>
#include <string>
#include <vector>

#include "rainbow/constructions.hpp"

namespace rainbow::detail {

/// Wraps i into [1, len].
inline int wrap(int i, int len) { return ((i - 1) % len + len) % len + 1; }

struct Candidate {
  std::string label;
  std::vector<Vertex> seq;
  bool from_menu = false;
};

struct Realized {
  ColoredPath path;
  const Candidate* candidate = nullptr;
};

/// First candidate whose vertex sequence carries a rainbow coloring.
std::optional<Realized> first_realizable(const GraphCollection& coll,
                                         const std::vector<Candidate>& candidates);

/// x + middle + y.
std::vector<Vertex> framed(Vertex x, const std::vector<Vertex>& middle, Vertex y);

/// Adds the candidate and its x/y mirror (middle reversed).
void push_both(std::vector<Candidate>& out, const std::string& label, Vertex x,
               const std::vector<Vertex>& middle, Vertex y, bool from_menu = false);

/// Checks m = n-1, n odd >= 5, the frame itself and the degree hypothesis.
void check_setting(const GraphCollection& coll, const ProofFrame& frame, const char* lemma);

void check_k(int k, int lo, int hi, const char* lemma);

/// H colors other than `j`, as a mask.
Mask hj_colors(const GraphCollection& coll, const ProofFrame& frame, Color j);

/// Rejects collections whose H contains a rainbow cycle of one of `lengths`.
void check_no_rainbow_cycle(const GraphCollection& coll, const ProofFrame& frame,
                            const std::vector<int>& lengths, const SearchBudget& budget);

BranchTrace make_trace(const char* lemma, int k);

}  // namespace rainbow::detail
