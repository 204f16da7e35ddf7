#pragma once

// Explicit path constructions replaying the proof that a collection of n-1
// graphs with minimum degree >= (n+1)/2 is rainbow panconnected unless it is
// the extremal family.
//
// Index conventions: cycles and paths handed to these functions are stored
// 0-based, but every index set they report (I_k, A, B, A_1, ...) uses the
// 1-based positions u_1, u_2, ... of the argument. Colors are always the
// collection's own 0-based graph indices. "a" and "b" name the two colors of
// H that the given cycle or path does not use, with b = j.
//
// Each construction chooses a vertex sequence by the lemma's case analysis
// and then assigns colors by bipartite matching, so any coloring the lemma
// names is found whenever one exists.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/frame.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

/// The input does not satisfy a lemma's hypothesis, or one of the claims
/// derived from it fails. claim() names the failed statement.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::string claim, const std::string& detail,
                      std::optional<ColoredCycle> cycle = std::nullopt)
      : Error(claim + ": " + detail), claim_(std::move(claim)), cycle_(std::move(cycle)) {}

  const std::string& claim() const { return claim_; }
  /// A rainbow cycle whose existence contradicts the hypotheses, if any.
  const std::optional<ColoredCycle>& witness_cycle() const { return cycle_; }

 private:
  std::string claim_;
  std::optional<ColoredCycle> cycle_;
};

/// Hypotheses held but the case analysis produced no valid path.
class ConstructionGap : public Error {
 public:
  ConstructionGap(std::string branch, const std::string& detail)
      : Error(branch + ": " + detail), branch_(std::move(branch)) {}
  const std::string& branch() const { return branch_; }

 private:
  std::string branch_;
};

struct BranchTrace {
  std::string lemma;
  std::string case_name;
  std::string subcase;
  std::map<std::string, std::vector<int>> sets;
  int k = 0;
  std::optional<ColoredPath> path;
  /// Flags such as "omitted_in_source" or "wlog_family" for branches the
  /// source argument leaves implicit.
  std::vector<std::string> notes;
};

struct ConstructionOptions {
  /// Re-check cycle-freeness hypotheses by search before constructing.
  bool check_hypotheses = true;
  SearchBudget budget;
};

struct ShortPaths {
  std::optional<ColoredPath> two;
  ColoredPath three;
  Vertex middle = 0;
};

/// 2-path when xy lies in some graph; 3-path x w y with w the smallest
/// vertex of N_{G_0}(x) ∩ N_{G_1}(y). Needs m >= 2.
ShortPaths construct_short_paths(const GraphCollection& coll, Vertex x, Vertex y);

struct RotationSets {
  std::vector<int> i_k;
  std::vector<int> i_0;
  int s = 0;
};

struct RotationResult {
  ColoredPath path;
  RotationSets sets;
  BranchTrace trace;
};

/// k-path x u_{s+k-3} C^- u_s y from a rainbow Hamiltonian cycle C of H_j.
RotationResult rotation_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                               const ColoredCycle& cycle, int k);

struct CycleAttachSets {
  std::vector<int> a;  // s with w u_{s+1} in G_a
  std::vector<int> b;  // s with w u_s in G_b
  int excluded = 0;    // the index outside A ∪ B
  Vertex w = 0;
  Color color_a = 0;
  Color color_b = 0;
  std::vector<Vertex> u1;  // N(w) on the cycle, in relabeled cycle order
  std::vector<Vertex> u2;
  std::vector<Vertex> relabeled;  // cycle with u_{L-1}, u_L the adjacent U2 pair
};

struct NearCycleResult {
  ColoredPath path;
  CycleAttachSets sets;
  BranchTrace trace;
};

/// Computes and checks A, B (Claims I-III) for a rainbow (n-4)-cycle of H_j.
CycleAttachSets cycle_attach_sets(const GraphCollection& coll, const ProofFrame& frame, Color j,
                                  const ColoredCycle& cycle);

NearCycleResult near_cycle_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                                  const ColoredCycle& cycle, int k,
                                  const ConstructionOptions& options = {});

struct EndpointBoundReport {
  Color f1 = 0;
  Color f2 = 0;
  Vertex w1 = 0;
  Vertex w2 = 0;
  int d1 = 0;
  int d2 = 0;
  std::vector<int> i_f1;
  std::vector<int> i_f2;
  bool sum_in_range = false;   // n-5 <= d1 + d2 <= n-4
  bool each_in_range = false;  // d1, d2 in {(n-5)/2, (n-3)/2}
};

/// Endpoint degree report for a rainbow Hamiltonian path of H.
EndpointBoundReport endpoint_bound_report(const GraphCollection& coll, const ProofFrame& frame,
                                          const ColoredPath& path,
                                          const ConstructionOptions& options = {});

struct PathEndSets {
  std::vector<int> a1;
  std::vector<int> b1;
  std::vector<std::vector<int>> blocks;  // D_1 .. D_l
  int s = 0;
  int t = 0;
  int l = 0;
  bool reversed = false;  // the path was reversed to make |A_1| = (n-5)/2
  Color color_a = 0;
  Color color_b = 0;
  std::vector<Vertex> path;  // normalized u_1 .. u_{n-3}
};

struct HamPathResult {
  ColoredPath path;
  PathEndSets sets;
  BranchTrace trace;
};

PathEndSets path_end_sets(const GraphCollection& coll, const ProofFrame& frame, Color j,
                          const ColoredPath& path);

HamPathResult ham_path_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                              const ColoredPath& path, int k,
                              const ConstructionOptions& options = {});

struct CliqueResult {
  ColoredPath path;
  BranchTrace trace;
};

CliqueResult two_clique_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                               const std::vector<Vertex>& u1, const std::vector<Vertex>& u2,
                               int k);

struct JoinResult {
  std::optional<ColoredPath> path;  // empty when the extremal verdict applies
  bool f_family = false;
  std::optional<ExtremalWitness> witness;
  BranchTrace trace;
};

JoinResult join_partition_k_path(const GraphCollection& coll, const ProofFrame& frame,
                                 const std::vector<Vertex>& f, const std::vector<Vertex>& i,
                                 int k);

struct Discrepancy {
  int k = 0;
  std::string branch;
  std::string detail;
  bool search_found = false;  // brute force found a path the construction missed
};

enum class ReplayVerdict { r1, r2, delegated };

const char* to_string(ReplayVerdict v);

struct ReplayResult {
  Vertex x = 0;
  Vertex y = 0;
  ReplayVerdict verdict = ReplayVerdict::r1;
  std::optional<ProofFrame> frame;
  std::map<int, ColoredPath> paths;
  std::vector<BranchTrace> traces;
  std::vector<Discrepancy> discrepancies;
  std::optional<ExtremalWitness> extremal;
};

/// Replays the proof for the pair (x, y). Requires m = n-1 and every graph
/// with min degree >= (n+1)/2; even n is delegated to search.
ReplayResult constructive_panconnect(const GraphCollection& coll, Vertex x, Vertex y,
                                     const ConstructionOptions& options = {});

}  // namespace rainbow
