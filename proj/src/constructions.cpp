#include "rainbow/constructions.hpp"

#include <algorithm>

#include "construct_util.hpp"

namespace rainbow {

using detail::Candidate;
using detail::wrap;

ShortPaths construct_short_paths(const GraphCollection& coll, Vertex x, Vertex y) {
  const int n = coll.order();
  if (x < 0 || x >= n || y < 0 || y >= n || x == y) {
    throw InvalidInput("short paths: need two distinct vertices in range");
  }
  if (coll.size() < 2) throw PreconditionFailure("short paths: need at least two graphs");
  ShortPaths out;
  for (Color c = 0; c < coll.size(); ++c) {
    if (coll[c].adjacent(x, y)) {
      out.two = ColoredPath{{x, y}, {c}};
      break;
    }
  }
  const Mask common = coll[0].neighbors(x) & coll[1].neighbors(y) & ~bit(x) & ~bit(y);
  if (common == 0) {
    throw HypothesisViolation("common neighbor",
                              "N_{G_0}(x) and N_{G_1}(y) are disjoint outside {x, y}");
  }
  out.middle = std::countr_zero(common);
  out.three = ColoredPath{{x, out.middle, y}, {0, 1}};
  return out;
}

RotationResult rotation_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                               const ColoredCycle& cycle, int k) {
  detail::check_setting(coll, frame, "rotation");
  const int n = coll.order();
  detail::check_k(k, 4, n - 1, "rotation");
  const int len = n - 3;
  const auto hj = frame.hj_view(coll, j);
  if (static_cast<int>(cycle.length()) != len || !verify_colored_cycle(hj, cycle)) {
    throw PreconditionFailure("rotation: not a rainbow Hamiltonian cycle of H_j");
  }
  auto u = [&](int i) { return cycle.vertices[wrap(i, len) - 1]; };
  // Color of the cycle edge u_i u_{i+1}.
  auto edge_color = [&](int i) { return cycle.colors[wrap(i, len) - 1]; };

  RotationResult out;
  for (int i = 1; i <= len; ++i) {
    if (coll[frame.missing].adjacent(frame.x, u(i + k - 3))) out.sets.i_k.push_back(i);
    if (coll[j].adjacent(frame.y, u(i))) out.sets.i_0.push_back(i);
  }
  std::vector<int> both;
  std::set_intersection(out.sets.i_k.begin(), out.sets.i_k.end(), out.sets.i_0.begin(),
                        out.sets.i_0.end(), std::back_inserter(both));
  if (both.empty()) {
    throw HypothesisViolation("I_k meets I_0", "the index sets are disjoint for k = " +
                                                   std::to_string(k));
  }
  const int s = both.front();
  out.sets.s = s;

  ColoredPath p;
  p.vertices.push_back(frame.x);
  p.colors.push_back(frame.missing);
  for (int i = s + k - 3; i > s; --i) {
    p.vertices.push_back(u(i));
    p.colors.push_back(edge_color(i - 1));
  }
  p.vertices.push_back(u(s));
  p.colors.push_back(j);
  p.vertices.push_back(frame.y);
  if (!verify_colored_path(coll, p)) {
    throw ConstructionGap("rotation", verify_colored_path(coll, p).violation);
  }
  out.path = p;
  out.trace = detail::make_trace("lem2", k);
  out.trace.case_name = "rotation";
  out.trace.sets = {{"I_k", out.sets.i_k}, {"I_0", out.sets.i_0}, {"s", {s}}};
  out.trace.path = p;
  return out;
}

namespace {

bool consecutive_pair(const std::vector<int>& set, int len) {
  for (int s : set) {
    if (std::find(set.begin(), set.end(), wrap(s + 1, len)) != set.end()) return true;
  }
  return false;
}

bool contains(const std::vector<int>& set, int v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

}  // namespace

CycleAttachSets cycle_attach_sets(const GraphCollection& coll, const ProofFrame& frame, Color j,
                                  const ColoredCycle& cycle) {
  detail::check_setting(coll, frame, "near-cycle");
  const int n = coll.order();
  const int len = n - 4;
  const auto hj = frame.hj_view(coll, j);
  if (static_cast<int>(cycle.length()) != len || !verify_colored_cycle(hj, cycle)) {
    throw PreconditionFailure("near-cycle: not a rainbow (n-4)-cycle of H_j");
  }
  Mask used = 0;
  Mask on_cycle = 0;
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    used |= bit(cycle.colors[i]);
    on_cycle |= bit(cycle.vertices[i]);
  }
  const Mask spare = detail::hj_colors(coll, frame, j) & ~used;
  const Mask off = hj.vertices() & ~on_cycle;
  CycleAttachSets out;
  out.color_a = std::countr_zero(spare);
  out.color_b = j;
  out.w = std::countr_zero(off);
  auto u = [&](int i) { return cycle.vertices[wrap(i, len) - 1]; };
  for (int s = 1; s <= len; ++s) {
    if (coll[out.color_a].adjacent(out.w, u(s + 1))) out.a.push_back(s);
    if (coll[out.color_b].adjacent(out.w, u(s))) out.b.push_back(s);
  }

  for (int s : out.a) {
    if (!contains(out.b, s)) continue;
    ColoredCycle ham;
    ham.vertices.push_back(out.w);
    ham.colors.push_back(out.color_b);
    for (int t = s; t > s - len + 1; --t) {
      ham.vertices.push_back(u(t));
      ham.colors.push_back(cycle.colors[wrap(t - 1, len) - 1]);
    }
    ham.vertices.push_back(u(s + 1));
    ham.colors.push_back(out.color_a);
    throw HypothesisViolation("A and B disjoint",
                              "common index " + std::to_string(s) + " closes " + to_string(ham),
                              ham);
  }
  const auto half = static_cast<std::size_t>((n - 5) / 2);
  if (out.a.size() != half || out.b.size() != half) {
    throw HypothesisViolation("Claim I", "|A| = " + std::to_string(out.a.size()) +
                                             ", |B| = " + std::to_string(out.b.size()) +
                                             ", expected " + std::to_string(half));
  }
  if (consecutive_pair(out.a, len) || consecutive_pair(out.b, len)) {
    throw HypothesisViolation("Claim II", "A or B holds two consecutive indices");
  }
  for (int s = 1; s <= len; ++s) {
    if (!contains(out.a, s) && !contains(out.b, s)) out.excluded = s;
  }
  if (!contains(out.b, wrap(out.excluded - 1, len)) ||
      !contains(out.a, wrap(out.excluded + 1, len))) {
    throw HypothesisViolation("Claim III", "neighbors of the excluded index " +
                                               std::to_string(out.excluded) + " misplaced");
  }

  // U1 = N_{G_a}(w) on C = N_{G_b}(w) on C; after relabeling it is the odd
  // positions 1, 3, ..., L-2 and u_{L-1} u_L is the only adjacent U2 pair.
  std::vector<int> from_a;
  std::vector<int> from_b;
  for (int s : out.a) from_a.push_back(wrap(s + 1, len));
  std::sort(from_a.begin(), from_a.end());
  from_b = out.b;
  if (from_a != from_b) {
    throw HypothesisViolation("U1 derivation", "G_a and G_b neighborhoods of w differ on C");
  }
  const int p = out.excluded;
  for (int i = 1; i <= len; ++i) out.relabeled.push_back(u(p + 1 + i));
  for (int i = 1; i <= len; ++i) {
    auto& part = (i % 2 == 1 && i <= len - 2) ? out.u1 : out.u2;
    part.push_back(out.relabeled[i - 1]);
  }
  return out;
}

NearCycleResult near_cycle_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                                  const ColoredCycle& cycle, int k,
                                  const ConstructionOptions& options) {
  const int n = coll.order();
  NearCycleResult out;
  out.sets = cycle_attach_sets(coll, frame, j, cycle);
  detail::check_k(k, 4, n - 1, "near-cycle");
  if (options.check_hypotheses) {
    detail::check_no_rainbow_cycle(coll, frame, {n - 3}, options.budget);
  }
  const auto& sets = out.sets;
  const int len = n - 4;
  const Vertex x = frame.x;
  const Vertex y = frame.y;
  const Vertex w = sets.w;
  auto u = [&](int i) { return sets.relabeled[wrap(i, len) - 1]; };
  auto in_u1 = [&](int i) { return i % 2 == 1 && i <= len - 2; };
  std::vector<int> nx;
  for (int i = 1; i <= len; ++i) {
    if (coll[frame.missing].adjacent(x, u(i))) nx.push_back(i);
  }

  out.trace = detail::make_trace("lem3", k);
  out.trace.sets = {{"A", sets.a}, {"B", sets.b}, {"excluded", {sets.excluded}}, {"N_x", nx}};

  std::vector<Candidate> cands;
  if (k == 4) {
    out.trace.case_name = "case1";
    for (int i : nx) {
      if (in_u1(i)) cands.push_back({"x-u1-w", {x, u(i), w, y}});
    }
    for (int i = 1; i <= len; i += 2) {
      if (in_u1(i) && coll[sets.color_a].adjacent(y, u(i))) {
        cands.push_back({"x-succ-u1", {x, u(i + 1), u(i), y}});
      }
    }
    if (coll[sets.color_a].adjacent(y, frame.z)) cands.push_back({"x-w-z", {x, w, frame.z, y}});
    cands.push_back({"x-uL-uL-1", {x, u(len), u(len - 1), y}});
    // Everything else on four vertices, should the dispatch above miss.
    for (int i = 1; i <= len; ++i) {
      cands.push_back({"menu", {x, u(i), w, y}, true});
      cands.push_back({"menu", {x, w, u(i), y}, true});
      for (int d : {1, -1}) cands.push_back({"menu", {x, u(i), u(i + d), y}, true});
    }
  } else {
    auto walk = [&](int start, int dir, const std::string& label, bool menu) {
      const int end = start + dir * (k - 4);
      if (!in_u1(wrap(end, len))) return;
      std::vector<Vertex> seq{x};
      for (int t = 0; t <= k - 4; ++t) seq.push_back(u(start + dir * t));
      seq.push_back(w);
      seq.push_back(y);
      cands.push_back({label, std::move(seq), menu});
    };
    const bool last = contains(nx, len);
    const bool second_last = contains(nx, len - 1);
    if (last || second_last) {
      out.trace.case_name = "case2";
      if (last) {
        walk(len, 1, "x-uL-C", false);
        walk(len, -1, "x-uL-C^-", false);
      }
      if (second_last) {
        walk(len - 1, -1, "x-uL-1-C^-", false);
        walk(len - 1, 1, "x-uL-1-C", false);
        if (!last) out.trace.notes.push_back("omitted_in_source");
      }
    } else {
      out.trace.case_name = "case3";
      const int h = (n - 5) / 2;
      const bool h_in_u1 = in_u1(h);
      const bool h_in_nx = contains(nx, h);
      out.trace.subcase = h_in_u1 ? (h_in_nx ? "3.1" : "3.2") : (h_in_nx ? "3.3" : "3.4");
    }
    // The source fixes one start in N_x per subcase up to symmetry; every
    // start and direction is tried.
    for (int i : nx) {
      for (int d : {1, -1}) walk(i, d, "x-u-C-w", true);
    }
  }

  const auto got = detail::first_realizable(coll, cands);
  if (!got) throw ConstructionGap("lem3." + out.trace.case_name, "no candidate realizes");
  out.path = got->path;
  if (got->candidate->from_menu) out.trace.notes.push_back("wlog_family");
  out.trace.subcase = out.trace.subcase.empty() ? got->candidate->label
                                                : out.trace.subcase + ":" + got->candidate->label;
  out.trace.path = out.path;
  return out;
}

}  // namespace rainbow
