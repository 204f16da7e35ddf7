#include <algorithm>

#include "construct_util.hpp"
#include "rainbow/constructions.hpp"

namespace rainbow {

using detail::Candidate;

namespace {

// Colors of H_j the path does not use (exactly one for a Hamiltonian path).
Mask unused_colors(Mask colors, const ColoredPath& path) {
  for (Color c : path.colors) colors &= ~bit(c);
  return colors;
}

int degree_on(const GraphCollection& coll, Color c, Vertex v, const std::vector<Vertex>& on) {
  int d = 0;
  for (Vertex u : on) d += coll[c].adjacent(v, u) ? 1 : 0;
  return d;
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& sorted) {
  std::vector<std::vector<int>> out;
  for (int v : sorted) {
    if (out.empty() || out.back().back() + 1 != v) out.emplace_back();
    out.back().push_back(v);
  }
  return out;
}

}  // namespace

EndpointBoundReport endpoint_bound_report(const GraphCollection& coll, const ProofFrame& frame,
                                          const ColoredPath& path,
                                          const ConstructionOptions& options) {
  detail::check_setting(coll, frame, "endpoint bound");
  const int n = coll.order();
  const auto h = frame.h_view(coll);
  if (static_cast<int>(path.order()) != n - 3 || !verify_colored_path(h, path)) {
    throw PreconditionFailure("endpoint bound: not a rainbow Hamiltonian path of H");
  }
  if (options.check_hypotheses) {
    detail::check_no_rainbow_cycle(coll, frame, {n - 3}, options.budget);
  }
  const Mask spare = unused_colors(h.colors(), path);
  EndpointBoundReport r;
  r.f1 = std::countr_zero(spare);
  r.f2 = 63 - std::countl_zero(spare);
  const auto& v = path.vertices;
  r.w1 = v.front();
  r.w2 = v.back();
  r.d1 = degree_on(coll, r.f1, r.w1, v);
  r.d2 = degree_on(coll, r.f2, r.w2, v);
  auto at = [&](int i) { return v[i - 1]; };
  for (int i = 1; i <= n - 6; ++i) {
    if (coll[r.f1].adjacent(at(1), at(i + 1))) r.i_f1.push_back(i);
  }
  for (int i = 3; i <= n - 4; ++i) {
    if (coll[r.f2].adjacent(at(i), at(n - 3))) r.i_f2.push_back(i);
  }
  for (int i : r.i_f1) {
    if (std::find(r.i_f2.begin(), r.i_f2.end(), i) == r.i_f2.end()) continue;
    // v_1 P v_i v_{n-3} P^- v_{i+1} v_1
    ColoredCycle c;
    for (int t = 1; t <= i; ++t) {
      c.vertices.push_back(at(t));
      c.colors.push_back(t < i ? path.colors[t - 1] : r.f2);
    }
    for (int t = n - 3; t >= i + 1; --t) {
      c.vertices.push_back(at(t));
      c.colors.push_back(t > i + 1 ? path.colors[t - 2] : r.f1);
    }
    throw HypothesisViolation("I_f1 and I_f2 disjoint", "closes " + to_string(c), c);
  }
  const int lo = (n - 5) / 2;
  const int hi = (n - 3) / 2;
  r.sum_in_range = r.d1 + r.d2 >= n - 5 && r.d1 + r.d2 <= n - 4;
  r.each_in_range = (r.d1 == lo || r.d1 == hi) && (r.d2 == lo || r.d2 == hi);
  return r;
}

PathEndSets path_end_sets(const GraphCollection& coll, const ProofFrame& frame, Color j,
                          const ColoredPath& path) {
  detail::check_setting(coll, frame, "ham path");
  const int n = coll.order();
  const auto hj = frame.hj_view(coll, j);
  if (static_cast<int>(path.order()) != n - 3 || !verify_colored_path(hj, path)) {
    throw PreconditionFailure("ham path: not a rainbow Hamiltonian path of H_j");
  }
  const Mask spare = unused_colors(hj.colors(), path);
  PathEndSets s;
  s.color_a = std::countr_zero(spare);
  s.color_b = j;
  s.path = path.vertices;
  auto fill = [&] {
    s.a1.clear();
    s.b1.clear();
    auto at = [&](int i) { return s.path[i - 1]; };
    for (int i = 2; i <= n - 5; ++i) {
      if (coll[s.color_a].adjacent(at(1), at(i))) s.a1.push_back(i);
    }
    for (int i = 3; i <= n - 4; ++i) {
      if (coll[s.color_b].adjacent(at(i), at(n - 3))) s.b1.push_back(i);
    }
  };
  const auto half = static_cast<std::size_t>((n - 5) / 2);
  fill();
  if (s.a1.size() != half) {
    std::reverse(s.path.begin(), s.path.end());
    std::swap(s.color_a, s.color_b);
    s.reversed = true;
    fill();
  }
  if (s.a1.size() != half) {
    throw HypothesisViolation("endpoint bound", "neither end has " + std::to_string(half) +
                                                    " neighbors in its spare color");
  }
  s.blocks = blocks_of(s.a1);
  s.l = static_cast<int>(s.blocks.size());
  s.s = s.a1.empty() ? 0 : s.a1.front();
  s.t = s.a1.empty() ? 0 : s.a1.back();
  return s;
}

namespace {

struct PathMenu {
  const std::vector<Vertex>& p;
  Vertex x;
  Vertex y;
  Vertex z;
  int k;
  std::vector<Candidate>& out;

  int len() const { return static_cast<int>(p.size()); }
  Vertex u(int i) const { return p[i - 1]; }

  // u_i .. u_j inclusive, in either direction.
  std::vector<Vertex> seg(int i, int j) const {
    std::vector<Vertex> r;
    const int d = i <= j ? 1 : -1;
    for (int t = i;; t += d) {
      r.push_back(u(t));
      if (t == j) break;
    }
    return r;
  }

  static std::vector<Vertex> cat(std::initializer_list<std::vector<Vertex>> parts) {
    std::vector<Vertex> r;
    for (const auto& part : parts) r.insert(r.end(), part.begin(), part.end());
    return r;
  }

  void add(const std::string& label, const std::vector<Vertex>& middle, bool menu = false) {
    if (static_cast<int>(middle.size()) != k - 2) return;
    detail::push_both(out, label, x, middle, y, menu);
  }

  // x u_1 P u_{k-2} y and its mirror.
  void claim5() { add("claim5", seg(1, k - 2)); }

  // Segments of P, optionally capped by u_1 in front and/or u_{n-3} behind.
  void menu() {
    const int L = len();
    const int r = k - 2;
    for (int i = 1; i + r - 1 <= L; ++i) add("menu:seg", seg(i, i + r - 1), true);
    for (int i = 2; i + r - 2 <= L; ++i) add("menu:u1+seg", cat({{u(1)}, seg(i, i + r - 2)}), true);
    for (int i = 1; i + r - 2 <= L - 1; ++i) {
      add("menu:seg+uL", cat({seg(i, i + r - 2), {u(L)}}), true);
    }
    if (r >= 3) {
      for (int i = 2; i + r - 3 <= L - 1; ++i) {
        add("menu:u1+seg+uL", cat({{u(1)}, seg(i, i + r - 3), {u(L)}}), true);
      }
    }
    if (r == 3) {
      for (int i = 1; i <= L; ++i) {
        for (int j = 1; j <= L; ++j) {
          if (i != j) add("menu:u-z-u", {u(i), z, u(j)}, true);
        }
      }
    }
  }
};

}  // namespace

HamPathResult ham_path_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                              const ColoredPath& path, int k,
                              const ConstructionOptions& options) {
  const int n = coll.order();
  HamPathResult out;
  out.sets = path_end_sets(coll, frame, j, path);
  detail::check_k(k, 4, n - 1, "ham path");
  if (options.check_hypotheses) {
    detail::check_no_rainbow_cycle(coll, frame, {n - 3, n - 4}, options.budget);
  }
  const auto& s = out.sets;
  out.trace = detail::make_trace("lem6", k);
  out.trace.sets = {{"A_1", s.a1}, {"B_1", s.b1}, {"s", {s.s}}, {"t", {s.t}}, {"l", {s.l}}};
  if (s.reversed) out.trace.notes.push_back("path_reversed");

  const bool c1 = s.s == 3 && s.l == 1;
  const bool c2 = s.s == 2 && s.l == 2;
  const bool c3 = s.s == 2 && s.l == 1;
  if (!c1 && !c2 && !c3) {
    throw HypothesisViolation("Claim c3", "(s, l) = (" + std::to_string(s.s) + ", " +
                                              std::to_string(s.l) + ")");
  }

  std::vector<Candidate> cands;
  PathMenu m{s.path, frame.x, frame.y, frame.z, k, cands};
  const int L = n - 3;
  const int t = s.t;
  if (c1) {
    out.trace.case_name = "case1";
    if (k == n - 1) {
      m.add("full", m.seg(1, L));
    } else if (k <= (n + 1) / 2) {
      m.claim5();
    } else {
      m.add("u2-P-uL", PathMenu::cat({m.seg(2, k - 2), {m.u(L)}}));
    }
  } else if (c2) {
    out.trace.case_name = "case2";
    const int a1 = s.blocks[0].back();
    const int b1 = s.blocks[1].front();
    out.trace.sets["a_1"] = {a1};
    out.trace.sets["b_1"] = {b1};
    if ((k >= 3 && k <= a1 + 1) || (k >= b1 + 1 && k <= t + 1)) {
      m.claim5();
    } else if ((k >= t + 3 && k <= n - 1) || (k >= a1 + 3 && k <= b1)) {
      m.add("u1-P-uL", PathMenu::cat({m.seg(1, k - 3), {m.u(L)}}));
    } else if ((k == a1 + 2 && a1 < b1 - 2) || k == t + 2) {
      m.add("u2-P-uL", PathMenu::cat({m.seg(2, k - 2), {m.u(L)}}));
    } else if (k == a1 + 2 && a1 == b1 - 2) {
      m.add("tail", m.seg(n - k, L));
    }
  } else {
    out.trace.case_name = "case3";
    const bool big_b = s.b1.size() == static_cast<std::size_t>((n - 3) / 2);
    auto subcase_31 = [&] {
      if (k <= (n - 1) / 2) {
        m.claim5();
      } else if (k <= n - 2) {
        m.add("u1-u3-P-uL", PathMenu::cat({{m.u(1)}, m.seg(3, k - 2), {m.u(L)}}));
      } else {
        m.add("full", m.seg(1, L));
      }
    };
    if (big_b) {
      out.trace.subcase = "3.1";
      subcase_31();
    } else {
      out.trace.subcase = "3.2";
      std::vector<int> gaps;
      for (int i = (n - 3) / 2; i <= n - 4; ++i) {
        if (!coll[s.color_b].adjacent(m.u(i), m.u(L))) gaps.push_back(i);
      }
      if (gaps.size() != 1) {
        throw HypothesisViolation("Claim 3.2", "expected one non-neighbor of u_{n-3}, found " +
                                                   std::to_string(gaps.size()));
      }
      const int q = gaps.front();
      out.trace.sets["q"] = {q};
      const Color last = path.colors.empty() ? 0 : s.reversed ? path.colors.front()
                                                              : path.colors.back();
      if (q != (n - 3) / 2) {
        out.trace.notes.push_back("omitted_in_source");
      } else if (degree_on(coll, last, m.u(L), s.path) == (n - 3) / 2) {
        out.trace.notes.push_back("omitted_in_source");
        subcase_31();
      } else if (k <= (n - 1) / 2) {
        m.claim5();
      } else if (k >= (n + 5) / 2) {
        m.add("u1-P-uL", PathMenu::cat({m.seg(1, k - 3), {m.u(L)}}));
      } else if (k == (n + 1) / 2) {
        if (n > 9) {
          m.add("u1-mid-uL", PathMenu::cat({{m.u(1)}, m.seg((n - 3) / 2, n - 6), {m.u(L)}}));
        } else if (n == 9) {
          m.add("u1-z-u6", {m.u(1), frame.z, m.u(6)});
        } else {
          m.add("u2-u1", {m.u(2), m.u(1)});
        }
      } else {
        if (n > 7) {
          m.add("u1-mid-uL", PathMenu::cat({{m.u(1)}, m.seg((n - 3) / 2, n - 5), {m.u(L)}}));
        } else {
          m.add("u1-z-u4", {m.u(1), frame.z, m.u(4)});
        }
      }
    }
  }
  m.menu();

  const auto got = detail::first_realizable(coll, cands);
  if (!got) throw ConstructionGap("lem6." + out.trace.case_name, "no candidate realizes");
  out.path = got->path;
  if (got->candidate->from_menu) out.trace.notes.push_back("menu");
  out.trace.subcase = out.trace.subcase.empty() ? got->candidate->label
                                                : out.trace.subcase + ":" + got->candidate->label;
  out.trace.path = out.path;
  return out;
}

}  // namespace rainbow
