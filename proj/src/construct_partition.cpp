#include <algorithm>

#include "construct_util.hpp"
#include "rainbow/constructions.hpp"

namespace rainbow {

using detail::Candidate;

namespace {

Mask as_mask(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

std::vector<int> ints(const std::vector<Vertex>& vs) { return {vs.begin(), vs.end()}; }

void check_partition(const SubCollectionView& view, const std::vector<Vertex>& p,
                     const std::vector<Vertex>& q, const char* who) {
  const Mask a = as_mask(p);
  const Mask b = as_mask(q);
  if ((a & b) != 0 || (a | b) != view.vertices() || popcount(a) != static_cast<int>(p.size()) ||
      popcount(b) != static_cast<int>(q.size())) {
    throw PreconditionFailure(std::string(who) + ": parts must partition V(H)");
  }
}

// Orders `part` so that it starts in `first` and ends in `last` when
// possible; the rest keeps its sorted order.
std::vector<Vertex> ordered(std::vector<Vertex> part, std::optional<Vertex> first,
                            std::optional<Vertex> last) {
  std::sort(part.begin(), part.end());
  auto move_to = [&](Vertex v, bool front) {
    auto it = std::find(part.begin(), part.end(), v);
    if (it == part.end()) return;
    part.erase(it);
    if (front) {
      part.insert(part.begin(), v);
    } else {
      part.push_back(v);
    }
  };
  if (first) move_to(*first, true);
  if (last && last != first) move_to(*last, false);
  return part;
}

}  // namespace

CliqueResult two_clique_k_path(const GraphCollection& coll, const ProofFrame& frame, Color j,
                               const std::vector<Vertex>& u1, const std::vector<Vertex>& u2,
                               int k) {
  detail::check_setting(coll, frame, "two cliques");
  const int n = coll.order();
  detail::check_k(k, 4, n - 1, "two cliques");
  const auto hj = frame.hj_view(coll, j);
  check_partition(hj, u1, u2, "two cliques");
  const int h = (n - 3) / 2;
  if (static_cast<int>(u1.size()) != h || static_cast<int>(u2.size()) != h) {
    throw PreconditionFailure("two cliques: parts must have (n-3)/2 vertices each");
  }
  const Mask m1 = as_mask(u1);
  const Mask m2 = as_mask(u2);
  for (Color c : bits_of(hj.colors())) {
    for (Vertex v : bits_of(hj.vertices())) {
      const Mask own = (m1 & bit(v)) ? m1 : m2;
      if (hj.neighbors(c, v) != (own & ~bit(v))) {
        throw HypothesisViolation("two cliques", "graph " + std::to_string(c) +
                                                     " is not K_h U K_h on the given parts");
      }
    }
  }

  CliqueResult out;
  out.trace = detail::make_trace("lem7", k);
  out.trace.sets = {{"U1", ints(u1)}, {"U2", ints(u2)}};
  std::optional<Edge> cross;
  for (Vertex a : u1) {
    for (Vertex b : u2) {
      if (!cross && coll[j].adjacent(a, b)) cross = Edge{a, b};
    }
  }
  out.trace.case_name = k - 2 <= h ? "inside" : cross ? "cross_edge" : "via_z";

  std::vector<Candidate> cands;
  const Vertex x = frame.x;
  const Vertex y = frame.y;
  // Both part orders and both directions; every choice of the vertices next
  // to x and y within the first part.
  for (int swap = 0; swap < 2; ++swap) {
    const auto& p = swap ? u2 : u1;
    const auto& q = swap ? u1 : u2;
    std::optional<Edge> e;
    if (cross) e = swap ? Edge{cross->second, cross->first} : *cross;
    for (Vertex first : p) {
      if (k - 2 <= h) {
        for (Vertex last : p) {
          if (last == first && k > 3) continue;
          auto a = ordered(p, first, last);
          if (k - 2 < h) a.erase(a.end() - 1 - (h - (k - 2)), a.end() - 1);
          detail::push_both(cands, "U1-prefix", x, a, y, swap == 1);
        }
        continue;
      }
      if (e) {
        if (first == e->first) continue;
        auto a = ordered(p, first, e->first);
        auto b = ordered(q, e->second, std::nullopt);
        b.resize(k - 2 - h);
        a.insert(a.end(), b.begin(), b.end());
        detail::push_both(cands, "cross", x, a, y, swap == 1);
      }
      auto a = ordered(p, first, std::nullopt);
      auto b = ordered(q, std::nullopt, std::nullopt);
      if (k - 2 == h + 1) {
        // x u_1 .. u_{h-1} z u_{h+1} y
        a.pop_back();
        a.push_back(frame.z);
        a.push_back(b.front());
      } else {
        a.push_back(frame.z);
        a.insert(a.end(), b.begin(), b.begin() + (k - 3 - h));
      }
      detail::push_both(cands, "via-z", x, a, y, swap == 1);
    }
  }
  const auto got = detail::first_realizable(coll, cands);
  if (!got) throw ConstructionGap("lem7." + out.trace.case_name, "no candidate realizes");
  out.path = got->path;
  out.trace.subcase = got->candidate->label;
  if (got->candidate->from_menu) out.trace.notes.push_back("parts_swapped");
  out.trace.path = out.path;
  return out;
}

namespace {

// x w_1 S_0 w_2 ... for odd k, x S_0 w_1 S_1 ... for even k.
std::vector<Vertex> interleave(const std::vector<Vertex>& w, const std::vector<Vertex>& s,
                               int k, bool w_first) {
  std::vector<Vertex> mid;
  const int r = w_first ? (k - 3) / 2 : (k - 2) / 2;
  for (int i = 0; i < r; ++i) {
    if (w_first) {
      mid.push_back(w[i]);
      mid.push_back(s[i]);
    } else {
      mid.push_back(s[i]);
      mid.push_back(w[i]);
    }
  }
  if (w_first) mid.push_back(w[r]);
  return mid;
}

}  // namespace

JoinResult join_partition_k_path(const GraphCollection& coll, const ProofFrame& frame,
                                 const std::vector<Vertex>& f, const std::vector<Vertex>& i_part,
                                 int k) {
  detail::check_setting(coll, frame, "join partition");
  const int n = coll.order();
  detail::check_k(k, 4, n - 1, "join partition");
  const auto h = frame.h_view(coll);
  check_partition(h, f, i_part, "join partition");
  if (static_cast<int>(i_part.size()) != (n - 1) / 2) {
    throw PreconditionFailure("join partition: I must have (n-1)/2 vertices");
  }
  const Mask mf = as_mask(f);
  const Mask mi = as_mask(i_part);
  const Mask outside = bit(frame.x) | bit(frame.y) | bit(frame.z);
  for (Color c : bits_of(h.colors())) {
    for (Vertex v : i_part) {
      if ((coll[c].neighbors(v) & mi) != 0) {
        throw HypothesisViolation("join partition", "I is not independent in graph " +
                                                        std::to_string(c));
      }
      if ((coll[c].neighbors(v) & (mf | outside)) != (mf | outside)) {
        throw HypothesisViolation("join partition",
                                  "vertex " + std::to_string(v) + " of I misses a neighbor in graph " +
                                      std::to_string(c));
      }
    }
  }

  JoinResult out;
  out.trace = detail::make_trace("lem8", k);
  out.trace.sets = {{"F", ints(f)}, {"I", ints(i_part)}};
  std::vector<Vertex> w(i_part.begin(), i_part.end());
  std::sort(w.begin(), w.end());
  std::vector<Vertex> v(f.begin(), f.end());
  std::sort(v.begin(), v.end());
  std::vector<Candidate> cands;
  Vertex start = frame.x;
  Vertex end = frame.y;
  bool flip = false;

  std::optional<Edge> inner;
  for (Vertex a : w) {
    for (Vertex b : w) {
      if (!inner && a < b && coll[frame.missing].adjacent(a, b)) inner = Edge{a, b};
    }
  }
  if (inner) {
    out.trace.case_name = "case1";
    w = ordered(w, std::nullopt, inner->first);
    w.erase(std::find(w.begin(), w.end(), inner->second));
    w.push_back(inner->second);
    std::vector<Vertex> mid;
    if (k % 2 == 1) {
      mid = interleave(w, v, k, true);
    } else {
      const int r = (k - 4) / 2;
      for (int t = 0; t < r; ++t) {
        mid.push_back(w[t]);
        mid.push_back(v[t]);
      }
      mid.push_back(w[w.size() - 2]);
      mid.push_back(w.back());
    }
    cands.push_back({"case1", detail::framed(start, mid, end)});
  } else {
    // An edge of some graph between {x, y} and F ∪ {z}.
    std::optional<std::pair<Vertex, Vertex>> link;
    for (Color c = 0; c < coll.size() && !link; ++c) {
      for (Vertex a : {frame.x, frame.y}) {
        for (Vertex b : v) {
          if (!link && coll[c].adjacent(a, b)) link = std::pair{a, b};
        }
        if (!link && coll[c].adjacent(a, frame.z)) link = std::pair{a, frame.z};
        if (link) {
          out.trace.sets["link_color"] = {c};
          break;
        }
      }
    }
    if (!link) {
      out.trace.case_name = "case2.2";
      out.f_family = true;
      out.witness = recognize_F_family(coll);
      if (!out.witness) {
        throw HypothesisViolation("F family", "no link edge, yet G is not in the F family");
      }
      return out;
    }
    out.trace.case_name = "case2.1";
    if (link->first == frame.y) {
      std::swap(start, end);
      flip = true;
    }
    std::vector<Vertex> s{link->second};
    for (Vertex b : v) {
      if (b != link->second) s.push_back(b);
    }
    if (link->second != frame.z) s.push_back(frame.z);
    cands.push_back({"case2.1", detail::framed(start, interleave(w, s, k, k % 2 == 1), end)});
  }
  const auto got = detail::first_realizable(coll, cands);
  if (!got) throw ConstructionGap("lem8." + out.trace.case_name, "no candidate realizes");
  out.path = flip ? got->path.reversed() : got->path;
  out.trace.subcase = k % 2 == 1 ? "odd" : "even";
  if (flip) out.trace.notes.push_back("endpoints_swapped");
  out.trace.path = out.path;
  return out;
}

}  // namespace rainbow
