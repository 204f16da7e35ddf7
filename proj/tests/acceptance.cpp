// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/instance_io.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

namespace {

const int kJobs = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

struct Finding {
  bool pass = true;
  std::string detail;
};

Finding fail(std::string why) { return {false, std::move(why)}; }

std::string tallies(const CampaignReport& r) {
  std::string s;
  for (const auto& [n, t] : r.per_n) {
    if (!s.empty()) s += "; ";
    s += "n=" + std::to_string(n) + " " + std::to_string(t.pass) + "/" +
         std::to_string(t.trials) + " pass, " + std::to_string(t.fail) + " fail, " +
         std::to_string(t.inconclusive) + " inconclusive";
    if (t.skipped) s += ", " + std::to_string(t.skipped) + " skipped";
  }
  return s;
}

Finding campaign(const std::string& id, std::vector<int> ns, int trials, std::uint64_t seed) {
  CampaignSpec spec;
  spec.theorem = id;
  spec.ns = std::move(ns);
  spec.trials = trials;
  spec.seed = seed;
  spec.jobs = kJobs;
  const auto r = run_campaign(spec);
  Finding out{r.passed(), tallies(r)};
  if (!r.problems.empty()) {
    out.detail += "; first problem: " + r.problems.front().detail + " (" +
                  r.problems.front().reproducer + ")";
  }
  return out;
}

// 1. Matching-based color assignment against plain backtracking, over every
// simple path of at most six edges in the union graph.
Finding assignment_oracle() {
  constexpr int kCollections = 100;
  std::vector<long> paths(kCollections, 0);
  std::vector<long> colorable(kCollections, 0);
  std::vector<std::string> errors(kCollections);
  parallel_for(kCollections, kJobs, [&](std::size_t idx) {
    std::mt19937_64 rng(derive_seed(1, idx));
    const int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    const int m = 2 + static_cast<int>(rng() % 6);  // 2..7
    const double p = 0.25 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    std::bernoulli_distribution edge(p);
    std::vector<SimpleGraph> graphs;
    for (int c = 0; c < m; ++c) {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (edge(rng)) edges.emplace_back(u, v);
        }
      }
      graphs.push_back(build_graph(n, edges));
    }
    const GraphCollection coll(n, std::move(graphs));
    auto joined = [&](Vertex u, Vertex v) {
      for (Color c = 0; c < m; ++c) {
        if (coll[c].adjacent(u, v)) return true;
      }
      return false;
    };
    std::vector<Vertex> seq;
    std::function<void()> grow = [&] {
      if (seq.size() >= 2) {
        ++paths[idx];
        const auto got = assign_colors(coll, seq);
        const bool want = oracle::colorable(coll, coll.all_colors(), seq);
        if (got.has_value() != want) {
          errors[idx] = "disagreement on a path of " + std::to_string(seq.size()) + " vertices";
        } else if (got) {
          ++colorable[idx];
          if (!oracle::valid_path(coll, seq, *got, seq.front(), seq.back(),
                                  static_cast<int>(seq.size()))) {
            errors[idx] = "returned coloring is not rainbow";
          }
        }
      }
      if (seq.size() == 7 || !errors[idx].empty()) return;
      for (Vertex v = 0; v < n; ++v) {
        if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
        if (!seq.empty() && !joined(seq.back(), v)) continue;
        seq.push_back(v);
        grow();
        seq.pop_back();
      }
    };
    grow();
  });
  long total = 0;
  long yes = 0;
  for (int i = 0; i < kCollections; ++i) {
    total += paths[i];
    yes += colorable[i];
    if (!errors[i].empty()) return fail("collection " + std::to_string(i) + ": " + errors[i]);
  }
  return {true, std::to_string(total) + " paths, " + std::to_string(yes) + " colorable, " +
                    std::to_string(total - yes) + " not; zero disagreements"};
}

// 3. The exceptional family fails at (u, v, 4) for a single-edge component
// {u, v} of Q2, and nowhere below k = 4.
Finding exceptional_family() {
  struct Case {
    int n;
    std::vector<Edge> q2;
  };
  const std::vector<Case> cases{{7, {{0, 1}, {2, 3}}}, {9, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}}};
  std::string detail;
  for (const auto& c : cases) {
    const auto planted = gen_extremal_F(c.n, c.n - 1, c.q2, 11);
    const auto& coll = planted.coll;
    const std::string tag = "n=" + std::to_string(c.n);
    const auto cert = is_rainbow_panconnected(coll);
    if (cert.verdict != Verdict::fails || !cert.failure) return fail(tag + ": not failing");
    const auto [u, v, k] = *cert.failure;
    if (k != 4) return fail(tag + ": failing k = " + std::to_string(k));
    const auto& q2 = planted.planted.parts[1];
    auto in_q2 = [&](Vertex a) { return std::find(q2.begin(), q2.end(), a) != q2.end(); };
    auto q2_degree = [&](Vertex a) {
      return static_cast<int>(std::count_if(
          q2.begin(), q2.end(), [&](Vertex b) { return coll[0].adjacent(a, b); }));
    };
    if (!in_q2(u) || !in_q2(v) || !coll[0].adjacent(u, v) || q2_degree(u) != 1 ||
        q2_degree(v) != 1) {
      return fail(tag + ": failing pair is not a single-edge component of Q2");
    }
    if (oracle::has_rainbow_path(coll, u, v, 4)) return fail(tag + ": oracle finds a 4-path");
    if (oracle::rainbow_distance(coll, u, v) != 1) return fail(tag + ": oracle distance");
    for (Vertex x = 0; x < c.n; ++x) {
      for (Vertex y = x + 1; y < c.n; ++y) {
        const auto d = oracle::rainbow_distance(coll, x, y);
        if (!d) return fail(tag + ": oracle finds an unreachable pair");
        for (int kk = *d + 1; kk <= 3; ++kk) {
          if (!oracle::has_rainbow_path(coll, x, y, kk)) {
            return fail(tag + ": a failure below k = 4 exists");
          }
        }
      }
    }
    const auto w = recognize_F_family(coll);
    if (!w || !reverify(*w, coll)) return fail(tag + ": recognition or re-verification failed");
    auto sorted = [](std::vector<Vertex> p) {
      std::sort(p.begin(), p.end());
      return p;
    };
    if (sorted(w->parts[0]) != sorted(planted.planted.parts[0]) ||
        sorted(w->parts[1]) != sorted(planted.planted.parts[1])) {
      return fail(tag + ": recognized partition differs from the generating one");
    }
    if (!detail.empty()) detail += "; ";
    detail += tag + " fails at (" + std::to_string(u) + ", " + std::to_string(v) + ", 4)";
  }
  return {true, detail + "; oracle confirms, witnesses re-verify"};
}

// 5. Case (ii)/(iii) obstructions: classification plus the campaign's search,
// and brute force on the first instances of each case.
Finding obstructions() {
  auto out = campaign("cor2_3", {4, 6, 8}, 40, 5);
  if (!out.pass) return out;
  for (int n : {4, 6, 8}) {
    for (const std::string which : {"ii", "iii"}) {
      for (std::uint64_t seed = 0; seed < 2; ++seed) {
        const auto planted = gen_cor23_obstruction(n, which, seed);
        for (Vertex x = 0; x < n; ++x) {
          for (Vertex y = x + 1; y < n; ++y) {
            if (oracle::has_rainbow_path(planted.coll, x, y, n)) {
              return fail("oracle finds a rainbow Hamiltonian path in case (" + which + ")");
            }
          }
        }
      }
    }
  }
  out.detail += "; brute force agrees on 12 instances";
  return out;
}

// 6. Single graphs above the degree threshold, with brute force on a sample.
Finding single_graphs() {
  auto out = campaign("t1_1", {4, 5, 6, 7, 8, 9}, 200, 6);
  if (!out.pass) return out;
  for (int n = 4; n <= 9; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto g = gen_random_collection(n, 1, (n + 3) / 2, trial_seed(6, n, t))[0];
      if (!oracle::panconnected(g)) {
        return fail("brute force: n=" + std::to_string(n) + " trial " + std::to_string(t) +
                    " is not panconnected");
      }
    }
  }
  out.detail += "; brute force agrees on 60 graphs";
  return out;
}

// 7. Endpoint degree bounds on engineered instances. Skipped trials fail the
// no-long-cycle hypothesis; the criterion needs some that pass it.
Finding endpoint_bounds() {
  CampaignSpec spec;
  spec.theorem = "lem5-bounds";
  spec.ns = {7, 9};
  spec.trials = 200;
  spec.seed = 7;
  spec.jobs = kJobs;
  const auto r = run_campaign(spec);
  Finding out{r.passed(), tallies(r)};
  for (const auto& [n, t] : r.per_n) {
    if (t.pass == 0) return fail("no instance at n=" + std::to_string(n) + " met the hypothesis");
  }
  if (!r.problems.empty()) out.detail += "; first problem: " + r.problems.front().detail;
  return out;
}

// 8. Replay on the replay campaign's instances, every path checked by the
// oracle verifier and every missing k confirmed absent by brute force.
GraphCollection replay_instance(int n, int trial, std::uint64_t seed) {
  if (trial % 2 == 0) return gen_random_collection(n, n - 1, dirac_threshold(n), seed);
  std::vector<std::string> shapes;
  for (const std::string lemma : {"lem2", "lem3", "lem6", "lem7", "lem8"}) {
    for (const auto& v : lemma_variants(lemma, n)) shapes.push_back(lemma + ":" + v);
  }
  return gen_lemma_shape(shapes[static_cast<std::size_t>(trial / 2) % shapes.size()], n, seed)
      .coll;
}

Finding replay_consistency() {
  constexpr int kTrials = 200;
  constexpr std::uint64_t kSeed = 8;
  struct Job {
    int n;
    int trial;
  };
  std::vector<Job> jobs;
  for (int n : {7, 9}) {
    for (int t = 0; t < kTrials; ++t) jobs.push_back({n, t});
  }
  std::vector<std::string> errors(jobs.size());
  std::vector<long> paths(jobs.size(), 0);
  std::vector<int> r2(jobs.size(), 0);
  parallel_for(jobs.size(), kJobs, [&](std::size_t i) {
    const auto [n, t] = jobs[i];
    const auto coll = replay_instance(n, t, trial_seed(kSeed, n, t));
    const std::string tag = "n=" + std::to_string(n) + " trial " + std::to_string(t);
    if (coll.size() != n - 1 || collection_min_degree(coll) < (n + 1) / 2) {
      errors[i] = tag + ": instance outside the hypothesis";
      return;
    }
    for (Vertex x = 0; x < n && errors[i].empty(); ++x) {
      for (Vertex y = x + 1; y < n && errors[i].empty(); ++y) {
        const auto r = constructive_panconnect(coll, x, y);
        const std::string at = tag + " pair (" + std::to_string(x) + ", " + std::to_string(y) + ")";
        if (!r.discrepancies.empty()) {
          errors[i] = at + ": " + r.discrepancies.front().branch + ": " +
                      r.discrepancies.front().detail;
          break;
        }
        if (r.verdict == ReplayVerdict::r2) {
          r2[i] = 1;
          if (!recognize_F_family(coll)) {
            errors[i] = at + ": R2 verdict on a collection outside the F family";
            break;
          }
        }
        for (int k = 2; k <= n; ++k) {
          const auto it = r.paths.find(k);
          if (it == r.paths.end()) {
            if (oracle::has_rainbow_path(coll, x, y, k)) {
              errors[i] = at + ": k=" + std::to_string(k) + " missing but brute force finds one";
            }
            continue;
          }
          ++paths[i];
          if (!oracle::valid_path(coll, it->second.vertices, it->second.colors, x, y, k)) {
            errors[i] = at + ": k=" + std::to_string(k) + " path fails verification";
          }
        }
      }
    }
  });
  long total = 0;
  int extremal = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i].empty()) return fail(errors[i]);
    total += paths[i];
    extremal += r2[i];
  }
  return {true, std::to_string(jobs.size()) + " instances, " + std::to_string(total) +
                    " paths verified, " + std::to_string(extremal) +
                    " instances with an R2 pair, zero discrepancies"};
}

// 9. Two runs with the same seeds produce the same bytes, whatever --jobs is.
Finding determinism() {
  auto run = [](int jobs) {
    std::string bytes;
    GenSpec spec;
    spec.n = 9;
    spec.m = 8;
    spec.min_degree = dirac_threshold(9);
    spec.seed = 99;
    bytes += format_instance(generate(spec));
    spec.family = Family::f_family;
    bytes += format_instance(generate(spec));
    spec.family = Family::lemma_shape;
    spec.lemma = "lem6:c1";
    bytes += format_instance(generate(spec));
    spec.family = Family::random;
    const auto coll = generate(spec);
    CheckOptions opts;
    opts.jobs = jobs;
    bytes += to_json(is_rainbow_panconnected(coll, opts)).dump();
    bytes += to_json(constructive_panconnect(coll, 0, 1), true).dump();
    CampaignSpec cs;
    cs.theorem = "t1_5";
    cs.ns = {5, 7};
    cs.trials = 30;
    cs.seed = 9;
    cs.jobs = jobs;
    bytes += to_json(run_campaign(cs), false).dump();
    cs.theorem = "replay";
    cs.ns = {7};
    cs.trials = 6;
    bytes += to_json(run_campaign(cs), false).dump();
    return bytes;
  };
  const auto first = run(1);
  const auto second = run(kJobs);
  const auto third = run(kJobs);
  if (first != second || second != third) return fail("outputs differ between runs");
  return {true, std::to_string(first.size()) + " bytes identical across three runs"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Finding()> run;
  };
  const std::vector<Criterion> criteria{
      {"assignment oracle", assignment_oracle},
      {"t1_5 campaign", [] { return campaign("t1_5", {5, 7, 9}, 500, 2); }},
      {"exceptional family", exceptional_family},
      {"t2_1 campaign", [] { return campaign("t2_1", {5, 7, 9}, 300, 4); }},
      {"obstructions", obstructions},
      {"single graphs", single_graphs},
      {"endpoint bounds", endpoint_bounds},
      {"replay consistency", replay_consistency},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Finding o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                secs, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
