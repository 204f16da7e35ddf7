#include "rainbow/campaign.hpp"

#include <chrono>
#include <sstream>

#include "rainbow/constructions.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids{"t1_1", "t1_5",   "t2_1",  "lem1",
                                            "lem5-bounds", "cor2_3", "replay"};
  return ids;
}

const char* to_string(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::pass:
      return "pass";
    case TrialOutcome::fail:
      return "fail";
    case TrialOutcome::inconclusive:
      return "inconclusive";
    case TrialOutcome::skipped:
      return "skipped";
  }
  return "?";
}

std::uint64_t trial_seed(std::uint64_t seed, int n, int trial) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)),
                     static_cast<std::uint64_t>(trial));
}

bool CampaignReport::passed() const {
  for (const auto& [n, t] : per_n) {
    if (t.fail != 0 || t.inconclusive != 0) return false;
  }
  return true;
}

bool CampaignReport::any_fail() const {
  for (const auto& [n, t] : per_n) {
    if (t.fail != 0) return true;
  }
  return false;
}

namespace {

struct Result {
  TrialOutcome outcome = TrialOutcome::pass;
  std::string detail;
};

Result from_verdict(Verdict v, const std::string& what) {
  switch (v) {
    case Verdict::holds:
      return {};
    case Verdict::fails:
      return {TrialOutcome::fail, what};
    case Verdict::unknown:
      return {TrialOutcome::inconclusive, "search budget exhausted"};
  }
  return {};
}

std::string triple(const std::optional<FailingTriple>& t) {
  if (!t) return "?";
  std::ostringstream os;
  os << "(" << t->x << ", " << t->y << ", " << t->k << ")";
  return os.str();
}

Result t1_1(int n, std::uint64_t seed, const CheckOptions& opts) {
  const auto g = gen_random_collection(n, 1, (n + 3) / 2, seed)[0];
  return from_verdict(is_panconnected_single(g, opts), "graph is not panconnected");
}

Result t1_5(int n, int trial, std::uint64_t seed, const CheckOptions& opts) {
  const bool extremal = n % 2 == 1 && n >= 7 && trial % 25 == 0;
  const auto coll = extremal ? gen_extremal_F(n, n - 1, {}, seed).coll
                             : gen_random_collection(n, n - 1, dirac_threshold(n), seed);
  const auto check = verify_theorem_1_5(coll, opts);
  if (extremal && check.verdict == Verdict::holds && check.branch != "F_family") {
    return {TrialOutcome::fail, "planted extremal instance judged panconnected"};
  }
  return from_verdict(check.verdict, "neither panconnected nor extremal; failing triple " +
                                         triple(check.certificate.failure));
}

Result t2_1(int n, std::uint64_t seed, const CheckOptions& opts) {
  const auto coll = gen_random_collection(n, n - 1, dirac_threshold(n), seed);
  const auto r = is_rainbow_ham_connected(coll, opts);
  std::string what = "no rainbow Hamiltonian path";
  if (r.failing_pair) {
    what += " for pair (" + std::to_string(r.failing_pair->first) + ", " +
            std::to_string(r.failing_pair->second) + ")";
  }
  return from_verdict(r.verdict, what);
}

Result lem1(std::uint64_t seed, const CheckOptions& opts) {
  const auto coll = gen_random_collection(5, 4, 3, seed);
  const auto cert = is_rainbow_panconnected(coll, opts);
  return from_verdict(cert.verdict, "failing triple " + triple(cert.failure));
}

Result lem5_bounds(int n, int trial, std::uint64_t seed, const SearchBudget& budget) {
  const auto variants = lemma_variants("lem6", n);
  const auto& variant = variants[static_cast<std::size_t>(trial) % variants.size()];
  const auto inst = gen_lemma_shape("lem6:" + variant, n, seed);
  ConstructionOptions opts;
  opts.budget = budget;
  EndpointBoundReport r;
  try {
    r = endpoint_bound_report(inst.coll, inst.frame, *inst.path, opts);
  } catch (const HypothesisViolation& e) {
    return {TrialOutcome::skipped, e.what()};
  }
  if (r.sum_in_range && r.each_in_range) return {};
  return {TrialOutcome::fail, "variant " + variant + ": d1 = " + std::to_string(r.d1) +
                                  ", d2 = " + std::to_string(r.d2)};
}

Result cor2_3(int n, int trial, std::uint64_t seed, const CheckOptions& opts) {
  const std::string which = trial % 2 == 0 ? "ii" : "iii";
  const auto planted = gen_cor23_obstruction(n, which, seed);
  const auto report = classify_ham_path_obstruction(planted.coll, opts);
  const auto want = which == "ii" ? ObstructionCase::two_cliques : ObstructionCase::join_partition;
  if (report.tag != want) {
    return {TrialOutcome::fail, "case (" + which + ") classified as " + to_string(report.tag)};
  }
  if (!report.witness || !reverify(*report.witness, planted.coll)) {
    return {TrialOutcome::fail, "case (" + which + ") witness does not re-verify"};
  }
  const auto search = find_any_rainbow_ham_path(planted.coll, opts.budget);
  if (search.outcome == Outcome::exhausted) {
    return {TrialOutcome::inconclusive, "search budget exhausted"};
  }
  if (search.found()) {
    return {TrialOutcome::fail, "case (" + which + ") has a rainbow Hamiltonian path"};
  }
  return {};
}

GraphCollection replay_instance(int n, int trial, std::uint64_t seed) {
  if (trial % 2 == 0 || (n != 7 && n != 9)) {
    return gen_random_collection(n, n - 1, dirac_threshold(n), seed);
  }
  std::vector<std::string> shapes;
  for (const std::string lemma : {"lem2", "lem3", "lem6", "lem7", "lem8"}) {
    for (const auto& v : lemma_variants(lemma, n)) shapes.push_back(lemma + ":" + v);
  }
  return gen_lemma_shape(shapes[static_cast<std::size_t>(trial / 2) % shapes.size()], n, seed)
      .coll;
}

Result replay(int n, int trial, std::uint64_t seed, const SearchBudget& budget) {
  const auto coll = replay_instance(n, trial, seed);
  ConstructionOptions opts;
  opts.budget = budget;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const auto r = constructive_panconnect(coll, x, y, opts);
      const std::string pair = "pair (" + std::to_string(x) + ", " + std::to_string(y) + ")";
      if (!r.discrepancies.empty()) {
        const auto& d = r.discrepancies.front();
        return {TrialOutcome::fail, pair + " k = " + std::to_string(d.k) + ": " + d.branch +
                                        ": " + d.detail};
      }
      for (const auto& [k, p] : r.paths) {
        const bool ok = static_cast<int>(p.order()) == k && p.vertices.front() == x &&
                        p.vertices.back() == y && verify_colored_path(coll, p);
        if (!ok) return {TrialOutcome::fail, pair + " k = " + std::to_string(k) + ": bad path"};
      }
    }
  }
  return {};
}

void check_orders(const CampaignSpec& spec) {
  const auto& id = spec.theorem;
  if (std::find(campaign_ids().begin(), campaign_ids().end(), id) == campaign_ids().end()) {
    throw InvalidInput("unknown theorem id '" + id + "'");
  }
  if (spec.ns.empty()) throw InvalidInput("no orders given");
  if (spec.trials < 0 || spec.first_trial < 0) throw InvalidInput("trial counts must be >= 0");
  for (int n : spec.ns) {
    std::string bad;
    if (n < 3 || n > kMaxVertices) bad = "n must lie in [3, 64]";
    if (id == "t1_1" && n < 4) bad = "t1_1 needs n >= 4";
    if (id == "lem1" && n != 5) bad = "lem1 is about n = 5";
    if (id == "lem5-bounds" && n != 7 && n != 9) bad = "lem5-bounds instances exist for n in {7, 9}";
    if (id == "cor2_3" && (n % 2 != 0 || n < 4)) bad = "cor2_3 needs even n >= 4";
    if (id == "replay" && (n % 2 == 0 || n < 5)) bad = "replay needs odd n >= 5";
    if (!bad.empty()) throw InvalidInput(bad + " (got " + std::to_string(n) + ")");
  }
}

std::string reproducer(const CampaignSpec& spec, int n, int trial) {
  std::ostringstream os;
  os << "rainbow verify --theorem " << spec.theorem << " --n " << n << " --seed " << spec.seed
     << " --first-trial " << trial << " --trials 1";
  return os.str();
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec) {
  check_orders(spec);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.spec = spec;
  struct Job {
    int n;
    int trial;
  };
  std::vector<Job> jobs;
  for (int n : spec.ns) {
    for (int t = spec.first_trial; t < spec.first_trial + spec.trials; ++t) jobs.push_back({n, t});
  }
  std::vector<TrialRecord> records(jobs.size());
  // Trials run one at a time per thread; pair-level parallelism stays off.
  CheckOptions opts;
  opts.budget = spec.budget;
  parallel_for(jobs.size(), spec.jobs, [&](std::size_t i) {
    const auto [n, t] = jobs[i];
    const auto seed = trial_seed(spec.seed, n, t);
    Result r;
    try {
      const auto& id = spec.theorem;
      if (id == "t1_1") r = t1_1(n, seed, opts);
      if (id == "t1_5") r = t1_5(n, t, seed, opts);
      if (id == "t2_1") r = t2_1(n, seed, opts);
      if (id == "lem1") r = lem1(seed, opts);
      if (id == "lem5-bounds") r = lem5_bounds(n, t, seed, spec.budget);
      if (id == "cor2_3") r = cor2_3(n, t, seed, opts);
      if (id == "replay") r = replay(n, t, seed, spec.budget);
    } catch (const std::exception& e) {
      r = {TrialOutcome::fail, std::string("error: ") + e.what()};
    }
    records[i] = {n, t, seed, r.outcome, r.detail, reproducer(spec, n, t)};
  });
  for (auto& rec : records) {
    auto& tally = report.per_n[rec.n];
    ++tally.trials;
    switch (rec.outcome) {
      case TrialOutcome::pass:
        ++tally.pass;
        break;
      case TrialOutcome::fail:
        ++tally.fail;
        break;
      case TrialOutcome::inconclusive:
        ++tally.inconclusive;
        break;
      case TrialOutcome::skipped:
        ++tally.skipped;
        break;
    }
    if (rec.outcome == TrialOutcome::fail || rec.outcome == TrialOutcome::inconclusive) {
      report.problems.push_back(std::move(rec));
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const CampaignReport& r, bool with_wall_time) {
  Json j;
  j["theorem"] = r.spec.theorem;
  j["status"] = r.passed() ? "pass" : r.any_fail() ? "fail" : "inconclusive";
  j["seed"] = r.spec.seed;
  j["ns"] = r.spec.ns;
  j["trials"] = r.spec.trials;
  j["first_trial"] = r.spec.first_trial;
  j["budget"] = {{"node_limit", r.spec.budget.node_limit}};
  Json per_n = Json::object();
  for (const auto& [n, t] : r.per_n) {
    per_n[std::to_string(n)] = {{"trials", t.trials},
                                {"pass", t.pass},
                                {"fail", t.fail},
                                {"inconclusive", t.inconclusive},
                                {"skipped", t.skipped}};
  }
  j["per_n"] = per_n;
  Json problems = Json::array();
  for (const auto& p : r.problems) {
    problems.push_back({{"n", p.n},
                        {"trial", p.trial},
                        {"seed", p.seed},
                        {"outcome", to_string(p.outcome)},
                        {"detail", p.detail},
                        {"reproducer", p.reproducer}});
  }
  j["failing"] = problems;
  if (with_wall_time) j["wall_time_s"] = r.wall_seconds;
  return j;
}

}  // namespace rainbow
