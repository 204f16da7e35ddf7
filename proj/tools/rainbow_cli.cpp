// rainbow: generate collections, check rainbow panconnectivity, classify
// extremal structure, replay the constructive argument and run campaigns.
//
// Exit codes: 0 property holds / campaign passed, 1 property fails,
// 2 usage error or infeasible request, 3 inconclusive (search budget).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/instance_io.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return kHolds;
    case Verdict::fails:
      return kFails;
    case Verdict::unknown:
      return kInconclusive;
  }
  return kUsage;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SearchBudget budget_from(std::uint64_t flag) {
  auto b = SearchBudget::from_environment();
  if (flag != 0) b.node_limit = flag;
  return b;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::string family = "random";
  int n = 0;
  int m = 0;
  int min_degree = -1;
  std::uint64_t seed = 0;
  std::string q2;
  std::string out;
};

std::vector<Edge> parse_edges(const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InvalidInput("edge '" + item + "' is not u-v");
    edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return edges;
}

GenSpec gen_spec(const GenArgs& a) {
  GenSpec spec;
  std::string family = a.family;
  const auto colon = family.find(':');
  if (colon != std::string::npos) {
    spec.lemma = family.substr(colon + 1);
    family = family.substr(0, colon);
  }
  if (family == "f" || family == "F_family") family = "f_family";
  if (family == "two_cliques_cor23" || family == "ii") family = "two_cliques";
  if (family == "join_partition_cor23" || family == "iii") family = "join_partition";
  spec.family = family_from_string(family);
  if (spec.family == Family::lemma_shape && spec.lemma.empty()) {
    throw InvalidInput("lemma_shape needs an id, e.g. lemma_shape:lem6:c1");
  }
  spec.n = a.n;
  const bool square = spec.family == Family::two_cliques_cor23 ||
                      spec.family == Family::join_partition_cor23;
  spec.m = a.m > 0 ? a.m : square ? a.n : a.n - 1;
  spec.min_degree = a.min_degree >= 0 ? a.min_degree : dirac_threshold(a.n);
  spec.seed = a.seed;
  if (!a.q2.empty()) spec.q2_edges = parse_edges(a.q2);
  return spec;
}

int cmd_gen(const GenArgs& a) {
  const auto spec = gen_spec(a);
  const auto coll = generate(spec);
  write_text(a.out, format_instance(coll));
  if (!a.out.empty() && a.out != "-") write_text(a.out + ".spec.json", dump(to_json(spec)));
  std::cerr << "generated " << to_string(spec.family) << " n=" << coll.order()
            << " m=" << coll.size() << " min degree " << collection_min_degree(coll) << "\n";
  return kHolds;
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string in;
  std::vector<int> pair;
  int k = 0;
  std::string cert;
  int jobs = 1;
  std::uint64_t budget = 0;
};

int check_pair(const GraphCollection& coll, const CheckArgs& a, const SearchBudget& budget) {
  const Vertex x = a.pair[0];
  const Vertex y = a.pair[1];
  std::vector<int> ks;
  if (a.k != 0) {
    ks.push_back(a.k);
  } else {
    const auto d = rainbow_distance(coll, x, y, budget);
    if (d.outcome == Outcome::exhausted) return kInconclusive;
    if (!d.distance) {
      std::cout << "no rainbow path joins " << x << " and " << y << "\n";
      return kFails;
    }
    for (int k = *d.distance + 1; k <= std::min(coll.order(), coll.size() + 1); ++k) {
      ks.push_back(k);
    }
  }
  Json paths = Json::object();
  int code = kHolds;
  for (int k : ks) {
    const auto r = find_rainbow_path(coll, x, y, k, 0, budget);
    std::cout << "k=" << k << ": ";
    if (r.found()) {
      std::cout << to_string(*r.witness) << "\n";
      paths[std::to_string(k)] = to_json(*r.witness);
    } else if (r.outcome == Outcome::none) {
      std::cout << "none\n";
      paths[std::to_string(k)] = nullptr;
      code = kFails;
    } else {
      std::cout << "inconclusive\n";
      if (code == kHolds) code = kInconclusive;
    }
  }
  if (!a.cert.empty()) {
    write_text(a.cert, dump(Json{{"x", x}, {"y", y}, {"paths", paths}}));
  }
  return code;
}

int cmd_check(const CheckArgs& a) {
  const auto coll = load_instance(a.in);
  const auto budget = budget_from(a.budget);
  if (!a.pair.empty()) return check_pair(coll, a, budget);
  CheckOptions opts;
  opts.budget = budget;
  opts.jobs = a.jobs;
  const auto cert = is_rainbow_panconnected(coll, opts);
  std::cout << "verdict: " << to_string(cert.verdict);
  if (cert.failure) {
    std::cout << " failing triple (" << cert.failure->x << ", " << cert.failure->y << ", "
              << cert.failure->k << ")";
  }
  if (cert.k_capped) std::cout << " (k capped at m+1 = " << cert.k_max << ")";
  std::cout << "\n";
  if (!a.cert.empty()) write_text(a.cert, dump(to_json(cert)));
  return exit_for(cert.verdict);
}

// ---- classify ------------------------------------------------------------

int cmd_classify(const std::string& in, std::uint64_t budget_flag) {
  const auto coll = load_instance(in);
  const int n = coll.order();
  Json out;
  out["n"] = n;
  out["m"] = coll.size();
  std::optional<ExtremalWitness> w;
  if (coll.size() == n - 1 && n % 2 == 1) w = recognize_F_family(coll);
  if (w) {
    out["classification"] = "F_family";
    out["witness"] = to_json(*w);
  } else if (coll.size() == n && n % 2 == 0) {
    CheckOptions opts;
    opts.budget = budget_from(budget_flag);
    const auto r = classify_ham_path_obstruction(coll, opts);
    switch (r.tag) {
      case ObstructionCase::has_ham_path:
        out["classification"] = "none";
        break;
      case ObstructionCase::two_cliques:
        out["classification"] = "two_cliques";
        break;
      case ObstructionCase::join_partition:
        out["classification"] = "join_partition";
        break;
      case ObstructionCase::unresolved:
        out["classification"] = "unresolved";
        break;
    }
    out["case"] = to_string(r.tag);
    out["report"] = to_json(r);
  } else if (const auto split = recognize_clique_split(coll)) {
    out["classification"] = to_string(split->kind);
    out["witness"] = to_json(*split);
  } else {
    out["classification"] = "none";
  }
  std::cout << dump(out);
  std::cerr << "classification: " << out["classification"].get<std::string>() << "\n";
  return kHolds;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::vector<int> ns;
  int trials = 100;
  int first_trial = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::uint64_t budget = 0;
  std::string out;
  bool no_wall_time = false;
};

int cmd_verify(const VerifyArgs& a) {
  CampaignSpec spec;
  spec.theorem = a.theorem;
  spec.ns = a.ns;
  spec.trials = a.trials;
  spec.first_trial = a.first_trial;
  spec.seed = a.seed;
  spec.jobs = a.jobs;
  spec.budget = budget_from(a.budget);
  const auto report = run_campaign(spec);
  write_text(a.out, dump(to_json(report, !a.no_wall_time)));

  for (const auto& [n, t] : report.per_n) {
    std::cerr << a.theorem << " n=" << n << ": " << t.pass << " pass, " << t.fail << " fail, "
              << t.inconclusive << " inconclusive, " << t.skipped << " skipped of " << t.trials
              << "\n";
  }
  for (const auto& p : report.problems) {
    std::cerr << to_string(p.outcome) << " n=" << p.n << " trial " << p.trial << ": "
              << p.detail << "\n  rerun: " << p.reproducer << "\n";
  }
  if (report.passed()) return kHolds;
  return report.any_fail() ? kFails : kInconclusive;
}

// ---- replay --------------------------------------------------------------

struct ReplayArgs {
  std::string in;
  std::vector<int> pair;
  bool traces = false;
  int jobs = 1;
  std::uint64_t budget = 0;
  std::string out;
};

int cmd_replay(const ReplayArgs& a) {
  const auto coll = load_instance(a.in);
  const int n = coll.order();
  ConstructionOptions opts;
  opts.budget = budget_from(a.budget);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (!a.pair.empty()) {
    pairs.emplace_back(a.pair[0], a.pair[1]);
  } else {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    }
  }
  std::vector<ReplayResult> results(pairs.size());
  parallel_for(pairs.size(), a.jobs, [&](std::size_t i) {
    results[i] = constructive_panconnect(coll, pairs[i].first, pairs[i].second, opts);
  });

  std::string verdict = n % 2 == 0 ? "delegated" : "R1";
  std::size_t discrepancies = 0;
  Json arr = Json::array();
  for (const auto& r : results) {
    if (r.verdict == ReplayVerdict::r2) verdict = "R2";
    discrepancies += r.discrepancies.size();
    arr.push_back(to_json(r, a.traces));
  }
  Json out;
  out["n"] = n;
  out["m"] = coll.size();
  out["verdict"] = verdict;
  out["discrepancies"] = discrepancies;
  if (n % 2 == 0) out["note"] = "even n: search-based certificate only";
  out["pairs"] = std::move(arr);
  write_text(a.out, dump(out));
  std::cerr << "replay: " << verdict << ", " << pairs.size() << " pairs, " << discrepancies
            << " discrepancies\n";
  return discrepancies == 0 ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow panconnectivity toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a graph collection");
  g->add_option("--family", gen.family,
                "random | f | two_cliques | join_partition | lemma_shape:<id>");
  g->add_option("--n", gen.n, "number of vertices")->required();
  g->add_option("--m", gen.m, "number of graphs (default n-1, or n for the square families)");
  g->add_option("--min-degree", gen.min_degree, "random family: minimum degree per graph");
  g->add_option("--seed", gen.seed);
  g->add_option("--q2", gen.q2, "f family: Q2 edges as u-v,u-v in local indices");
  g->add_option("--out", gen.out, "instance file (default stdout); spec goes to <out>.spec.json");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "check rainbow panconnectivity");
  c->add_option("--in", check.in)->required();
  c->add_option("--pair", check.pair, "x y")->expected(2);
  c->add_option("--k", check.k, "path order (vertices); needs --pair");
  c->add_option("--cert", check.cert, "write the JSON certificate here");
  c->add_option("--jobs", check.jobs)->check(CLI::PositiveNumber);
  c->add_option("--budget", check.budget, "search node limit");

  std::string classify_in;
  std::uint64_t classify_budget = 0;
  auto* cl = app.add_subcommand("classify", "recognize extremal structure");
  cl->add_option("--in", classify_in)->required();
  cl->add_option("--budget", classify_budget, "search node limit");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run a seeded campaign");
  v->add_option("--theorem", verify.theorem)->required()->check(CLI::IsMember(campaign_ids()));
  v->add_option("--n", verify.ns)->required()->delimiter(',');
  v->add_option("--trials", verify.trials)->check(CLI::PositiveNumber);
  v->add_option("--first-trial", verify.first_trial)->check(CLI::NonNegativeNumber);
  v->add_option("--seed", verify.seed);
  v->add_option("--jobs", verify.jobs)->check(CLI::PositiveNumber);
  v->add_option("--budget", verify.budget, "search node limit");
  v->add_option("--out", verify.out, "report file (default stdout)");
  v->add_flag("--no-wall-time", verify.no_wall_time, "omit wall time from the report");

  ReplayArgs replay;
  auto* r = app.add_subcommand("replay", "replay the constructive argument");
  r->add_option("--in", replay.in)->required();
  r->add_option("--pair", replay.pair, "x y")->expected(2);
  r->add_flag("--traces", replay.traces, "include branch traces");
  r->add_option("--jobs", replay.jobs)->check(CLI::PositiveNumber);
  r->add_option("--budget", replay.budget, "search node limit");
  r->add_option("--out", replay.out, "result file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (check.k != 0 && check.pair.empty()) {
    std::cerr << "check: --k needs --pair\n";
    return kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*c) return cmd_check(check);
    if (*cl) return cmd_classify(classify_in, classify_budget);
    if (*v) return cmd_verify(verify);
    if (*r) return cmd_replay(replay);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
