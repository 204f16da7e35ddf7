#pragma once

// Seeded verification campaigns. Trial t at order n uses the seed
// derive_seed(derive_seed(seed, n), t), so results do not depend on --jobs
// and any single trial can be rerun alone.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rainbow/json_io.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

/// t1_1, t1_5, t2_1, lem1, lem5-bounds, cor2_3, replay.
const std::vector<std::string>& campaign_ids();

struct CampaignSpec {
  std::string theorem;
  std::vector<int> ns;
  int trials = 100;
  int first_trial = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  SearchBudget budget;
};

/// skipped: the sampled instance did not meet the campaign's hypothesis.
enum class TrialOutcome { pass, fail, inconclusive, skipped };

const char* to_string(TrialOutcome o);

struct TrialRecord {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  TrialOutcome outcome = TrialOutcome::pass;
  std::string detail;
  std::string reproducer;
};

struct Tally {
  int trials = 0;
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  int skipped = 0;
};

struct CampaignReport {
  CampaignSpec spec;
  std::map<int, Tally> per_n;
  std::vector<TrialRecord> problems;  // failing and inconclusive trials
  double wall_seconds = 0;

  bool passed() const;
  bool any_fail() const;
};

/// Throws InvalidInput for unknown ids or orders the campaign cannot use.
CampaignReport run_campaign(const CampaignSpec& spec);

std::uint64_t trial_seed(std::uint64_t seed, int n, int trial);

Json to_json(const CampaignReport& r, bool with_wall_time);

}  // namespace rainbow
