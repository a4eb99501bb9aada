#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cogmine/knowledge_map.hpp"
#include "cogmine/log_pipeline.hpp"
#include "cogmine/rational.hpp"

namespace cogmine {

// Synthetic learner styles. The stage orders mirror the three full
// comparison-solving patterns; Noise emits a bounded random walk.
enum class Archetype { DCD, CDD, DDC, Noise };

std::string_view archetype_name(Archetype a);
Archetype parse_archetype(const std::string& name);  // Errc::ConfigError

struct SimConfig {
  std::vector<std::string> core_items;         // exactly 2
  std::int64_t learner_count = 0;
  std::vector<std::pair<Archetype, Rational>> mix;  // fractions sum to 1
  std::uint64_t seed = 0;
  Rational interleave_prob{0};  // chance of an out-of-stage visit per event
  Rational completion{1};      // fraction of each submap visited per stage
  std::string question_id = "Q1";
  int k_depth = 2;
};

// Deterministic synthetic log: per learner, one visit per submap unit in
// the archetype's stage order (per-stage unit order shuffled by the seeded
// generator), plus occasional out-of-stage visits, framed by login/submit
// records to exercise filtering. Output is a pure function of (km,
// config). Throws Errc::EmptySubmapFixture when the comparison triple has
// an empty member.
std::vector<LearningEvent> simulate(const KnowledgeMap& km, const SimConfig& config);

// Largest-remainder apportionment of learner_count across the mix.
std::vector<std::int64_t> mix_counts(const SimConfig& config);

}  // namespace cogmine
