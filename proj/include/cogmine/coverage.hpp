#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "cogmine/log_pipeline.hpp"
#include "cogmine/rational.hpp"
#include "cogmine/strategy_label.hpp"
#include "cogmine/submap.hpp"

namespace cogmine {

// A submap under coverage tracking, with its position-stable identity:
// a short column name ("desc1", "conn", ...) and the strategy label the
// submap maps to.
struct TrackedSubmap {
  Submap submap;
  std::string short_name;
  StrategyLabel label;
};

// Builds the canonical tracked triple [desc1, conn, desc2] for a
// comparison question.
std::vector<TrackedSubmap> track_comparison(const ComparisonTriple& triple, const KnowledgeMap& km);

// Tracks single-cku submaps in the fixed order Bubble, Circle, MultiFlow,
// Tree, Brace.
std::vector<TrackedSubmap> track_single(const std::vector<Submap>& submaps, const KnowledgeMap& km);

// Coverage rate of one submap: |visited ∩ unit_ids| / |unit_ids|, exact.
// Throws Errc::EmptySubmap when the submap has no units.
Rational coverage(const Submap& submap, const std::set<std::string>& visited);

// Vector of per-submap coverage rates at one learning moment.
struct CCM {
  std::vector<Rational> values;

  friend bool operator==(const CCM&, const CCM&) = default;
};

// Per-event series of CCMs over the cumulative distinct visited set.
struct CognitionControlSequence {
  std::vector<TrackedSubmap> submap_order;
  std::vector<CCM> ccms;  // one per LAS event
};

// Removes submaps the learner never touched plus all empty submaps. A
// comparison triple (any Connective present) is kept whole: its zeros are
// meaningful stages.
std::vector<TrackedSubmap> prune_irrelevant(std::vector<TrackedSubmap> submaps,
                                            const LearningActivitySequence& las);

CognitionControlSequence ccm_sequence(const LearningActivitySequence& las,
                                      const std::vector<TrackedSubmap>& submaps);

// A recognized cognitive strategy: the submap whose coverage first reached
// the threshold, with where it crossed.
struct CognitiveStrategyInstance {
  StrategyLabel label;
  std::size_t submap_index = 0;    // position in submap_order
  std::size_t crossing_index = 0;  // event index of first crossing
  Rational final_coverage;
};

// One instance per component whose coverage ever reaches the threshold,
// ordered by crossing index (ties by submap order).
std::vector<CognitiveStrategyInstance> recognize_strategies(const CognitionControlSequence& s_cog,
                                                            const Rational& threshold);

// Per-learner curve data: header `event_index,<short names...>`, decimal
// renderings with six fractional digits.
void write_curve_csv(std::ostream& out, const CognitionControlSequence& s_cog);

}  // namespace cogmine
