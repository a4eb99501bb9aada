#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cogmine/codec.hpp"
#include "cogmine/coverage.hpp"
#include "cogmine/gsp.hpp"
#include "cogmine/strategy_label.hpp"

namespace cogmine {

// Strips the concrete cku names from recognized strategy instances,
// keeping the crossing order: the learner's metacognitive strategy
// sequence.
MetaSequence abstract_learner(const std::vector<CognitiveStrategyInstance>& instances);

// Decodes a mined encoded pattern and labels it: walking consecutive
// quantized vectors (from an all-zero start), each component that
// increases emits its abstract label once per increase-run, components
// visited in submap order within a step. Throws Errc::NonMonotonePattern
// if a state ever decreases.
MetaSequence decode_and_label(const FrequentPattern& pattern, int arity,
                              const std::vector<StrategyKind>& component_kinds);

// Population statistics over per-learner strategy sequences. A learner
// counts toward a pattern only with a full-length sequence (every tracked
// component crossed); everything else is unmatched.
struct PatternReport {
  struct Row {
    MetaSequence labels;
    std::int64_t count = 0;
  };
  std::vector<Row> rows;  // count desc, then name asc
  std::int64_t total_learners = 0;
  std::int64_t unmatched = 0;
};

PatternReport population_report(const std::vector<MetaSequence>& sequences,
                                std::size_t expected_len);

// Plain-text table of pattern usage, percentage per row plus the matched
// sum.
std::string render_pattern_table(const PatternReport& report);

}  // namespace cogmine
