#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cogmine/abstraction.hpp"
#include "cogmine/codec.hpp"
#include "cogmine/coverage.hpp"
#include "cogmine/exec.hpp"
#include "cogmine/gsp.hpp"
#include "cogmine/log_pipeline.hpp"

namespace cogmine {

struct PipelineConfig {
  std::string km_path;
  std::vector<std::string> log_paths;
  LogFormat format = LogFormat::Csv;
  std::vector<std::string> core_items;  // 1 or 2
  int k_depth = 2;
  Rational threshold{3, 5};
  Rational minsup{1, 4};
  std::string out_dir;
};

void validate_pipeline_config(const PipelineConfig& config);  // Errc::ConfigError

// Everything computed for one learner on one question.
struct LearnerAnalysis {
  LearningActivitySequence las;
  CognitionControlSequence s_cog;
  std::vector<CognitiveStrategyInstance> instances;
  MetaSequence meta;
  std::vector<EncodedCCM> encoded;
};

// Per-learner fan-out over the shared read-only submaps. The parallel
// flavor must match the serial reference element for element.
std::vector<LearnerAnalysis> analyze_learners(const std::vector<LearningActivitySequence>& las_list,
                                              const std::vector<TrackedSubmap>& submaps,
                                              const Rational& threshold,
                                              ExecMode mode = ExecMode::Parallel);

// Resolves core items and plans the tracked submaps: the canonical
// [desc1, conn, desc2] triple for two cores, the five single-cku shapes
// otherwise (pruned later against the population).
std::vector<TrackedSubmap> plan_submaps(const KnowledgeMap& km,
                                        const std::vector<std::string>& core_items, int k_depth);

// Population-level pruning for single-cku runs: a submap stays when it is
// non-empty and at least one learner visited it.
std::vector<TrackedSubmap> prune_for_population(std::vector<TrackedSubmap> submaps,
                                                const std::vector<LearningActivitySequence>& las);

struct QuestionResult {
  std::string question_id;
  std::int64_t learner_count = 0;
  PatternReport report;
  std::vector<FrequentPattern> mined;
  std::vector<MetaSequence> mined_labels;  // aligned with `mined`
  std::vector<StrategyKind> component_kinds;
};

struct MineResult {
  std::string course_id;
  std::vector<std::string> cku_ids;
  std::vector<TrackedSubmap> submaps;  // as planned (before population pruning)
  std::vector<QuestionResult> questions;
  std::vector<std::string> warnings;
  std::vector<std::string> files_written;
};

nlohmann::json report_to_json(const QuestionResult& result, const Rational& threshold,
                              const Rational& minsup);

// Full Algorithm-1 run over every question id in the logs; writes the
// report document, per-learner curve CSVs, and submap DOT/JSON files under
// config.out_dir. Nothing is written until all inputs validated.
MineResult run_mine(const PipelineConfig& config, ExecMode mode = ExecMode::Parallel);

}  // namespace cogmine
