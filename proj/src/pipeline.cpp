#include "cogmine/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cogmine/submap.hpp"

namespace cogmine {

namespace fs = std::filesystem;

void validate_pipeline_config(const PipelineConfig& config) {
  if (config.km_path.empty()) throw Error(Errc::ConfigError, "no knowledge map given");
  if (config.log_paths.empty()) throw Error(Errc::ConfigError, "no log files given");
  if (config.core_items.empty() || config.core_items.size() > 2) {
    throw Error(Errc::ConfigError, "need 1 or 2 core items");
  }
  if (config.k_depth < 1) throw Error(Errc::ConfigError, "k_depth must be >= 1");
  if (config.threshold <= Rational(0) || config.threshold > Rational(1)) {
    throw Error(Errc::ConfigError, "threshold must be in (0, 1]");
  }
  if (config.minsup <= Rational(0) || config.minsup > Rational(1)) {
    throw Error(Errc::ConfigError, "minsup must be in (0, 1]");
  }
  if (config.out_dir.empty()) throw Error(Errc::ConfigError, "no output directory given");
}

std::vector<TrackedSubmap> plan_submaps(const KnowledgeMap& km,
                                        const std::vector<std::string>& core_items, int k_depth) {
  if (core_items.size() == 2) {
    const std::string cku1 = km.find_cku(core_items[0]);
    const std::string cku2 = km.find_cku(core_items[1]);
    return track_comparison(comparison_triple(km, cku1, cku2, k_depth), km);
  }
  const std::string cku = km.find_cku(core_items.at(0));
  return track_single(search_single(km, cku, k_depth), km);
}

std::vector<TrackedSubmap> prune_for_population(std::vector<TrackedSubmap> submaps,
                                                const std::vector<LearningActivitySequence>& las) {
  std::set<std::string> visited;
  for (const LearningActivitySequence& sequence : las) {
    visited.insert(sequence.visits.begin(), sequence.visits.end());
  }
  std::vector<TrackedSubmap> kept;
  for (TrackedSubmap& t : submaps) {
    if (t.submap.empty()) continue;
    const bool touched = std::any_of(t.submap.unit_ids.begin(), t.submap.unit_ids.end(),
                                     [&](const std::string& u) { return visited.count(u) != 0; });
    if (touched) kept.push_back(std::move(t));
  }
  return kept;
}

std::vector<LearnerAnalysis> analyze_learners(const std::vector<LearningActivitySequence>& las_list,
                                              const std::vector<TrackedSubmap>& submaps,
                                              const Rational& threshold, ExecMode mode) {
  std::vector<LearnerAnalysis> results(las_list.size());
  const std::int64_t n = static_cast<std::int64_t>(las_list.size());

  auto analyze_one = [&](std::int64_t i) {
    LearnerAnalysis& a = results[i];
    a.las = las_list[i];
    a.s_cog = ccm_sequence(a.las, submaps);
    a.instances = recognize_strategies(a.s_cog, threshold);
    a.meta = abstract_learner(a.instances);
    a.encoded = encode_sequence(a.s_cog);
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) analyze_one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) analyze_one(i);
  }
  return results;
}

namespace {

std::string sanitize_path_component(const std::string& text) {
  std::string out;
  for (char c : text) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_');
  }
  return out.empty() ? "_" : out;
}

void write_text_file(const fs::path& path, const std::string& content,
                     std::vector<std::string>& files_written) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path.string() + "'");
  out << content;
  files_written.push_back(path.string());
}

}  // namespace

nlohmann::json report_to_json(const QuestionResult& result, const Rational& threshold,
                              const Rational& minsup) {
  nlohmann::json doc;
  doc["question_id"] = result.question_id;
  doc["total_learners"] = result.report.total_learners;
  doc["threshold"] = to_fraction_string(threshold);
  doc["minsup"] = to_fraction_string(minsup);
  doc["patterns"] = nlohmann::json::array();
  for (const PatternReport::Row& row : result.report.rows) {
    nlohmann::json labels = nlohmann::json::array();
    for (StrategyKind kind : row.labels) labels.push_back(std::string(strategy_name(kind)));
    doc["patterns"].push_back({{"labels", labels},
                               {"name", meta_sequence_name(row.labels)},
                               {"count", row.count},
                               {"pct", 100.0 * static_cast<double>(row.count) /
                                           static_cast<double>(result.report.total_learners)}});
  }
  doc["unmatched_count"] = result.report.unmatched;
  doc["mined_raw"] = nlohmann::json::array();
  for (std::size_t i = 0; i < result.mined.size(); ++i) {
    const FrequentPattern& p = result.mined[i];
    nlohmann::json row{{"pattern", p.pattern},
                       {"support_count", p.support_count},
                       {"support_ratio", boost::rational_cast<double>(p.support_ratio)}};
    row["labels"] = meta_sequence_name(result.mined_labels[i]);
    doc["mined_raw"].push_back(row);
  }
  return doc;
}

MineResult run_mine(const PipelineConfig& config, ExecMode mode) {
  validate_pipeline_config(config);

  const KnowledgeMap km = load_km_file(config.km_path);
  MineResult result;
  result.course_id = km.course_id();
  result.submaps = plan_submaps(km, config.core_items, config.k_depth);
  for (const TrackedSubmap& t : result.submaps) {
    for (const std::string& cku : t.submap.ckus) {
      if (std::find(result.cku_ids.begin(), result.cku_ids.end(), cku) == result.cku_ids.end()) {
        result.cku_ids.push_back(cku);
      }
    }
  }
  const bool comparison = config.core_items.size() == 2;
  if (comparison) {
    for (const TrackedSubmap& t : result.submaps) {
      if (t.submap.empty()) {
        throw Error(Errc::EmptySubmap,
                    "comparison submap '" + t.short_name + "' has no units on this map");
      }
    }
  }

  std::vector<LearningEvent> events;
  for (const std::string& path : config.log_paths) {
    ParsedLog parsed = parse_log_file(path, config.format);
    for (const RecordError& error : parsed.errors) {
      result.warnings.push_back(path + ":" + std::to_string(error.line) + ": " + error.message);
    }
    events.insert(events.end(), std::make_move_iterator(parsed.events.begin()),
                  std::make_move_iterator(parsed.events.end()));
  }
  const FilterResult filtered = filter_events(std::move(events));
  if (filtered.events.empty()) {
    throw Error(Errc::EmptyDatabase, "no learning events left after filtering");
  }

  struct QuestionData {
    QuestionResult result;
    std::vector<LearnerAnalysis> analyses;
    std::vector<TrackedSubmap> tracked;
  };
  std::vector<QuestionData> questions;

  for (const std::string& question_id : question_ids(filtered.events)) {
    LasBuildResult las = build_las(filtered.events, km, question_id);
    for (const std::string& warning : las.warnings) result.warnings.push_back(warning);
    if (las.sequences.empty()) continue;

    std::vector<TrackedSubmap> tracked =
        comparison ? result.submaps : prune_for_population(result.submaps, las.sequences);
    if (tracked.empty()) continue;
    if (tracked.size() > 3) {
      throw Error(Errc::TooManyComponents,
                  "question '" + question_id + "' leaves " + std::to_string(tracked.size()) +
                      " submaps; the positional encoding supports at most 3");
    }

    QuestionData data;
    data.tracked = tracked;
    data.analyses = analyze_learners(las.sequences, tracked, config.threshold, mode);

    SequenceDatabase db;
    for (const LearnerAnalysis& a : data.analyses) {
      db.sequences.push_back({a.las.user_id, a.encoded});
    }
    data.result.question_id = question_id;
    data.result.learner_count = static_cast<std::int64_t>(data.analyses.size());
    for (const TrackedSubmap& t : tracked) data.result.component_kinds.push_back(t.label.kind);
    data.result.mined = gsp(db, config.minsup, mode);
    for (const FrequentPattern& p : data.result.mined) {
      data.result.mined_labels.push_back(
          decode_and_label(p, static_cast<int>(tracked.size()), data.result.component_kinds));
    }

    std::vector<MetaSequence> metas;
    for (const LearnerAnalysis& a : data.analyses) metas.push_back(a.meta);
    data.result.report = population_report(metas, tracked.size());
    questions.push_back(std::move(data));
  }

  if (questions.empty()) {
    throw Error(Errc::EmptyDatabase, "no learner produced a usable activity sequence");
  }

  // All inputs are good; now touch the filesystem.
  const fs::path out_root(config.out_dir);
  fs::create_directories(out_root / "submaps");
  for (const TrackedSubmap& t : result.submaps) {
    write_text_file(out_root / "submaps" / (sanitize_path_component(t.short_name) + ".dot"),
                    to_dot(t.submap, km, t.short_name), result.files_written);
    write_text_file(out_root / "submaps" / (sanitize_path_component(t.short_name) + ".json"),
                    submap_to_json(t.submap, km).dump(2) + "\n", result.files_written);
  }

  for (QuestionData& data : questions) {
    const fs::path question_dir = out_root / sanitize_path_component(data.result.question_id);
    fs::create_directories(question_dir / "curves");
    for (const LearnerAnalysis& a : data.analyses) {
      std::ostringstream csv;
      write_curve_csv(csv, a.s_cog);
      write_text_file(question_dir / "curves" / (sanitize_path_component(a.las.user_id) + ".csv"),
                      csv.str(), result.files_written);
    }
    write_text_file(question_dir / "report.json",
                    report_to_json(data.result, config.threshold, config.minsup).dump(2) + "\n",
                    result.files_written);
    write_text_file(question_dir / "report.txt", render_pattern_table(data.result.report),
                    result.files_written);
    result.questions.push_back(std::move(data.result));
  }
  return result;
}

}  // namespace cogmine
