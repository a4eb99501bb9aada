#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cogmine/abstraction.hpp"
#include "cogmine/pipeline.hpp"
#include "cogmine/simulator.hpp"
#include "cogmine/submap.hpp"

namespace fs = std::filesystem;
using namespace cogmine;

namespace {

// Exit codes: 0 success, 2 config, 3 input (parse/validation), 4 empty data.
constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitEmptyData = 4;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ConfigError:
    case Errc::FormatError:
    case Errc::InvalidMinsup:
    case Errc::OutOfRange:
      return kExitConfig;
    case Errc::EmptyDatabase:
    case Errc::EmptySubmap:
    case Errc::EmptySubmapFixture:
      return kExitEmptyData;
    default:
      return kExitInput;
  }
}

const char* exit_class_name(int code) {
  switch (code) {
    case kExitConfig: return "config";
    case kExitEmptyData: return "data";
    default: return "input";
  }
}

LogFormat parse_format(const std::string& name) {
  if (name == "csv") return LogFormat::Csv;
  if (name == "jsonl") return LogFormat::Jsonl;
  throw Error(Errc::ConfigError, "format must be csv or jsonl, got '" + name + "'");
}

std::vector<std::pair<Archetype, Rational>> parse_mix(const std::string& text) {
  std::vector<std::pair<Archetype, Rational>> mix;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) {
      throw Error(Errc::ConfigError, "mix entries are NAME:FRACTION, got '" + part + "'");
    }
    mix.emplace_back(parse_archetype(part.substr(0, colon)),
                     parse_rational(part.substr(colon + 1)));
  }
  if (mix.empty()) throw Error(Errc::ConfigError, "empty mix");
  return mix;
}

struct MineOptions {
  PipelineConfig config;
  std::string config_path;
};

void load_mine_config_file(MineOptions& options) {
  std::ifstream in(options.config_path);
  if (!in) throw Error(Errc::ConfigError, "cannot open config file '" + options.config_path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ConfigError, std::string("config file is not valid JSON: ") + e.what());
  }
  try {
    PipelineConfig& c = options.config;
    if (doc.contains("km")) c.km_path = doc["km"].get<std::string>();
    if (doc.contains("logs")) c.log_paths = doc["logs"].get<std::vector<std::string>>();
    if (doc.contains("format")) c.format = parse_format(doc["format"].get<std::string>());
    if (doc.contains("cores")) c.core_items = doc["cores"].get<std::vector<std::string>>();
    if (doc.contains("k_depth")) c.k_depth = doc["k_depth"].get<int>();
    if (doc.contains("threshold")) c.threshold = parse_rational(doc["threshold"].get<std::string>());
    if (doc.contains("minsup")) c.minsup = parse_rational(doc["minsup"].get<std::string>());
    if (doc.contains("out")) c.out_dir = doc["out"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ConfigError, std::string("bad config field: ") + e.what());
  }
}

void print_submap_sizes(std::ostream& os, const std::vector<TrackedSubmap>& tracked) {
  bool first = true;
  for (const TrackedSubmap& t : tracked) {
    os << (first ? "" : " ") << t.short_name << '=' << t.submap.unit_ids.size();
    first = false;
  }
  os << '\n';
}

int cmd_validate(const std::string& km_path) {
  const KnowledgeMap km = load_km_file(km_path);
  std::cout << "0 violations: course '" << km.course_id() << "', " << km.units().size()
            << " units, " << km.edges().size() << " edges\n";
  return 0;
}

int cmd_submaps(const std::string& km_path, const std::vector<std::string>& cores, int k_depth,
                const std::string& out_dir) {
  const KnowledgeMap km = load_km_file(km_path);
  const std::vector<TrackedSubmap> tracked = plan_submaps(km, cores, k_depth);
  print_submap_sizes(std::cout, tracked);
  if (!out_dir.empty()) {
    fs::create_directories(fs::path(out_dir));
    for (const TrackedSubmap& t : tracked) {
      std::ofstream dot(fs::path(out_dir) / (t.short_name + ".dot"));
      dot << to_dot(t.submap, km, t.short_name);
      std::ofstream json_out(fs::path(out_dir) / (t.short_name + ".json"));
      json_out << submap_to_json(t.submap, km).dump(2) << '\n';
    }
    std::cout << "wrote " << tracked.size() << " submaps to " << out_dir << '\n';
  }
  return 0;
}

int cmd_ingest(const std::string& km_path, const std::vector<std::string>& log_paths,
               const std::string& format_name, const std::string& out_dir) {
  const KnowledgeMap km = load_km_file(km_path);
  const LogFormat format = parse_format(format_name);

  std::vector<LearningEvent> events;
  std::size_t record_errors = 0;
  for (const std::string& path : log_paths) {
    ParsedLog parsed = parse_log_file(path, format);
    for (const RecordError& error : parsed.errors) {
      std::cerr << path << ':' << error.line << ": " << error.message << '\n';
      ++record_errors;
    }
    events.insert(events.end(), std::make_move_iterator(parsed.events.begin()),
                  std::make_move_iterator(parsed.events.end()));
  }
  const std::size_t parsed_count = events.size();
  FilterResult filtered = filter_events(std::move(events));

  fs::create_directories(fs::path(out_dir));
  std::ofstream out(fs::path(out_dir) / "las.jsonl");
  std::size_t sequence_count = 0;
  std::size_t warning_count = 0;
  for (const std::string& question_id : question_ids(filtered.events)) {
    LasBuildResult las = build_las(filtered.events, km, question_id);
    for (const std::string& warning : las.warnings) {
      std::cerr << warning << '\n';
      ++warning_count;
    }
    for (const LearningActivitySequence& sequence : las.sequences) {
      out << nlohmann::json{{"user_id", sequence.user_id},
                            {"question_id", sequence.question_id},
                            {"visits", sequence.visits}}
                 .dump()
          << '\n';
      ++sequence_count;
    }
  }
  std::cout << parsed_count << " events parsed (" << record_errors << " bad records), "
            << filtered.removed << " filtered out, " << sequence_count << " sequences ("
            << warning_count << " unresolved visits) -> "
            << (fs::path(out_dir) / "las.jsonl").string() << '\n';
  return 0;
}

int cmd_simulate(const std::string& km_path, const SimConfig& sim, const std::string& format_name,
                 const std::string& out_dir) {
  const KnowledgeMap km = load_km_file(km_path);
  const LogFormat format = parse_format(format_name);
  const std::vector<LearningEvent> events = simulate(km, sim);
  fs::create_directories(fs::path(out_dir));
  const fs::path path =
      fs::path(out_dir) / (format == LogFormat::Csv ? "sim_log.csv" : "sim_log.jsonl");
  write_log_file(path.string(), events, format);
  std::cout << events.size() << " events for " << sim.learner_count << " learners -> "
            << path.string() << '\n';
  return 0;
}

int cmd_mine(const MineOptions& options) {
  const MineResult result = run_mine(options.config);
  std::cout << "course: " << result.course_id << "\nckus:";
  for (const std::string& cku : result.cku_ids) std::cout << ' ' << cku;
  std::cout << "\nsubmaps: ";
  print_submap_sizes(std::cout, result.submaps);
  for (const std::string& warning : result.warnings) std::cerr << "warning: " << warning << '\n';
  for (const QuestionResult& question : result.questions) {
    std::cout << "\nquestion " << question.question_id << ": " << question.learner_count
              << " learners, " << question.mined.size() << " mined patterns\n";
    std::cout << render_pattern_table(question.report);
  }
  std::cout << '\n'
            << result.files_written.size() << " files written to " << options.config.out_dir
            << '\n';
  return 0;
}

int cmd_report(const std::string& report_path) {
  std::ifstream in(report_path);
  if (!in) throw Error(Errc::IoError, "cannot open report '" + report_path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    const std::int64_t total = doc.at("total_learners").get<std::int64_t>();
    std::cout << "question " << doc.at("question_id").get<std::string>() << ": " << total
              << " learners\n";
    PatternReport report;
    report.total_learners = total;
    report.unmatched = doc.at("unmatched_count").get<std::int64_t>();
    std::int64_t matched = 0;
    std::cout << "Metacognition Strategy Pattern  Count  Percentage\n";
    for (const nlohmann::json& row : doc.at("patterns")) {
      const std::int64_t count = row.at("count").get<std::int64_t>();
      matched += count;
      std::cout << row.at("name").get<std::string>() << "  " << count << "  "
                << to_percent1(count, total) << "%\n";
    }
    std::cout << "Sum  " << matched << "  " << to_percent1(matched, total) << "%\n";
    if (report.unmatched > 0) {
      std::cout << "Unmatched  " << report.unmatched << "  "
                << to_percent1(report.unmatched, total) << "%\n";
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("report document is missing fields: ") + e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Mines cognitive and metacognitive strategy patterns from knowledge-map learning logs"};
  app.require_subcommand(1);

  std::string km_path, out_dir, report_path;
  std::string format_name = "csv";
  std::vector<std::string> cores, log_paths;
  int k_depth = 2;

  CLI::App* validate = app.add_subcommand("validate", "Load and validate a knowledge map");
  validate->add_option("--km", km_path, "knowledge map file")->required();

  CLI::App* submaps =
      app.add_subcommand("submaps", "Search thinking-map submaps around core items");
  submaps->add_option("--km", km_path)->required();
  submaps->add_option("--core", cores, "core item (give twice for comparison questions)")
      ->required()
      ->expected(1, 2);
  submaps->add_option("--k-depth", k_depth, "max hops for Tree/Brace submaps");
  submaps->add_option("--out", out_dir, "directory for DOT/JSON exports");

  CLI::App* ingest =
      app.add_subcommand("ingest", "Parse and filter logs, build activity sequences");
  ingest->add_option("--km", km_path)->required();
  ingest->add_option("--logs", log_paths)->required();
  ingest->add_option("--format", format_name, "csv or jsonl");
  ingest->add_option("--out", out_dir)->required();

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Generate a deterministic synthetic log");
  std::string mix_text = "DCD:1/3,CDD:1/3,DDC:1/3";
  std::string interleave_text = "0";
  SimConfig sim;
  simulate_cmd->add_option("--km", km_path)->required();
  simulate_cmd->add_option("--core", cores)->required()->expected(2);
  simulate_cmd->add_option("--learners", sim.learner_count)->required();
  simulate_cmd->add_option("--mix", mix_text, "NAME:FRACTION list, fractions sum to 1");
  simulate_cmd->add_option("--seed", sim.seed);
  simulate_cmd->add_option("--interleave", interleave_text, "out-of-stage visit probability");
  simulate_cmd->add_option("--k-depth", sim.k_depth);
  simulate_cmd->add_option("--format", format_name, "csv or jsonl");
  simulate_cmd->add_option("--out", out_dir)->required();

  CLI::App* mine = app.add_subcommand("mine", "Run the full strategy mining pipeline");
  MineOptions mine_options;
  std::string threshold_text, minsup_text;
  mine->add_option("--config", mine_options.config_path, "JSON config; flags win over it");
  CLI::Option* mine_km = mine->add_option("--km", km_path);
  CLI::Option* mine_logs = mine->add_option("--logs", log_paths);
  CLI::Option* mine_format = mine->add_option("--format", format_name, "csv or jsonl");
  CLI::Option* mine_cores = mine->add_option("--core", cores)->expected(1, 2);
  CLI::Option* mine_kdepth = mine->add_option("--k-depth", k_depth);
  CLI::Option* mine_threshold =
      mine->add_option("--threshold", threshold_text, "recognition threshold, e.g. 0.6 or 3/5");
  CLI::Option* mine_minsup = mine->add_option("--minsup", minsup_text, "GSP minimum support");
  CLI::Option* mine_out = mine->add_option("--out", out_dir);

  CLI::App* report = app.add_subcommand("report", "Render an existing report document");
  report->add_option("report_json", report_path, "path to report.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (validate->parsed()) return cmd_validate(km_path);
    if (submaps->parsed()) return cmd_submaps(km_path, cores, k_depth, out_dir);
    if (ingest->parsed()) return cmd_ingest(km_path, log_paths, format_name, out_dir);
    if (simulate_cmd->parsed()) {
      sim.core_items = cores;
      sim.mix = parse_mix(mix_text);
      sim.interleave_prob = parse_rational(interleave_text);
      return cmd_simulate(km_path, sim, format_name, out_dir);
    }
    if (mine->parsed()) {
      if (!mine_options.config_path.empty()) load_mine_config_file(mine_options);
      PipelineConfig& c = mine_options.config;
      if (mine_km->count()) c.km_path = km_path;
      if (mine_logs->count()) c.log_paths = log_paths;
      if (mine_format->count()) c.format = parse_format(format_name);
      if (mine_cores->count()) c.core_items = cores;
      if (mine_kdepth->count()) c.k_depth = k_depth;
      if (mine_threshold->count()) c.threshold = parse_rational(threshold_text);
      if (mine_minsup->count()) c.minsup = parse_rational(minsup_text);
      if (mine_out->count()) c.out_dir = out_dir;
      return cmd_mine(mine_options);
    }
    if (report->parsed()) return cmd_report(report_path);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    std::cerr << "error[" << exit_class_name(code) << "]: " << e.what() << '\n';
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error[input]: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
