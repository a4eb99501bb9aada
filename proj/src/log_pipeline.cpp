#include "cogmine/log_pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cogmine {

namespace {

constexpr const char* kCsvHeader =
    "id,user_id,user_name,question_id,action_type,object_id,action_object,timestamp";

constexpr const char* kExcludedActions[] = {"login", "log in", "exit", "submit", "post"};

bool is_excluded_action(const std::string& action_type) {
  const std::string key = normalize_term(action_type);
  for (const char* excluded : kExcludedActions) {
    if (key == excluded) return true;
  }
  return false;
}

// Splits one CSV line; supports quoted fields with "" escapes. Embedded
// newlines are not supported (log records are single-line).
bool split_csv_line(const std::string& line, std::vector<std::string>& fields, std::string& error) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      if (!field.empty()) {
        error = "unexpected quote inside unquoted field";
        return false;
      }
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    error = "unterminated quoted field";
    return false;
  }
  fields.push_back(std::move(field));
  return true;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

bool parse_timestamp(const std::string& text, std::int64_t& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() && value >= 0;
}

bool validate_event(const LearningEvent& e, std::string& error) {
  if (e.user_id.empty()) {
    error = "empty user_id";
    return false;
  }
  if (e.question_id.empty()) {
    error = "empty question_id";
    return false;
  }
  return true;
}

ParsedLog parse_csv(std::istream& in) {
  ParsedLog result;
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(Errc::ParseError, "empty log: missing CSV header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw Error(Errc::ParseError, std::string("CSV header must be exactly '") + kCsvHeader + "'");
  }

  std::vector<std::string> fields;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string error;
    if (!split_csv_line(line, fields, error)) {
      result.errors.push_back({line_no, error});
      continue;
    }
    if (fields.size() != 8) {
      result.errors.push_back({line_no, "expected 8 fields, got " + std::to_string(fields.size())});
      continue;
    }
    LearningEvent e{fields[0], fields[1], fields[2], fields[3],
                    fields[4], fields[5], fields[6], 0};
    if (!parse_timestamp(fields[7], e.timestamp)) {
      result.errors.push_back({line_no, "invalid timestamp '" + fields[7] + "'"});
      continue;
    }
    if (!validate_event(e, error)) {
      result.errors.push_back({line_no, error});
      continue;
    }
    result.events.push_back(std::move(e));
  }
  return result;
}

ParsedLog parse_jsonl(std::istream& in) {
  using nlohmann::json;
  ParsedLog result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      result.errors.push_back({line_no, std::string("invalid JSON: ") + e.what()});
      continue;
    }
    if (!obj.is_object()) {
      result.errors.push_back({line_no, "record is not an object"});
      continue;
    }
    LearningEvent e;
    bool ok = true;
    auto read_string = [&](const char* field, std::string& target, bool required) {
      auto it = obj.find(field);
      if (it == obj.end() || it->is_null()) {
        if (required) {
          result.errors.push_back({line_no, std::string("missing field '") + field + "'"});
          ok = false;
        }
        return;
      }
      if (!it->is_string()) {
        result.errors.push_back({line_no, std::string("non-string field '") + field + "'"});
        ok = false;
        return;
      }
      target = it->get<std::string>();
    };
    read_string("id", e.id, true);
    read_string("user_id", e.user_id, true);
    read_string("user_name", e.user_name, false);
    read_string("question_id", e.question_id, true);
    read_string("action_type", e.action_type, true);
    read_string("object_id", e.object_id, false);
    read_string("action_object", e.action_object, false);
    if (auto it = obj.find("timestamp"); it == obj.end() || !it->is_number_integer() ||
                                         it->get<std::int64_t>() < 0) {
      result.errors.push_back({line_no, "missing or invalid 'timestamp'"});
      ok = false;
    } else {
      e.timestamp = it->get<std::int64_t>();
    }
    std::string error;
    if (ok && !validate_event(e, error)) {
      result.errors.push_back({line_no, error});
      ok = false;
    }
    if (ok) result.events.push_back(std::move(e));
  }
  return result;
}

}  // namespace

ParsedLog parse_log(std::istream& in, LogFormat format) {
  return format == LogFormat::Csv ? parse_csv(in) : parse_jsonl(in);
}

ParsedLog parse_log_file(const std::string& path, LogFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open log file '" + path + "'");
  return parse_log(in, format);
}

void write_log(std::ostream& out, const std::vector<LearningEvent>& events, LogFormat format) {
  if (format == LogFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const LearningEvent& e : events) {
      out << csv_quote(e.id) << ',' << csv_quote(e.user_id) << ',' << csv_quote(e.user_name) << ','
          << csv_quote(e.question_id) << ',' << csv_quote(e.action_type) << ','
          << csv_quote(e.object_id) << ',' << csv_quote(e.action_object) << ',' << e.timestamp
          << '\n';
    }
    return;
  }
  for (const LearningEvent& e : events) {
    nlohmann::json obj{{"id", e.id},
                       {"user_id", e.user_id},
                       {"user_name", e.user_name},
                       {"question_id", e.question_id},
                       {"action_type", e.action_type},
                       {"object_id", e.object_id},
                       {"action_object", e.action_object},
                       {"timestamp", e.timestamp}};
    out << obj.dump() << '\n';
  }
}

void write_log_file(const std::string& path, const std::vector<LearningEvent>& events,
                    LogFormat format) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write log file '" + path + "'");
  write_log(out, events, format);
}

FilterResult filter_events(std::vector<LearningEvent> events) {
  FilterResult result;
  result.events.reserve(events.size());
  for (LearningEvent& e : events) {
    if (is_excluded_action(e.action_type)) {
      ++result.removed;
    } else {
      result.events.push_back(std::move(e));
    }
  }
  return result;
}

LasBuildResult build_las(const std::vector<LearningEvent>& events, const KnowledgeMap& km,
                         const std::string& question_id) {
  // Ordered map keeps the output sorted by user id.
  std::map<std::string, std::vector<const LearningEvent*>> by_user;
  for (const LearningEvent& e : events) {
    if (e.question_id == question_id) by_user[e.user_id].push_back(&e);
  }

  LasBuildResult result;
  for (auto& [user_id, user_events] : by_user) {
    std::stable_sort(user_events.begin(), user_events.end(),
                     [](const LearningEvent* a, const LearningEvent* b) {
                       return std::tie(a->timestamp, a->id) < std::tie(b->timestamp, b->id);
                     });
    LearningActivitySequence las{user_id, question_id, {}};
    for (const LearningEvent* e : user_events) {
      if (e->object_id.empty()) continue;
      if (!km.has_unit(e->object_id)) {
        result.warnings.push_back("event " + e->id + " (user " + user_id +
                                  "): unresolved object_id '" + e->object_id + "'");
        continue;
      }
      if (!las.visits.empty() && las.visits.back() == e->object_id) continue;
      las.visits.push_back(e->object_id);
    }
    if (!las.visits.empty()) result.sequences.push_back(std::move(las));
  }
  return result;
}

std::set<std::string> question_ids(const std::vector<LearningEvent>& events) {
  std::set<std::string> ids;
  for (const LearningEvent& e : events) ids.insert(e.question_id);
  return ids;
}

}  // namespace cogmine
