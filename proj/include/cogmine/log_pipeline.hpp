#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "cogmine/knowledge_map.hpp"

namespace cogmine {

// One raw learning-log record.
struct LearningEvent {
  std::string id;
  std::string user_id;
  std::string user_name;
  std::string question_id;
  std::string action_type;
  std::string object_id;       // knowledge-unit reference; may be empty
  std::string action_object;
  std::int64_t timestamp = 0;  // epoch milliseconds

  friend bool operator==(const LearningEvent&, const LearningEvent&) = default;
};

enum class LogFormat { Csv, Jsonl };

// Malformed records are reported with line numbers, never dropped silently.
struct RecordError {
  std::size_t line = 0;
  std::string message;
};

struct ParsedLog {
  std::vector<LearningEvent> events;  // in file order
  std::vector<RecordError> errors;
};

// CSV header must be exactly
// id,user_id,user_name,question_id,action_type,object_id,action_object,timestamp.
// Throws Errc::ParseError when the header/schema is invalid; per-record
// problems are collected instead.
ParsedLog parse_log(std::istream& in, LogFormat format);
ParsedLog parse_log_file(const std::string& path, LogFormat format);

void write_log(std::ostream& out, const std::vector<LearningEvent>& events, LogFormat format);
void write_log_file(const std::string& path, const std::vector<LearningEvent>& events,
                    LogFormat format);

// Drops actions unrelated to question learning: login, log in, exit,
// submit, post (case-insensitive). Order preserved.
struct FilterResult {
  std::vector<LearningEvent> events;
  std::size_t removed = 0;
};

FilterResult filter_events(std::vector<LearningEvent> events);

// Time-ordered knowledge-unit visits of one learner on one question.
struct LearningActivitySequence {
  std::string user_id;
  std::string question_id;
  std::vector<std::string> visits;  // unit ids; no consecutive duplicates
};

struct LasBuildResult {
  std::vector<LearningActivitySequence> sequences;  // sorted by user_id
  std::vector<std::string> warnings;                // unresolved object ids
};

// Groups filtered events by user for one question, orders by (timestamp,
// id), resolves object ids against the map, and collapses consecutive
// duplicate visits. Events without an object id are not visits.
LasBuildResult build_las(const std::vector<LearningEvent>& events, const KnowledgeMap& km,
                         const std::string& question_id);

// Distinct question ids appearing in the events, sorted.
std::set<std::string> question_ids(const std::vector<LearningEvent>& events);

}  // namespace cogmine
