#include "cogmine/abstraction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cogmine {

StrategyKind strategy_for(ThinkingMapKind kind) {
  switch (kind) {
    case ThinkingMapKind::Bubble: return StrategyKind::Description;
    case ThinkingMapKind::Connective: return StrategyKind::Comparison;
    case ThinkingMapKind::Tree: return StrategyKind::Classification;
    case ThinkingMapKind::Brace: return StrategyKind::WholePart;
    case ThinkingMapKind::MultiFlow: return StrategyKind::CauseEffect;
    case ThinkingMapKind::Circle: return StrategyKind::Context;
  }
  return StrategyKind::Description;
}

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Description: return "Description";
    case StrategyKind::Comparison: return "Comparison";
    case StrategyKind::Classification: return "Classification";
    case StrategyKind::WholePart: return "WholePart";
    case StrategyKind::CauseEffect: return "CauseEffect";
    case StrategyKind::Context: return "Context";
  }
  return "?";
}

std::string to_string(const StrategyLabel& label) {
  std::string out(strategy_name(label.kind));
  if (!label.cku_names.empty()) {
    out.push_back('(');
    for (std::size_t i = 0; i < label.cku_names.size(); ++i) {
      if (i) out += ", ";
      out += label.cku_names[i];
    }
    out.push_back(')');
  }
  return out;
}

std::string meta_sequence_name(const MetaSequence& sequence) {
  std::string out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) out.push_back('-');
    out += strategy_name(sequence[i]);
  }
  return out;
}

MetaSequence abstract_learner(const std::vector<CognitiveStrategyInstance>& instances) {
  MetaSequence sequence;
  sequence.reserve(instances.size());
  for (const CognitiveStrategyInstance& instance : instances) {
    sequence.push_back(instance.label.kind);
  }
  return sequence;
}

MetaSequence decode_and_label(const FrequentPattern& pattern, int arity,
                              const std::vector<StrategyKind>& component_kinds) {
  if (component_kinds.size() != static_cast<std::size_t>(arity)) {
    throw Error(Errc::OutOfRange, "component_kinds must match the arity");
  }
  MetaSequence labels;
  QuantizedCCM previous(static_cast<std::size_t>(arity), Rational(0));
  int last_component = -1;
  for (EncodedCCM code : pattern.pattern) {
    const QuantizedCCM current = decode_ccm(code, arity);
    for (int j = 0; j < arity; ++j) {
      if (current[j] < previous[j]) {
        throw Error(Errc::NonMonotonePattern,
                    "component " + std::to_string(j + 1) + " decreases in codeword " +
                        std::to_string(code));
      }
    }
    for (int j = 0; j < arity; ++j) {
      if (current[j] > previous[j] && j != last_component) {
        labels.push_back(component_kinds[j]);
        last_component = j;
      }
    }
    previous = current;
  }
  return labels;
}

PatternReport population_report(const std::vector<MetaSequence>& sequences,
                                std::size_t expected_len) {
  PatternReport report;
  report.total_learners = static_cast<std::int64_t>(sequences.size());
  std::map<MetaSequence, std::int64_t> counts;
  for (const MetaSequence& s : sequences) {
    if (s.size() == expected_len) {
      ++counts[s];
    } else {
      ++report.unmatched;
    }
  }
  for (auto& [labels, count] : counts) report.rows.push_back({labels, count});
  std::sort(report.rows.begin(), report.rows.end(),
            [](const PatternReport::Row& a, const PatternReport::Row& b) {
              if (a.count != b.count) return a.count > b.count;
              return meta_sequence_name(a.labels) < meta_sequence_name(b.labels);
            });
  return report;
}

std::string render_pattern_table(const PatternReport& report) {
  std::size_t name_width = std::string("Metacognition Strategy Pattern").size();
  for (const PatternReport::Row& row : report.rows) {
    name_width = std::max(name_width, meta_sequence_name(row.labels).size());
  }

  std::ostringstream os;
  auto line = [&](const std::string& name, const std::string& count, const std::string& pct) {
    os << name;
    os << std::string(name_width - name.size() + 2, ' ');
    os << count << std::string(count.size() < 8 ? 8 - count.size() : 1, ' ') << pct << '\n';
  };

  line("Metacognition Strategy Pattern", "Count", "Percentage");
  std::int64_t matched = 0;
  for (const PatternReport::Row& row : report.rows) {
    matched += row.count;
    line(meta_sequence_name(row.labels), std::to_string(row.count),
         to_percent1(row.count, report.total_learners) + "%");
  }
  line("Sum", std::to_string(matched), to_percent1(matched, report.total_learners) + "%");
  if (report.unmatched > 0) {
    line("Unmatched", std::to_string(report.unmatched),
         to_percent1(report.unmatched, report.total_learners) + "%");
  }
  return os.str();
}

}  // namespace cogmine
