#pragma once

#include <string>
#include <vector>

#include "cogmine/submap.hpp"

namespace cogmine {

// Abstract thinking-process categories, one per Thinking-Map shape.
enum class StrategyKind {
  Description,     // Bubble
  Comparison,      // Connective
  Classification,  // Tree
  WholePart,       // Brace
  CauseEffect,     // MultiFlow
  Context,         // Circle
};

StrategyKind strategy_for(ThinkingMapKind kind);
std::string_view strategy_name(StrategyKind kind);

// Concrete form carries the cku names ("Description of Array"); the
// abstract form drops them.
struct StrategyLabel {
  StrategyKind kind{};
  std::vector<std::string> cku_names;  // 0-2

  friend bool operator==(const StrategyLabel&, const StrategyLabel&) = default;
};

std::string to_string(const StrategyLabel& label);  // "Description(Array)"

// Ordered abstract labels, e.g. (Description, Comparison, Description).
using MetaSequence = std::vector<StrategyKind>;

// "Description-Comparison-Description"
std::string meta_sequence_name(const MetaSequence& sequence);

}  // namespace cogmine
