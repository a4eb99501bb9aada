#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cogmine/exec.hpp"
#include "cogmine/rational.hpp"

namespace cogmine {

// Sequence database for mining. Symbols are opaque comparable tokens
// (encoded CCM codewords in this pipeline).
struct SequenceDatabase {
  struct Entry {
    std::string id;
    std::vector<std::int64_t> symbols;
  };
  std::vector<Entry> sequences;
};

struct FrequentPattern {
  std::vector<std::int64_t> pattern;
  std::int64_t support_count = 0;
  Rational support_ratio;  // support_count / |sequences|

  friend bool operator==(const FrequentPattern&, const FrequentPattern&) = default;
};

// True when `pattern` is an ordered, not-necessarily-contiguous
// subsequence of `sequence`.
bool contains_subsequence(const std::vector<std::int64_t>& sequence,
                          const std::vector<std::int64_t>& pattern);

// Generalized Sequential Patterns over singleton itemsets: levelwise
// candidate generation and prune, containment-based support (each sequence
// counted at most once), no gap or window constraints. Output sorted by
// (length desc, support desc, lexicographic) for determinism.
std::vector<FrequentPattern> gsp(const SequenceDatabase& db, const Rational& minsup,
                                 ExecMode mode = ExecMode::Parallel);

// Exhaustive oracle for small instances: enumerates every distinct
// subsequence up to max_len and counts containment. Same sort order as
// gsp. Guardrail: throws Errc::InstanceTooLarge beyond ~40 total symbols.
std::vector<FrequentPattern> brute_force_frequent(const SequenceDatabase& db,
                                                  const Rational& minsup, std::size_t max_len);

}  // namespace cogmine
