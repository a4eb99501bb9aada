#include "cogmine/gsp.hpp"

#include <algorithm>
#include <set>

#include "cogmine/error.hpp"

namespace cogmine {

bool contains_subsequence(const std::vector<std::int64_t>& sequence,
                          const std::vector<std::int64_t>& pattern) {
  std::size_t p = 0;
  for (std::size_t s = 0; s < sequence.size() && p < pattern.size(); ++s) {
    if (sequence[s] == pattern[p]) ++p;
  }
  return p == pattern.size();
}

namespace {

using Pattern = std::vector<std::int64_t>;

void validate_db(const SequenceDatabase& db, const Rational& minsup) {
  if (db.sequences.empty()) throw Error(Errc::EmptyDatabase, "sequence database is empty");
  if (minsup <= Rational(0) || minsup > Rational(1)) {
    throw Error(Errc::InvalidMinsup, "minsup must be in (0, 1]");
  }
  std::set<std::string> ids;
  for (const auto& entry : db.sequences) {
    if (!ids.insert(entry.id).second) {
      throw Error(Errc::ValidationError, "duplicate sequence id '" + entry.id + "'");
    }
  }
}

// Containment counts for each candidate; both flavors must agree exactly.
// Candidates are independent, so the parallel version splits across them.
std::vector<std::int64_t> count_supports(const std::vector<Pattern>& candidates,
                                         const SequenceDatabase& db, ExecMode mode) {
  std::vector<std::int64_t> counts(candidates.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(candidates.size());
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      std::int64_t c = 0;
      for (const auto& entry : db.sequences) {
        if (contains_subsequence(entry.symbols, candidates[i])) ++c;
      }
      counts[i] = c;
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      for (const auto& entry : db.sequences) {
        if (contains_subsequence(entry.symbols, candidates[i])) ++counts[i];
      }
    }
  }
  return counts;
}

// (length desc, support desc, lexicographic asc)
void sort_patterns(std::vector<FrequentPattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(), [](const FrequentPattern& a, const FrequentPattern& b) {
    if (a.pattern.size() != b.pattern.size()) return a.pattern.size() > b.pattern.size();
    if (a.support_count != b.support_count) return a.support_count > b.support_count;
    return a.pattern < b.pattern;
  });
}

}  // namespace

std::vector<FrequentPattern> gsp(const SequenceDatabase& db, const Rational& minsup,
                                 ExecMode mode) {
  validate_db(db, minsup);
  const std::int64_t total = static_cast<std::int64_t>(db.sequences.size());
  // count/total >= minsup  <=>  count >= ceil(minsup * total)
  const std::int64_t min_count = std::max<std::int64_t>(1, ceil_of(minsup * Rational(total)));

  std::vector<FrequentPattern> result;

  // Level 1: distinct symbols.
  std::set<std::int64_t> alphabet;
  for (const auto& entry : db.sequences) alphabet.insert(entry.symbols.begin(), entry.symbols.end());
  std::vector<Pattern> candidates;
  for (std::int64_t symbol : alphabet) candidates.push_back({symbol});

  while (!candidates.empty()) {
    const auto counts = count_supports(candidates, db, mode);
    std::vector<Pattern> frequent_here;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (counts[i] >= min_count) {
        result.push_back({candidates[i], counts[i], Rational(counts[i], total)});
        frequent_here.push_back(candidates[i]);
      }
    }
    if (frequent_here.empty()) break;

    // Join: a + last(b) whenever dropping a's first item equals dropping
    // b's last item. For length-1 seeds this is the full cross product.
    const std::set<Pattern> frequent_set(frequent_here.begin(), frequent_here.end());
    std::vector<Pattern> next;
    for (const Pattern& a : frequent_here) {
      for (const Pattern& b : frequent_here) {
        if (!std::equal(a.begin() + 1, a.end(), b.begin(), b.end() - 1)) continue;
        Pattern candidate = a;
        candidate.push_back(b.back());
        // Prune: every subsequence obtained by dropping one element must
        // itself be frequent.
        bool viable = true;
        for (std::size_t drop = 0; drop < candidate.size() && viable; ++drop) {
          Pattern sub;
          sub.reserve(candidate.size() - 1);
          for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != drop) sub.push_back(candidate[i]);
          }
          viable = frequent_set.count(sub) != 0;
        }
        if (viable) next.push_back(std::move(candidate));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    candidates = std::move(next);
  }

  sort_patterns(result);
  return result;
}

std::vector<FrequentPattern> brute_force_frequent(const SequenceDatabase& db,
                                                  const Rational& minsup, std::size_t max_len) {
  validate_db(db, minsup);
  std::size_t total_symbols = 0;
  for (const auto& entry : db.sequences) {
    total_symbols += entry.symbols.size();
    if (entry.symbols.size() > 20) {
      throw Error(Errc::InstanceTooLarge, "sequence longer than 20 symbols");
    }
  }
  if (total_symbols > 40) {
    throw Error(Errc::InstanceTooLarge, "database holds more than 40 symbols total");
  }

  // Every distinct non-empty subsequence (up to max_len) of any sequence.
  std::set<Pattern> candidates;
  for (const auto& entry : db.sequences) {
    const auto& s = entry.symbols;
    const std::size_t subsets = std::size_t{1} << s.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      Pattern p;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (std::size_t{1} << i)) p.push_back(s[i]);
      }
      if (p.size() <= max_len) candidates.insert(std::move(p));
    }
  }

  const std::int64_t total = static_cast<std::int64_t>(db.sequences.size());
  const std::int64_t min_count = std::max<std::int64_t>(1, ceil_of(minsup * Rational(total)));
  std::vector<FrequentPattern> result;
  for (const Pattern& p : candidates) {
    std::int64_t count = 0;
    for (const auto& entry : db.sequences) {
      if (contains_subsequence(entry.symbols, p)) ++count;
    }
    if (count >= min_count) result.push_back({p, count, Rational(count, total)});
  }
  sort_patterns(result);
  return result;
}

}  // namespace cogmine
