#include "cogmine/simulator.hpp"

#include <algorithm>
#include <random>

#include "cogmine/coverage.hpp"
#include "cogmine/submap.hpp"

namespace cogmine {

std::string_view archetype_name(Archetype a) {
  switch (a) {
    case Archetype::DCD: return "DCD";
    case Archetype::CDD: return "CDD";
    case Archetype::DDC: return "DDC";
    case Archetype::Noise: return "NOISE";
  }
  return "?";
}

Archetype parse_archetype(const std::string& name) {
  const std::string key = normalize_term(name);
  if (key == "dcd") return Archetype::DCD;
  if (key == "cdd") return Archetype::CDD;
  if (key == "ddc") return Archetype::DDC;
  if (key == "noise") return Archetype::Noise;
  throw Error(Errc::ConfigError, "unknown archetype '" + name + "'");
}

namespace {

// mt19937_64 with explicit modulo draws and an own Fisher-Yates shuffle,
// so the event stream depends only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  bool chance(const Rational& probability) {
    if (probability <= Rational(0)) return false;
    if (probability >= Rational(1)) return true;
    return below(static_cast<std::uint64_t>(probability.denominator())) <
           static_cast<std::uint64_t>(probability.numerator());
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stage order per archetype over the tracked triple [desc1, conn, desc2].
std::vector<std::size_t> stage_order(Archetype a) {
  switch (a) {
    case Archetype::DCD: return {0, 1, 2};
    case Archetype::CDD: return {1, 0, 2};
    case Archetype::DDC: return {0, 2, 1};
    case Archetype::Noise: return {};
  }
  return {};
}

void validate_config(const SimConfig& config) {
  if (config.core_items.size() != 2) {
    throw Error(Errc::ConfigError, "simulator needs exactly two core items");
  }
  if (config.learner_count < 0) {
    throw Error(Errc::ConfigError, "learner_count must be non-negative");
  }
  if (config.mix.empty()) throw Error(Errc::ConfigError, "mix must not be empty");
  Rational sum(0);
  for (const auto& [archetype, fraction] : config.mix) {
    (void)archetype;
    if (fraction < Rational(0)) throw Error(Errc::ConfigError, "mix fractions must be >= 0");
    sum += fraction;
  }
  if (sum != Rational(1)) {
    throw Error(Errc::ConfigError, "mix fractions must sum to 1, got " + to_fraction_string(sum));
  }
  if (config.interleave_prob < Rational(0) || config.interleave_prob > Rational(1)) {
    throw Error(Errc::ConfigError, "interleave_prob must be in [0, 1]");
  }
  if (config.completion <= Rational(0) || config.completion > Rational(1)) {
    throw Error(Errc::ConfigError, "completion must be in (0, 1]");
  }
}

}  // namespace

std::vector<std::int64_t> mix_counts(const SimConfig& config) {
  validate_config(config);
  const std::int64_t total = config.learner_count;
  std::vector<std::int64_t> counts(config.mix.size(), 0);
  std::vector<std::pair<Rational, std::size_t>> remainders;
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < config.mix.size(); ++i) {
    const Rational exact = config.mix[i].second * Rational(total);
    const std::int64_t floor = exact.numerator() / exact.denominator();
    counts[i] = floor;
    assigned += floor;
    remainders.push_back({exact - Rational(floor), i});
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) {
    ++counts[remainders[i % remainders.size()].second];
  }
  return counts;
}

std::vector<LearningEvent> simulate(const KnowledgeMap& km, const SimConfig& config) {
  const auto counts = mix_counts(config);

  const std::string cku1 = km.find_cku(config.core_items[0]);
  const std::string cku2 = km.find_cku(config.core_items[1]);
  const ComparisonTriple triple = comparison_triple(km, cku1, cku2, config.k_depth);
  const std::vector<TrackedSubmap> tracked = track_comparison(triple, km);
  for (const TrackedSubmap& t : tracked) {
    if (t.submap.empty()) {
      throw Error(Errc::EmptySubmapFixture,
                  "submap '" + t.short_name + "' is empty for cores " + config.core_items[0] +
                      "/" + config.core_items[1]);
    }
  }

  // Sorted unit pools, so draws depend only on the rng stream.
  std::vector<std::vector<std::string>> stage_units(tracked.size());
  for (std::size_t i = 0; i < tracked.size(); ++i) {
    stage_units[i].assign(tracked[i].submap.unit_ids.begin(), tracked[i].submap.unit_ids.end());
  }
  std::vector<std::string> walk_pool;  // every non-cku unit of the map
  for (const KnowledgeUnit& u : km.units()) {
    if (u.id != cku1 && u.id != cku2) walk_pool.push_back(u.id);
  }
  std::sort(walk_pool.begin(), walk_pool.end());

  std::vector<LearningEvent> events;
  std::int64_t event_counter = 0;
  std::int64_t learner_index = 0;

  auto emit = [&](const std::string& user, const std::string& action, const std::string& object_id,
                  const std::string& action_object, std::int64_t timestamp) {
    char id[24];
    std::snprintf(id, sizeof(id), "e%08lld", static_cast<long long>(++event_counter));
    events.push_back(LearningEvent{id, user, "Learner " + user.substr(1), config.question_id,
                                   action, object_id, action_object, timestamp});
  };

  for (std::size_t mix_index = 0; mix_index < counts.size(); ++mix_index) {
    const Archetype archetype = config.mix[mix_index].first;
    for (std::int64_t k = 0; k < counts[mix_index]; ++k, ++learner_index) {
      char user[24];
      std::snprintf(user, sizeof(user), "L%04lld", static_cast<long long>(learner_index + 1));
      Rng rng(mix64(config.seed + 0x6a09e667f3bcc908ULL * (learner_index + 1)));
      std::int64_t timestamp = 1700000000000LL + learner_index * 1000000LL;
      auto tick = [&] { return timestamp += 1000; };

      emit(user, "login", "", "", tick());

      if (archetype == Archetype::Noise) {
        const std::size_t walk_len =
            static_cast<std::size_t>(ceil_of(Rational(3, 5) * Rational(walk_pool.size())));
        for (std::size_t step = 0; step < walk_len; ++step) {
          const std::string& unit = walk_pool[rng.below(walk_pool.size())];
          emit(user, "visit", unit, km.unit_name(unit), tick());
        }
      } else {
        for (std::size_t stage : stage_order(archetype)) {
          std::vector<std::string> plan = stage_units[stage];
          rng.shuffle(plan);
          const std::size_t take = std::min<std::size_t>(
              plan.size(),
              static_cast<std::size_t>(ceil_of(config.completion * Rational(plan.size()))));
          for (std::size_t v = 0; v < take; ++v) {
            if (rng.chance(config.interleave_prob)) {
              // One stray visit outside the current stage.
              std::vector<std::string> outside;
              for (const std::string& u : walk_pool) {
                if (!tracked[stage].submap.unit_ids.count(u)) outside.push_back(u);
              }
              if (!outside.empty()) {
                const std::string& stray = outside[rng.below(outside.size())];
                emit(user, "visit", stray, km.unit_name(stray), tick());
              }
            }
            emit(user, "visit", plan[v], km.unit_name(plan[v]), tick());
          }
        }
      }

      emit(user, "submit", "", "", tick());
    }
  }
  return events;
}

}  // namespace cogmine
