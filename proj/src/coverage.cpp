#include "cogmine/coverage.hpp"

#include <algorithm>
#include <ostream>

namespace cogmine {

namespace {

StrategyLabel label_for(const Submap& submap, const KnowledgeMap& km) {
  StrategyLabel label;
  label.kind = strategy_for(submap.kind);
  for (const std::string& cku : submap.ckus) label.cku_names.push_back(km.unit_name(cku));
  return label;
}

}  // namespace

std::vector<TrackedSubmap> track_comparison(const ComparisonTriple& triple,
                                            const KnowledgeMap& km) {
  return {
      {triple.desc1, "desc1", label_for(triple.desc1, km)},
      {triple.conn, "conn", label_for(triple.conn, km)},
      {triple.desc2, "desc2", label_for(triple.desc2, km)},
  };
}

std::vector<TrackedSubmap> track_single(const std::vector<Submap>& submaps,
                                        const KnowledgeMap& km) {
  std::vector<TrackedSubmap> tracked;
  tracked.reserve(submaps.size());
  for (const Submap& sub : submaps) {
    std::string name = std::string(thinking_map_name(sub.kind));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    tracked.push_back({sub, std::move(name), label_for(sub, km)});
  }
  return tracked;
}

Rational coverage(const Submap& submap, const std::set<std::string>& visited) {
  if (submap.unit_ids.empty()) {
    throw Error(Errc::EmptySubmap, "coverage of an empty submap is undefined");
  }
  std::int64_t hits = 0;
  for (const std::string& u : submap.unit_ids) {
    if (visited.count(u)) ++hits;
  }
  return Rational(hits, static_cast<std::int64_t>(submap.unit_ids.size()));
}

std::vector<TrackedSubmap> prune_irrelevant(std::vector<TrackedSubmap> submaps,
                                            const LearningActivitySequence& las) {
  const bool comparison = std::any_of(submaps.begin(), submaps.end(), [](const TrackedSubmap& t) {
    return t.submap.kind == ThinkingMapKind::Connective;
  });
  const std::set<std::string> visited(las.visits.begin(), las.visits.end());

  std::vector<TrackedSubmap> kept;
  for (TrackedSubmap& t : submaps) {
    if (t.submap.empty()) continue;
    if (!comparison) {
      bool touched = std::any_of(t.submap.unit_ids.begin(), t.submap.unit_ids.end(),
                                 [&](const std::string& u) { return visited.count(u) != 0; });
      if (!touched) continue;
    }
    kept.push_back(std::move(t));
  }
  return kept;
}

CognitionControlSequence ccm_sequence(const LearningActivitySequence& las,
                                      const std::vector<TrackedSubmap>& submaps) {
  for (const TrackedSubmap& t : submaps) {
    if (t.submap.empty()) {
      throw Error(Errc::EmptySubmap, "submap '" + t.short_name + "' has no units");
    }
  }

  CognitionControlSequence result;
  result.submap_order = submaps;
  result.ccms.reserve(las.visits.size());

  std::set<std::string> seen;
  std::vector<std::int64_t> hits(submaps.size(), 0);
  for (const std::string& unit : las.visits) {
    if (seen.insert(unit).second) {
      for (std::size_t i = 0; i < submaps.size(); ++i) {
        if (submaps[i].submap.unit_ids.count(unit)) ++hits[i];
      }
    }
    CCM ccm;
    ccm.values.reserve(submaps.size());
    for (std::size_t i = 0; i < submaps.size(); ++i) {
      ccm.values.emplace_back(hits[i],
                              static_cast<std::int64_t>(submaps[i].submap.unit_ids.size()));
    }
    result.ccms.push_back(std::move(ccm));
  }
  return result;
}

std::vector<CognitiveStrategyInstance> recognize_strategies(const CognitionControlSequence& s_cog,
                                                            const Rational& threshold) {
  if (threshold <= Rational(0) || threshold > Rational(1)) {
    throw Error(Errc::OutOfRange, "threshold must be in (0, 1]");
  }
  std::vector<CognitiveStrategyInstance> instances;
  const std::size_t components = s_cog.submap_order.size();
  for (std::size_t i = 0; i < components; ++i) {
    for (std::size_t t = 0; t < s_cog.ccms.size(); ++t) {
      if (s_cog.ccms[t].values[i] >= threshold) {
        instances.push_back({s_cog.submap_order[i].label, i, t,
                             s_cog.ccms.back().values[i]});
        break;
      }
    }
  }
  std::sort(instances.begin(), instances.end(),
            [](const CognitiveStrategyInstance& a, const CognitiveStrategyInstance& b) {
              return std::tie(a.crossing_index, a.submap_index) <
                     std::tie(b.crossing_index, b.submap_index);
            });
  return instances;
}

void write_curve_csv(std::ostream& out, const CognitionControlSequence& s_cog) {
  out << "event_index";
  for (const TrackedSubmap& t : s_cog.submap_order) out << ',' << t.short_name;
  out << '\n';
  for (std::size_t t = 0; t < s_cog.ccms.size(); ++t) {
    out << (t + 1);
    for (const Rational& v : s_cog.ccms[t].values) out << ',' << to_decimal6(v);
    out << '\n';
  }
}

}  // namespace cogmine
