#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cogmine/knowledge_map.hpp"

namespace cogmine {

// Thinking-Map shapes that submap search can produce. Each single-cku kind
// carries a fixed relation set and hop budget; Connective is the two-cku
// construction.
enum class ThinkingMapKind {
  Bubble,      // Attribute, 1 hop
  Circle,      // Association, 1 hop
  MultiFlow,   // Cause + Result, 1 hop
  Tree,        // KindOf, k-depth hops
  Brace,       // PartOf, k-depth hops
  Connective,  // shared neighborhood of two ckus
};

std::string_view thinking_map_name(ThinkingMapKind kind);

// A Thinking-Map-shaped subgraph anchored at one or two core knowledge
// units. unit_ids never contains the ckus.
struct Submap {
  ThinkingMapKind kind{};
  std::vector<std::string> ckus;      // 1 or 2 unit ids
  std::set<std::string> unit_ids;     // excludes ckus
  std::vector<SemanticEdge> edge_set; // sorted, duplicate-free

  bool empty() const { return unit_ids.empty(); }
};

// Single-cku search: Bubble/Circle/MultiFlow restricted to one hop,
// Tree/Brace grown breadth-first up to k_depth hops over their relation
// kinds. Adjacency is direction-agnostic. Empty submaps are still returned.
std::vector<Submap> search_single(const KnowledgeMap& km, const std::string& cku, int k_depth);

// Two-cku search: shared 1-hop neighbors of both ckus (all relation kinds)
// expanded by one more hop around each shared unit.
Submap search_connective(const KnowledgeMap& km, const std::string& cku1, const std::string& cku2);

// (desc1, conn, desc2) with the descriptive (Bubble) submaps made disjoint
// from the connective one; connective wins overlaps.
struct ComparisonTriple {
  Submap desc1;
  Submap conn;
  Submap desc2;
};

ComparisonTriple comparison_triple(const KnowledgeMap& km, const std::string& cku1,
                                   const std::string& cku2, int k_depth);

// GraphViz rendering; ckus styled distinctly.
std::string to_dot(const Submap& submap, const KnowledgeMap& km, const std::string& graph_name);

// KM-format JSON plus {kind, ckus}; unit records include the ckus.
nlohmann::json submap_to_json(const Submap& submap, const KnowledgeMap& km);

}  // namespace cogmine
