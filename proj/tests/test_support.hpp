#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cogmine/knowledge_map.hpp"
#include "cogmine/submap.hpp"

namespace cogtest {

using namespace cogmine;

inline bool throws_with(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// In-memory copy of the C-course comparison fixture: Array with six
// attribute neighbors, Pointer with five, five connective units reachable
// through the two shared association neighbors, plus one subnode hanging
// off 2D Array.
inline KnowledgeMap paper_km() {
  std::vector<KnowledgeUnit> units;
  auto add = [&](const std::string& id, const std::string& name) {
    units.push_back({id, name, "", normalize_term(name)});
  };
  add("array", "Array");
  add("pointer", "Pointer");
  add("array_definition", "Array Definition");
  add("array_type", "Array Type");
  add("array_name", "Array Name");
  add("two_dim_array", "2D Array");
  add("array_init", "Array Initialization");
  add("array_access", "Array Access");
  add("two_dim_array_init", "2D Array Initialization");
  add("array_pointer", "Array Pointer");
  add("pointer_array", "Pointer Array");
  add("array_pointer_structure", "Array Pointer Structure");
  add("array_pointer_init", "Array Pointer Initialization");
  add("pointer_array_usage", "Pointer Array Usage");
  add("pointer_definition", "Pointer Definition");
  add("pointer_type", "Pointer Type");
  add("pointer_init", "Pointer Initialization");
  add("pointer_operation", "Pointer Operation");
  add("function_pointer", "Function Pointer");

  std::vector<SemanticEdge> edges;
  auto attr = [&](const std::string& head, const std::string& tail) {
    edges.push_back({head, RelationKind::Attribute, tail});
  };
  auto assoc = [&](const std::string& head, const std::string& tail) {
    edges.push_back({head, RelationKind::Association, tail});
  };
  attr("array", "array_definition");
  attr("array", "array_type");
  attr("array", "array_name");
  attr("array", "two_dim_array");
  attr("array", "array_init");
  attr("array", "array_access");
  attr("two_dim_array", "two_dim_array_init");
  edges.push_back({"two_dim_array", RelationKind::KindOf, "array"});
  edges.push_back({"array_name", RelationKind::PartOf, "array"});
  assoc("array", "array_pointer");
  assoc("pointer", "array_pointer");
  assoc("array", "pointer_array");
  assoc("pointer", "pointer_array");
  attr("array_pointer", "array_pointer_structure");
  attr("array_pointer", "array_pointer_init");
  attr("pointer_array", "pointer_array_usage");
  attr("pointer", "pointer_definition");
  attr("pointer", "pointer_type");
  attr("pointer", "pointer_init");
  attr("pointer", "pointer_operation");
  attr("pointer", "function_pointer");

  return KnowledgeMap::build("c-programming", std::move(units), std::move(edges));
}

// The worked-example activity sequence: three descriptive visits, one
// subnode visit, three connective visits, nothing on the pointer side.
inline std::vector<std::string> fig4_visits() {
  return {"array_definition",  "array_type",    "two_dim_array", "two_dim_array_init",
          "array_pointer",     "array_pointer_structure", "pointer_array"};
}

inline RelationKind random_kind(std::mt19937_64& rng) {
  return static_cast<RelationKind>(rng() % kRelationKindCount);
}

// Random small map: up to max_units units, random typed edges, no self
// loops or duplicate triples.
inline KnowledgeMap random_km(std::mt19937_64& rng, int max_units = 30) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_units - 1));
  std::vector<KnowledgeUnit> units;
  for (int i = 0; i < n; ++i) {
    const std::string id = "u" + std::to_string(i);
    units.push_back({id, "U" + std::to_string(i), "", id});
  }
  std::set<SemanticEdge> edges;
  const int edge_target = static_cast<int>(rng() % static_cast<std::uint64_t>(3 * n + 1));
  for (int i = 0; i < edge_target; ++i) {
    const std::string head = "u" + std::to_string(rng() % n);
    const std::string tail = "u" + std::to_string(rng() % n);
    if (head == tail) continue;
    edges.insert({head, random_kind(rng), tail});
  }
  return KnowledgeMap::build("random", std::move(units),
                             std::vector<SemanticEdge>(edges.begin(), edges.end()));
}

// Breadth-first reference over the raw edge list; deliberately independent
// of KnowledgeMap::neighbors.
inline std::set<std::string> bfs_reference(const KnowledgeMap& km, const std::string& start,
                                           RelationSet kinds, int hops) {
  std::set<std::string> seen{start};
  std::set<std::string> frontier{start};
  for (int depth = 0; depth < hops; ++depth) {
    std::set<std::string> next;
    for (const SemanticEdge& e : km.edges()) {
      if (!kinds.contains(e.relation)) continue;
      if (frontier.count(e.head) && !seen.count(e.tail)) next.insert(e.tail);
      if (frontier.count(e.tail) && !seen.count(e.head)) next.insert(e.head);
    }
    for (const std::string& u : next) seen.insert(u);
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  seen.erase(start);
  return seen;
}

// Connective reference built straight from the definition.
inline std::set<std::string> connective_reference(const KnowledgeMap& km, const std::string& cku1,
                                                  const std::string& cku2) {
  auto one_hop = [&](const std::string& u) { return bfs_reference(km, u, RelationSet::all(), 1); };
  const std::set<std::string> n1 = one_hop(cku1);
  const std::set<std::string> n2 = one_hop(cku2);
  std::set<std::string> shared;
  for (const std::string& u : n1) {
    if (n2.count(u)) shared.insert(u);
  }
  shared.erase(cku1);
  shared.erase(cku2);
  std::set<std::string> result = shared;
  for (const std::string& u : shared) {
    for (const std::string& v : one_hop(u)) result.insert(v);
  }
  result.erase(cku1);
  result.erase(cku2);
  return result;
}

}  // namespace cogtest
