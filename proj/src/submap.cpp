#include "cogmine/submap.hpp"

#include <algorithm>
#include <sstream>

namespace cogmine {

std::string_view thinking_map_name(ThinkingMapKind kind) {
  switch (kind) {
    case ThinkingMapKind::Bubble: return "Bubble";
    case ThinkingMapKind::Circle: return "Circle";
    case ThinkingMapKind::MultiFlow: return "MultiFlow";
    case ThinkingMapKind::Tree: return "Tree";
    case ThinkingMapKind::Brace: return "Brace";
    case ThinkingMapKind::Connective: return "Connective";
  }
  return "?";
}

namespace {

// Edges of the given kinds whose endpoints both lie in `members`.
std::vector<SemanticEdge> edges_within(const KnowledgeMap& km, RelationSet kinds,
                                       const std::set<std::string>& members) {
  std::vector<SemanticEdge> result;
  for (const SemanticEdge& e : km.edges()) {
    if (kinds.contains(e.relation) && members.count(e.head) && members.count(e.tail)) {
      result.push_back(e);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Submap grow(const KnowledgeMap& km, ThinkingMapKind kind, const std::string& cku,
            RelationSet kinds, int hops) {
  std::set<std::string> seen{cku};
  std::set<std::string> frontier{cku};
  for (int depth = 0; depth < hops && !frontier.empty(); ++depth) {
    std::set<std::string> next;
    for (const std::string& u : frontier) {
      for (const std::string& v : km.neighbors(u, kinds, Direction::Both)) {
        if (seen.insert(v).second) next.insert(v);
      }
    }
    frontier = std::move(next);
  }
  Submap sub;
  sub.kind = kind;
  sub.ckus = {cku};
  sub.unit_ids = seen;
  sub.unit_ids.erase(cku);
  sub.edge_set = edges_within(km, kinds, seen);
  return sub;
}

}  // namespace

std::vector<Submap> search_single(const KnowledgeMap& km, const std::string& cku, int k_depth) {
  if (!km.has_unit(cku)) throw Error(Errc::UnknownUnit, "unknown cku '" + cku + "'");
  if (k_depth < 1) throw Error(Errc::OutOfRange, "k_depth must be >= 1");
  std::vector<Submap> result;
  result.push_back(grow(km, ThinkingMapKind::Bubble, cku, {RelationKind::Attribute}, 1));
  result.push_back(grow(km, ThinkingMapKind::Circle, cku, {RelationKind::Association}, 1));
  result.push_back(
      grow(km, ThinkingMapKind::MultiFlow, cku, {RelationKind::Cause, RelationKind::Result}, 1));
  result.push_back(grow(km, ThinkingMapKind::Tree, cku, {RelationKind::KindOf}, k_depth));
  result.push_back(grow(km, ThinkingMapKind::Brace, cku, {RelationKind::PartOf}, k_depth));
  return result;
}

Submap search_connective(const KnowledgeMap& km, const std::string& cku1, const std::string& cku2) {
  if (cku1 == cku2) throw Error(Errc::SameUnit, "connective search needs two distinct ckus");
  if (!km.has_unit(cku1)) throw Error(Errc::UnknownUnit, "unknown cku '" + cku1 + "'");
  if (!km.has_unit(cku2)) throw Error(Errc::UnknownUnit, "unknown cku '" + cku2 + "'");

  const std::set<std::string> n1 = km.neighbors(cku1, RelationSet::all(), Direction::Both);
  const std::set<std::string> n2 = km.neighbors(cku2, RelationSet::all(), Direction::Both);

  std::set<std::string> shared;
  std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(),
                        std::inserter(shared, shared.begin()));
  shared.erase(cku1);
  shared.erase(cku2);

  std::set<std::string> units = shared;
  for (const std::string& u : shared) {
    const auto around = km.neighbors(u, RelationSet::all(), Direction::Both);
    units.insert(around.begin(), around.end());
  }
  units.erase(cku1);
  units.erase(cku2);

  std::set<std::string> members = units;
  members.insert(cku1);
  members.insert(cku2);

  Submap sub;
  sub.kind = ThinkingMapKind::Connective;
  sub.ckus = {cku1, cku2};
  sub.unit_ids = std::move(units);
  sub.edge_set = edges_within(km, RelationSet::all(), members);
  return sub;
}

ComparisonTriple comparison_triple(const KnowledgeMap& km, const std::string& cku1,
                                   const std::string& cku2, int k_depth) {
  (void)k_depth;  // descriptive submaps stay at one hop; deeper subnodes are excluded
  Submap conn = search_connective(km, cku1, cku2);

  auto descriptive = [&](const std::string& cku) {
    Submap bubble = grow(km, ThinkingMapKind::Bubble, cku, {RelationKind::Attribute}, 1);
    for (const std::string& u : conn.unit_ids) bubble.unit_ids.erase(u);
    bubble.unit_ids.erase(cku1);
    bubble.unit_ids.erase(cku2);
    std::set<std::string> members = bubble.unit_ids;
    members.insert(cku);
    std::vector<SemanticEdge> kept;
    for (const SemanticEdge& e : bubble.edge_set) {
      if (members.count(e.head) && members.count(e.tail)) kept.push_back(e);
    }
    bubble.edge_set = std::move(kept);
    return bubble;
  };

  ComparisonTriple triple;
  triple.desc1 = descriptive(cku1);
  triple.desc2 = descriptive(cku2);
  triple.conn = std::move(conn);
  return triple;
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const Submap& submap, const KnowledgeMap& km, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=ellipse, style=filled, fillcolor=white];\n";
  for (const std::string& cku : submap.ckus) {
    os << "  \"" << dot_escape(cku) << "\" [label=\"" << dot_escape(km.unit_name(cku))
       << "\", shape=doublecircle, fillcolor=gold];\n";
  }
  for (const std::string& id : submap.unit_ids) {
    os << "  \"" << dot_escape(id) << "\" [label=\"" << dot_escape(km.unit_name(id)) << "\"];\n";
  }
  for (const SemanticEdge& e : submap.edge_set) {
    os << "  \"" << dot_escape(e.head) << "\" -> \"" << dot_escape(e.tail) << "\" [label=\""
       << relation_label(e.relation) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json submap_to_json(const Submap& submap, const KnowledgeMap& km) {
  nlohmann::json doc;
  doc["kind"] = std::string(thinking_map_name(submap.kind));
  doc["ckus"] = submap.ckus;
  doc["course_id"] = km.course_id();
  doc["units"] = nlohmann::json::array();
  auto add_unit = [&](const std::string& id) {
    const KnowledgeUnit& u = km.unit(id);
    doc["units"].push_back(
        {{"id", u.id}, {"name", u.name}, {"content", u.content}, {"core_term", u.core_term}});
  };
  for (const std::string& cku : submap.ckus) add_unit(cku);
  for (const std::string& id : submap.unit_ids) add_unit(id);
  doc["edges"] = nlohmann::json::array();
  for (const SemanticEdge& e : submap.edge_set) {
    doc["edges"].push_back(
        {{"head", e.head}, {"relation", std::string(relation_label(e.relation))}, {"tail", e.tail}});
  }
  return doc;
}

}  // namespace cogmine
