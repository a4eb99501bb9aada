#include "cogmine/knowledge_map.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace cogmine {

std::string normalize_term(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

namespace {

struct AliasEntry {
  const char* alias;
  RelationKind kind;
};

// Fixed alias table; "a kind of" and "a type of" are used interchangeably.
constexpr AliasEntry kAliases[] = {
    {"an attribute", RelationKind::Attribute},
    {"attribute", RelationKind::Attribute},
    {"an association", RelationKind::Association},
    {"association", RelationKind::Association},
    {"a part of", RelationKind::PartOf},
    {"a part", RelationKind::PartOf},
    {"partof", RelationKind::PartOf},
    {"a kind of", RelationKind::KindOf},
    {"a type of", RelationKind::KindOf},
    {"kindof", RelationKind::KindOf},
    {"an initial cause", RelationKind::Cause},
    {"cause", RelationKind::Cause},
    {"a result", RelationKind::Result},
    {"result", RelationKind::Result},
    {"a definition", RelationKind::Definition},
    {"definition", RelationKind::Definition},
    {"similar to", RelationKind::SimilarTo},
    {"similarto", RelationKind::SimilarTo},
};

}  // namespace

RelationKind normalize_relation(std::string_view label) {
  const std::string key = normalize_term(label);
  for (const auto& entry : kAliases) {
    if (key == entry.alias) return entry.kind;
  }
  throw Error(Errc::UnknownRelation, "unknown relation label '" + std::string(label) + "'");
}

std::string_view relation_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Attribute: return "Attribute";
    case RelationKind::Association: return "Association";
    case RelationKind::PartOf: return "PartOf";
    case RelationKind::KindOf: return "KindOf";
    case RelationKind::Cause: return "Cause";
    case RelationKind::Result: return "Result";
    case RelationKind::Definition: return "Definition";
    case RelationKind::SimilarTo: return "SimilarTo";
  }
  return "?";
}

std::string_view relation_label(RelationKind kind) {
  switch (kind) {
    case RelationKind::Attribute: return "an attribute";
    case RelationKind::Association: return "an association";
    case RelationKind::PartOf: return "a part of";
    case RelationKind::KindOf: return "a kind of";
    case RelationKind::Cause: return "an initial cause";
    case RelationKind::Result: return "a result";
    case RelationKind::Definition: return "a definition";
    case RelationKind::SimilarTo: return "similar to";
  }
  return "?";
}

KnowledgeMap KnowledgeMap::build(std::string course_id, std::vector<KnowledgeUnit> units,
                                 std::vector<SemanticEdge> edges) {
  KnowledgeMap km;
  km.course_id_ = std::move(course_id);
  km.units_ = std::move(units);
  km.edges_ = std::move(edges);

  for (std::size_t i = 0; i < km.units_.size(); ++i) {
    const KnowledgeUnit& u = km.units_[i];
    if (u.id.empty()) throw Error(Errc::ValidationError, "unit with empty id");
    if (u.name.empty()) throw Error(Errc::ValidationError, "unit '" + u.id + "' has empty name");
    if (!km.index_.emplace(u.id, i).second) {
      throw Error(Errc::ValidationError, "duplicate unit id '" + u.id + "'");
    }
  }

  std::set<SemanticEdge> seen;
  for (std::size_t i = 0; i < km.edges_.size(); ++i) {
    const SemanticEdge& e = km.edges_[i];
    if (!km.has_unit(e.head)) {
      throw Error(Errc::ValidationError, "edge references missing unit '" + e.head + "'");
    }
    if (!km.has_unit(e.tail)) {
      throw Error(Errc::ValidationError, "edge references missing unit '" + e.tail + "'");
    }
    if (e.head == e.tail) {
      throw Error(Errc::ValidationError, "self-loop on unit '" + e.head + "'");
    }
    if (!seen.insert(e).second) {
      throw Error(Errc::ValidationError,
                  "duplicate edge (" + e.head + ", " + std::string(relation_label(e.relation)) +
                      ", " + e.tail + ")");
    }
    km.out_edges_[e.head].push_back(i);
    km.in_edges_[e.tail].push_back(i);
  }
  return km;
}

const KnowledgeUnit& KnowledgeMap::unit(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(Errc::UnknownUnit, "unknown unit '" + id + "'");
  return units_[it->second];
}

std::string KnowledgeMap::find_cku(const std::string& core_item) const {
  const std::string key = normalize_term(core_item);
  if (key.empty()) throw Error(Errc::NotFound, "empty core item");
  std::vector<std::string> matches;
  for (const KnowledgeUnit& u : units_) {
    if (normalize_term(u.core_term) == key) matches.push_back(u.id);
  }
  if (matches.empty()) {
    throw Error(Errc::NotFound, "no unit with core term '" + core_item + "'");
  }
  if (matches.size() > 1) {
    std::string list;
    for (const auto& id : matches) list += (list.empty() ? "" : ", ") + id;
    throw Error(Errc::Ambiguous, "core term '" + core_item + "' matches units: " + list);
  }
  return matches.front();
}

std::set<std::string> KnowledgeMap::neighbors(const std::string& id, RelationSet kinds,
                                              Direction direction) const {
  if (!has_unit(id)) throw Error(Errc::UnknownUnit, "unknown unit '" + id + "'");
  std::set<std::string> result;
  if (direction == Direction::Out || direction == Direction::Both) {
    if (auto it = out_edges_.find(id); it != out_edges_.end()) {
      for (std::size_t i : it->second) {
        if (kinds.contains(edges_[i].relation)) result.insert(edges_[i].tail);
      }
    }
  }
  if (direction == Direction::In || direction == Direction::Both) {
    if (auto it = in_edges_.find(id); it != in_edges_.end()) {
      for (std::size_t i : it->second) {
        if (kinds.contains(edges_[i].relation)) result.insert(edges_[i].head);
      }
    }
  }
  return result;
}

bool operator==(const KnowledgeMap& a, const KnowledgeMap& b) {
  if (a.course_id() != b.course_id()) return false;
  auto unit_key = [](const KnowledgeUnit& u) { return std::tie(u.id, u.name, u.content, u.core_term); };
  std::vector<KnowledgeUnit> ua = a.units(), ub = b.units();
  std::sort(ua.begin(), ua.end(), [&](auto& x, auto& y) { return unit_key(x) < unit_key(y); });
  std::sort(ub.begin(), ub.end(), [&](auto& x, auto& y) { return unit_key(x) < unit_key(y); });
  if (ua != ub) return false;
  std::vector<SemanticEdge> ea = a.edges(), eb = b.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

namespace {

using nlohmann::json;

std::string require_string(const json& obj, const char* field, const char* where) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw Error(Errc::ParseError, std::string("missing or non-string '") + field + "' in " + where);
  }
  return it->get<std::string>();
}

std::string optional_string(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return "";
  if (!it->is_string()) throw Error(Errc::ParseError, std::string("non-string '") + field + "'");
  return it->get<std::string>();
}

}  // namespace

KnowledgeMap load_km(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed KM document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("units") || !doc["units"].is_array() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(Errc::ParseError, "KM document must be {course_id, units: [], edges: []}");
  }

  std::vector<KnowledgeUnit> units;
  for (const json& ju : doc["units"]) {
    if (!ju.is_object()) throw Error(Errc::ParseError, "unit entry is not an object");
    units.push_back(KnowledgeUnit{require_string(ju, "id", "unit"), require_string(ju, "name", "unit"),
                                  optional_string(ju, "content"), optional_string(ju, "core_term")});
  }

  std::vector<SemanticEdge> edges;
  for (const json& je : doc["edges"]) {
    if (!je.is_object()) throw Error(Errc::ParseError, "edge entry is not an object");
    const std::string label = require_string(je, "relation", "edge");
    RelationKind kind;
    try {
      kind = normalize_relation(label);
    } catch (const Error&) {
      throw Error(Errc::ValidationError, "unknown relation label '" + label + "'");
    }
    edges.push_back(SemanticEdge{require_string(je, "head", "edge"), kind,
                                 require_string(je, "tail", "edge")});
  }

  return KnowledgeMap::build(optional_string(doc, "course_id"), std::move(units), std::move(edges));
}

KnowledgeMap load_km_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open KM file '" + path + "'");
  return load_km(in);
}

void save_km(const KnowledgeMap& km, std::ostream& out) {
  json doc;
  doc["course_id"] = km.course_id();
  doc["units"] = json::array();
  for (const KnowledgeUnit& u : km.units()) {
    doc["units"].push_back(
        {{"id", u.id}, {"name", u.name}, {"content", u.content}, {"core_term", u.core_term}});
  }
  doc["edges"] = json::array();
  for (const SemanticEdge& e : km.edges()) {
    doc["edges"].push_back(
        {{"head", e.head}, {"relation", std::string(relation_label(e.relation))}, {"tail", e.tail}});
  }
  out << doc.dump(2) << '\n';
}

void save_km_file(const KnowledgeMap& km, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write KM file '" + path + "'");
  save_km(km, out);
}

}  // namespace cogmine
