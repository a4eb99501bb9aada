#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cogmine/error.hpp"

namespace cogmine {

// Canonical semantic relation kinds a knowledge-map edge can carry.
enum class RelationKind : std::uint8_t {
  Attribute,
  Association,
  PartOf,
  KindOf,
  Cause,
  Result,
  Definition,
  SimilarTo,
};

inline constexpr int kRelationKindCount = 8;

// Lowercases and collapses whitespace: "  ARRAY  Type " -> "array type".
std::string normalize_term(std::string_view text);

// Resolves a surface label ("a part of", "A Kind Of", "a type of", ...) to
// its canonical kind via a case-insensitive, whitespace-normalized alias
// table. Canonical kind names resolve to themselves. Throws
// Errc::UnknownRelation for labels outside the table.
RelationKind normalize_relation(std::string_view label);

std::string_view relation_name(RelationKind kind);   // "KindOf"
std::string_view relation_label(RelationKind kind);  // "a kind of" (serialized form)

// Bitmask over relation kinds; restricts traversals.
class RelationSet {
 public:
  constexpr RelationSet() = default;
  constexpr RelationSet(std::initializer_list<RelationKind> kinds) {
    for (RelationKind k : kinds) bits_ |= bit(k);
  }
  static constexpr RelationSet all() {
    RelationSet s;
    s.bits_ = (1u << kRelationKindCount) - 1;
    return s;
  }
  constexpr bool contains(RelationKind k) const { return (bits_ & bit(k)) != 0; }

 private:
  static constexpr unsigned bit(RelationKind k) { return 1u << static_cast<unsigned>(k); }
  unsigned bits_ = 0;
};

enum class Direction { Out, In, Both };

// Smallest integral learning object; a node of the knowledge map.
struct KnowledgeUnit {
  std::string id;
  std::string name;
  std::string content;
  std::string core_term;

  friend bool operator==(const KnowledgeUnit&, const KnowledgeUnit&) = default;
};

// (head ku, semantic relation, tail ku) triple.
struct SemanticEdge {
  std::string head;
  RelationKind relation{};
  std::string tail;

  friend auto operator<=>(const SemanticEdge&, const SemanticEdge&) = default;
};

// Directed graph of knowledge units with typed semantic edges. Immutable
// after construction; safe to share read-only across workers.
class KnowledgeMap {
 public:
  KnowledgeMap() = default;

  // Validates and indexes the parts. Throws Errc::ValidationError on a
  // duplicate unit id, empty unit name, dangling edge endpoint, self-loop,
  // or duplicate (head, relation, tail) triple.
  static KnowledgeMap build(std::string course_id, std::vector<KnowledgeUnit> units,
                            std::vector<SemanticEdge> edges);

  const std::string& course_id() const { return course_id_; }
  const std::vector<KnowledgeUnit>& units() const { return units_; }
  const std::vector<SemanticEdge>& edges() const { return edges_; }

  bool has_unit(const std::string& id) const { return index_.count(id) != 0; }
  const KnowledgeUnit& unit(const std::string& id) const;  // Errc::UnknownUnit
  const std::string& unit_name(const std::string& id) const { return unit(id).name; }

  // Resolves a question's core item to the unique unit whose core term
  // matches after normalization. Throws Errc::NotFound / Errc::Ambiguous.
  std::string find_cku(const std::string& core_item) const;

  // Units adjacent to `id` through an edge of one of `kinds`, in the given
  // direction. Set semantics; deterministic.
  std::set<std::string> neighbors(const std::string& id, RelationSet kinds,
                                  Direction direction) const;

 private:
  std::string course_id_;
  std::vector<KnowledgeUnit> units_;
  std::vector<SemanticEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::vector<std::size_t>> out_edges_;
  std::unordered_map<std::string, std::vector<std::size_t>> in_edges_;
};

// Set equality on course id, units, and edges (order-insensitive).
bool operator==(const KnowledgeMap& a, const KnowledgeMap& b);

// KM file format: JSON {course_id, units: [{id, name, content, core_term}],
// edges: [{head, relation, tail}]} with relation as a surface label.
KnowledgeMap load_km(std::istream& in);
KnowledgeMap load_km_file(const std::string& path);
void save_km(const KnowledgeMap& km, std::ostream& out);
void save_km_file(const KnowledgeMap& km, const std::string& path);

}  // namespace cogmine
