#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

using namespace cogmine;
using cogtest::throws_with;

namespace {

Submap by_kind(const std::vector<Submap>& submaps, ThinkingMapKind kind) {
  auto it = std::find_if(submaps.begin(), submaps.end(),
                         [&](const Submap& s) { return s.kind == kind; });
  REQUIRE(it != submaps.end());
  return *it;
}

void check_structure(const Submap& sub) {
  for (const std::string& cku : sub.ckus) CHECK(sub.unit_ids.count(cku) == 0);
  std::set<std::string> touched;
  for (const SemanticEdge& e : sub.edge_set) {
    touched.insert(e.head);
    touched.insert(e.tail);
  }
  for (const std::string& u : sub.unit_ids) CHECK(touched.count(u) == 1);
}

}  // namespace

TEST_CASE("bubble submap of Array has the six descriptive units") {
  const KnowledgeMap km = cogtest::paper_km();
  const auto submaps = search_single(km, "array", 2);
  const Submap& bubble = by_kind(submaps, ThinkingMapKind::Bubble);
  CHECK(bubble.unit_ids.size() == 6);
  CHECK(bubble.unit_ids == std::set<std::string>{"array_definition", "array_type", "array_name",
                                                 "two_dim_array", "array_init", "array_access"});
  // The subnode stays outside the one-hop descriptive submap.
  CHECK(bubble.unit_ids.count("two_dim_array_init") == 0);
  check_structure(bubble);
}

TEST_CASE("tree submap grows breadth-first up to k_depth") {
  std::vector<KnowledgeUnit> units{
      {"x", "X", "", "x"}, {"t1", "T1", "", "t1"}, {"t2", "T2", "", "t2"}};
  std::vector<SemanticEdge> edges{{"x", RelationKind::KindOf, "t1"},
                                  {"t1", RelationKind::KindOf, "t2"}};
  const KnowledgeMap km = KnowledgeMap::build("x", units, edges);

  const Submap& tree2 = by_kind(search_single(km, "x", 2), ThinkingMapKind::Tree);
  CHECK(tree2.unit_ids == std::set<std::string>{"t1", "t2"});
  const Submap& tree1 = by_kind(search_single(km, "x", 1), ThinkingMapKind::Tree);
  CHECK(tree1.unit_ids == std::set<std::string>{"t1"});
}

TEST_CASE("isolated cku yields all five submaps, all empty") {
  std::vector<KnowledgeUnit> units{{"lonely", "Lonely", "", "lonely"}};
  const KnowledgeMap km = KnowledgeMap::build("x", units, {});
  const auto submaps = search_single(km, "lonely", 3);
  CHECK(submaps.size() == 5);
  for (const Submap& s : submaps) {
    CHECK(s.unit_ids.empty());
    CHECK(s.edge_set.empty());
  }
}

TEST_CASE("search_single rejects bad input") {
  const KnowledgeMap km = cogtest::paper_km();
  CHECK(throws_with(Errc::UnknownUnit, [&] { search_single(km, "ghost", 1); }));
  CHECK(throws_with(Errc::OutOfRange, [&] { search_single(km, "array", 0); }));
}

TEST_CASE("connective submap of the paper fixture has five units") {
  const KnowledgeMap km = cogtest::paper_km();
  const Submap conn = search_connective(km, "array", "pointer");
  CHECK(conn.unit_ids == std::set<std::string>{"array_pointer", "pointer_array",
                                               "array_pointer_structure", "array_pointer_init",
                                               "pointer_array_usage"});
  check_structure(conn);
}

TEST_CASE("connective submap edge cases") {
  // No shared neighbor: empty connective submap.
  {
    std::vector<KnowledgeUnit> units{
        {"a", "A", "", "a"}, {"b", "B", "", "b"}, {"d", "D", "", "d"}};
    std::vector<SemanticEdge> edges{{"a", RelationKind::Attribute, "d"}};
    const KnowledgeMap km = KnowledgeMap::build("x", units, edges);
    CHECK(search_connective(km, "a", "b").unit_ids.empty());
  }
  // Shared neighbor whose only other neighbor is a cku.
  {
    std::vector<KnowledgeUnit> units{
        {"a", "A", "", "a"}, {"b", "B", "", "b"}, {"u", "U", "", "u"}};
    std::vector<SemanticEdge> edges{{"a", RelationKind::Association, "u"},
                                    {"u", RelationKind::Association, "b"}};
    const KnowledgeMap km = KnowledgeMap::build("x", units, edges);
    CHECK(search_connective(km, "a", "b").unit_ids == std::set<std::string>{"u"});
  }
  const KnowledgeMap km = cogtest::paper_km();
  CHECK(throws_with(Errc::SameUnit, [&] { search_connective(km, "array", "array"); }));
  CHECK(throws_with(Errc::UnknownUnit, [&] { search_connective(km, "array", "ghost"); }));
}

TEST_CASE("comparison triple matches the worked example and is disjoint") {
  const KnowledgeMap km = cogtest::paper_km();
  const ComparisonTriple triple = comparison_triple(km, "array", "pointer", 2);
  CHECK(triple.desc1.unit_ids.size() == 6);
  CHECK(triple.conn.unit_ids.size() == 5);
  CHECK(triple.desc2.unit_ids.size() == 5);

  for (const Submap* s : {&triple.desc1, &triple.conn, &triple.desc2}) {
    CHECK(s->unit_ids.count("array") == 0);
    CHECK(s->unit_ids.count("pointer") == 0);
    check_structure(*s);
  }
  for (const std::string& u : triple.desc1.unit_ids) {
    CHECK(triple.conn.unit_ids.count(u) == 0);
    CHECK(triple.desc2.unit_ids.count(u) == 0);
  }
  for (const std::string& u : triple.conn.unit_ids) CHECK(triple.desc2.unit_ids.count(u) == 0);
}

TEST_CASE("a unit attribute-linked to both ckus lands only in the connective submap") {
  std::vector<KnowledgeUnit> units{{"a", "A", "", "a"},
                                   {"b", "B", "", "b"},
                                   {"both", "Both", "", "both"},
                                   {"da", "DA", "", "da"},
                                   {"db", "DB", "", "db"}};
  std::vector<SemanticEdge> edges{{"a", RelationKind::Attribute, "both"},
                                  {"b", RelationKind::Attribute, "both"},
                                  {"a", RelationKind::Attribute, "da"},
                                  {"b", RelationKind::Attribute, "db"}};
  const KnowledgeMap km = KnowledgeMap::build("x", units, edges);
  const ComparisonTriple triple = comparison_triple(km, "a", "b", 1);
  CHECK(triple.conn.unit_ids.count("both") == 1);
  CHECK(triple.desc1.unit_ids == std::set<std::string>{"da"});
  CHECK(triple.desc2.unit_ids == std::set<std::string>{"db"});
}

TEST_CASE("without overlap the descriptive submaps equal the bubble submaps") {
  const KnowledgeMap km = cogtest::paper_km();
  const ComparisonTriple triple = comparison_triple(km, "array", "pointer", 2);
  const Submap& bubble1 = by_kind(search_single(km, "array", 2), ThinkingMapKind::Bubble);
  CHECK(triple.desc1.unit_ids == bubble1.unit_ids);
}

TEST_CASE("single search at depth 1 equals a plain adjacency scan") {
  std::mt19937_64 rng(23);
  const RelationSet kind_of[5] = {{RelationKind::Attribute},
                                  {RelationKind::Association},
                                  {RelationKind::Cause, RelationKind::Result},
                                  {RelationKind::KindOf},
                                  {RelationKind::PartOf}};
  for (int trial = 0; trial < 40; ++trial) {
    const KnowledgeMap km = cogtest::random_km(rng);
    const std::string cku = km.units()[rng() % km.units().size()].id;
    const auto submaps = search_single(km, cku, 1);
    for (std::size_t i = 0; i < submaps.size(); ++i) {
      CHECK(submaps[i].unit_ids == cogtest::bfs_reference(km, cku, kind_of[i], 1));
    }
  }
}

TEST_CASE("tree and brace growth is monotone in k_depth") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const KnowledgeMap km = cogtest::random_km(rng);
    const std::string cku = km.units()[rng() % km.units().size()].id;
    for (int k = 1; k <= 3; ++k) {
      const auto lo = search_single(km, cku, k);
      const auto hi = search_single(km, cku, k + 1);
      for (std::size_t i = 0; i < lo.size(); ++i) {
        CHECK(std::includes(hi[i].unit_ids.begin(), hi[i].unit_ids.end(),
                            lo[i].unit_ids.begin(), lo[i].unit_ids.end()));
      }
    }
  }
}

TEST_CASE("results do not depend on unit or edge insertion order") {
  std::mt19937_64 rng(31);
  const KnowledgeMap km = cogtest::paper_km();
  std::vector<KnowledgeUnit> units = km.units();
  std::vector<SemanticEdge> edges = km.edges();
  std::shuffle(units.begin(), units.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  const KnowledgeMap shuffled = KnowledgeMap::build(km.course_id(), units, edges);

  const ComparisonTriple a = comparison_triple(km, "array", "pointer", 2);
  const ComparisonTriple b = comparison_triple(shuffled, "array", "pointer", 2);
  CHECK(a.desc1.unit_ids == b.desc1.unit_ids);
  CHECK(a.conn.unit_ids == b.conn.unit_ids);
  CHECK(a.desc2.unit_ids == b.desc2.unit_ids);
  CHECK(a.conn.edge_set == b.conn.edge_set);
}

TEST_CASE("DOT export styles the ckus") {
  const KnowledgeMap km = cogtest::paper_km();
  const Submap conn = search_connective(km, "array", "pointer");
  const std::string dot = to_dot(conn, km, "conn");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("fillcolor=gold") != std::string::npos);
  CHECK(dot.find("Array Pointer") != std::string::npos);
}

TEST_CASE("submap JSON export mirrors the KM format plus kind and ckus") {
  const KnowledgeMap km = cogtest::paper_km();
  const Submap conn = search_connective(km, "array", "pointer");
  const nlohmann::json doc = submap_to_json(conn, km);
  CHECK(doc["kind"] == "Connective");
  CHECK(doc["ckus"] == nlohmann::json::array({"array", "pointer"}));
  CHECK(doc["units"].size() == 7);  // 2 ckus + 5 connective units
  CHECK(doc["edges"].size() == conn.edge_set.size());
}
