#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace cogmine;
using cogtest::throws_with;

TEST_CASE("relation labels normalize to canonical kinds") {
  CHECK(normalize_relation("a part of") == RelationKind::PartOf);
  CHECK(normalize_relation("A Kind Of") == RelationKind::KindOf);
  CHECK(normalize_relation("a type of") == RelationKind::KindOf);
  CHECK(normalize_relation("an initial cause") == RelationKind::Cause);
  CHECK(normalize_relation("a result") == RelationKind::Result);
  CHECK(normalize_relation("  an   attribute ") == RelationKind::Attribute);
  CHECK(throws_with(Errc::UnknownRelation, [] { normalize_relation("friend of"); }));
}

TEST_CASE("normalization is idempotent on canonical names and labels") {
  for (int i = 0; i < kRelationKindCount; ++i) {
    const RelationKind kind = static_cast<RelationKind>(i);
    CHECK(normalize_relation(relation_name(kind)) == kind);
    CHECK(normalize_relation(relation_label(kind)) == kind);
  }
}

TEST_CASE("load_km accepts a well-formed document") {
  std::istringstream doc(R"({
    "course_id": "demo",
    "units": [
      {"id": "a", "name": "A", "core_term": "a"},
      {"id": "b", "name": "B", "core_term": "b"},
      {"id": "c", "name": "C", "core_term": "c"}
    ],
    "edges": [
      {"head": "a", "relation": "an attribute", "tail": "b"},
      {"head": "b", "relation": "a kind of", "tail": "c"}
    ]
  })");
  const KnowledgeMap km = load_km(doc);
  CHECK(km.units().size() == 3);
  CHECK(km.edges().size() == 2);
  CHECK(km.edges()[1].relation == RelationKind::KindOf);
}

TEST_CASE("load_km rejects invalid documents") {
  auto load = [](const char* text) {
    std::istringstream in(text);
    return load_km(in);
  };
  CHECK(throws_with(Errc::ParseError, [&] { load("not json at all"); }));
  CHECK(throws_with(Errc::ParseError, [&] { load(R"({"units": 5, "edges": []})"); }));
  // Dangling endpoint.
  CHECK(throws_with(Errc::ValidationError, [&] {
    load(R"({"units": [{"id": "a", "name": "A"}],
             "edges": [{"head": "a", "relation": "an attribute", "tail": "ghost"}]})");
  }));
  // Duplicate unit id.
  CHECK(throws_with(Errc::ValidationError, [&] {
    load(R"({"units": [{"id": "a", "name": "A"}, {"id": "a", "name": "A2"}], "edges": []})");
  }));
  // Unknown relation label.
  CHECK(throws_with(Errc::ValidationError, [&] {
    load(R"({"units": [{"id": "a", "name": "A"}, {"id": "b", "name": "B"}],
             "edges": [{"head": "a", "relation": "friend of", "tail": "b"}]})");
  }));
  // Self loops are rejected.
  CHECK(throws_with(Errc::ValidationError, [&] {
    load(R"({"units": [{"id": "a", "name": "A"}],
             "edges": [{"head": "a", "relation": "an attribute", "tail": "a"}]})");
  }));
  // Duplicate triple.
  CHECK(throws_with(Errc::ValidationError, [&] {
    load(R"({"units": [{"id": "a", "name": "A"}, {"id": "b", "name": "B"}],
             "edges": [{"head": "a", "relation": "an attribute", "tail": "b"},
                       {"head": "a", "relation": "an attribute", "tail": "b"}]})");
  }));
}

TEST_CASE("empty unit and edge lists make a valid empty map") {
  std::istringstream doc(R"({"course_id": "x", "units": [], "edges": []})");
  const KnowledgeMap km = load_km(doc);
  CHECK(km.units().empty());
  CHECK(km.edges().empty());
}

TEST_CASE("parallel edges of different kinds between one pair are allowed") {
  std::vector<KnowledgeUnit> units{{"a", "A", "", "a"}, {"b", "B", "", "b"}};
  std::vector<SemanticEdge> edges{{"a", RelationKind::Attribute, "b"},
                                  {"a", RelationKind::Association, "b"}};
  const KnowledgeMap km = KnowledgeMap::build("x", units, edges);
  CHECK(km.edges().size() == 2);
}

TEST_CASE("save/load round trip preserves the map") {
  const KnowledgeMap km = cogtest::paper_km();
  std::stringstream buffer;
  save_km(km, buffer);
  const KnowledgeMap reloaded = load_km(buffer);
  CHECK(reloaded == km);
}

TEST_CASE("find_cku resolves normalized core items") {
  const KnowledgeMap km = cogtest::paper_km();
  CHECK(km.find_cku("array") == "array");
  CHECK(km.find_cku("ARRAY  ") == "array");
  CHECK(km.find_cku("Pointer") == "pointer");
  CHECK(throws_with(Errc::NotFound, [&] { km.find_cku("vector"); }));
}

TEST_CASE("find_cku refuses to guess between duplicates") {
  std::vector<KnowledgeUnit> units{{"a1", "A1", "", "same"}, {"a2", "A2", "", "Same "}};
  const KnowledgeMap km = KnowledgeMap::build("x", units, {});
  CHECK(throws_with(Errc::Ambiguous, [&] { km.find_cku("same"); }));
}

TEST_CASE("neighbors filters by kind and direction") {
  std::vector<KnowledgeUnit> units{
      {"a", "A", "", "a"}, {"d1", "D1", "", "d1"}, {"c1", "C1", "", "c1"}, {"x", "X", "", "x"}};
  std::vector<SemanticEdge> edges{{"a", RelationKind::Attribute, "d1"},
                                  {"a", RelationKind::Association, "c1"},
                                  {"x", RelationKind::Attribute, "a"}};
  const KnowledgeMap km = KnowledgeMap::build("x", units, edges);

  CHECK(km.neighbors("d1", {RelationKind::KindOf}, Direction::Both).empty());
  CHECK(km.neighbors("a", {RelationKind::Attribute}, Direction::Out) ==
        std::set<std::string>{"d1"});
  CHECK(km.neighbors("a", {RelationKind::Attribute, RelationKind::Association}, Direction::Both) ==
        std::set<std::string>{"d1", "c1", "x"});
  CHECK(km.neighbors("a", {RelationKind::Attribute}, Direction::In) == std::set<std::string>{"x"});
  CHECK(throws_with(Errc::UnknownUnit,
                             [&] { km.neighbors("ghost", RelationSet::all(), Direction::Out); }));
}

TEST_CASE("neighbors(both) is the union of out and in") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const KnowledgeMap km = cogtest::random_km(rng, 12);
    const RelationSet kinds =
        (trial % 2) ? RelationSet::all()
                    : RelationSet{cogtest::random_kind(rng), cogtest::random_kind(rng)};
    for (const KnowledgeUnit& u : km.units()) {
      const auto out = km.neighbors(u.id, kinds, Direction::Out);
      const auto in = km.neighbors(u.id, kinds, Direction::In);
      std::set<std::string> both = out;
      both.insert(in.begin(), in.end());
      CHECK(km.neighbors(u.id, kinds, Direction::Both) == both);
    }
  }
}

TEST_CASE("random maps survive the round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const KnowledgeMap km = cogtest::random_km(rng, 15);
    std::stringstream buffer;
    save_km(km, buffer);
    CHECK(load_km(buffer) == km);
  }
}
