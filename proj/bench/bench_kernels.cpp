// Times the serial reference against the OpenMP flavor of the two
// data-parallel kernels: per-learner coverage analysis and GSP support
// counting. Usage: cogmine_bench [learners] [repeats]

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "cogmine/pipeline.hpp"
#include "cogmine/simulator.hpp"

using namespace cogmine;

namespace {

double seconds_for(const std::function<void()>& body, int repeats) {
  double best = 1e100;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed < best) best = elapsed;
  }
  return best;
}

KnowledgeMap fixture() {
  std::vector<KnowledgeUnit> units;
  std::vector<SemanticEdge> edges;
  auto add = [&](const std::string& id) { units.push_back({id, id, "", id}); };
  add("left");
  add("right");
  // A wide comparison fixture keeps each learner sequence non-trivial.
  for (int i = 0; i < 12; ++i) {
    const std::string id = "l" + std::to_string(i);
    add(id);
    edges.push_back({"left", RelationKind::Attribute, id});
  }
  for (int i = 0; i < 12; ++i) {
    const std::string id = "r" + std::to_string(i);
    add(id);
    edges.push_back({"right", RelationKind::Attribute, id});
  }
  add("bridge1");
  add("bridge2");
  edges.push_back({"left", RelationKind::Association, "bridge1"});
  edges.push_back({"right", RelationKind::Association, "bridge1"});
  edges.push_back({"left", RelationKind::Association, "bridge2"});
  edges.push_back({"right", RelationKind::Association, "bridge2"});
  for (int i = 0; i < 8; ++i) {
    const std::string id = "c" + std::to_string(i);
    add(id);
    edges.push_back({i % 2 ? "bridge1" : "bridge2", RelationKind::Attribute, id});
  }
  return KnowledgeMap::build("bench", std::move(units), std::move(edges));
}

}  // namespace

int main(int argc, char** argv) {
  const int learners = argc > 1 ? std::atoi(argv[1]) : 20000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  const KnowledgeMap km = fixture();
  SimConfig config;
  config.core_items = {"left", "right"};
  config.learner_count = learners;
  config.mix = {{Archetype::DCD, Rational(3, 10)},
                {Archetype::CDD, Rational(3, 10)},
                {Archetype::DDC, Rational(3, 10)},
                {Archetype::Noise, Rational(1, 10)}};
  config.seed = 1;
  config.interleave_prob = Rational(1, 10);

  const auto las = build_las(filter_events(simulate(km, config)).events, km, "Q1").sequences;
  const auto tracked = track_comparison(comparison_triple(km, "left", "right", 2), km);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both flavors run serially\n");
#endif
  std::printf("workload: %zu learner sequences, %d repeats (best time shown)\n\n", las.size(),
              repeats);

  std::vector<LearnerAnalysis> analyses;
  const double analyze_serial = seconds_for(
      [&] { analyses = analyze_learners(las, tracked, Rational(3, 5), ExecMode::Serial); },
      repeats);
  const double analyze_parallel = seconds_for(
      [&] { analyses = analyze_learners(las, tracked, Rational(3, 5), ExecMode::Parallel); },
      repeats);
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", "analyze_learners", analyze_serial * 1e3,
              analyze_parallel * 1e3, analyze_serial / analyze_parallel);

  SequenceDatabase db;
  for (const LearnerAnalysis& a : analyses) db.sequences.push_back({a.las.user_id, a.encoded});

  std::vector<FrequentPattern> patterns;
  const double gsp_serial =
      seconds_for([&] { patterns = gsp(db, Rational(1, 10), ExecMode::Serial); }, repeats);
  const double gsp_parallel =
      seconds_for([&] { patterns = gsp(db, Rational(1, 10), ExecMode::Parallel); }, repeats);
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", "gsp support counting", gsp_serial * 1e3,
              gsp_parallel * 1e3, gsp_serial / gsp_parallel);

  std::printf("\ncolumns: kernel, serial, parallel, speedup; %zu patterns mined\n",
              patterns.size());
  return 0;
}
