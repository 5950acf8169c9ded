#include "hcg/experiment.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "hcg/hypergraph.hpp"

using namespace hcg;

TEST_CASE("per-trial seeds are frozen") {
  CHECK(trial_seed(42, 0, 5) == 16907424079388093198ULL);
  CHECK(trial_seed(42, 1, 5) == 12302067199568664095ULL);
  CHECK(trial_seed(7, 3, 1) == 17224168618335850599ULL);

  // every argument participates in the mix
  std::set<uint64_t> seen;
  for (uint64_t m : {0ULL, 1ULL, 42ULL})
    for (uint64_t t : {0ULL, 1ULL, 2ULL})
      for (uint64_t q : {1ULL, 2ULL, 3ULL}) seen.insert(trial_seed(m, t, q));
  CHECK(seen.size() == 27);
}

TEST_CASE("trial records replay byte for byte") {
  const auto h = generate_random(30, 3, 5.0, 3);
  ExperimentConfig cfg;
  cfg.n = 30;
  cfg.k = 3;
  cfg.d = 5.0;
  cfg.q_lo = cfg.q_hi = 3;
  cfg.alice = "greedy";
  cfg.bob = "mirror";
  cfg.trials = 4;
  cfg.seed = 42;
  cfg.trace = true;

  const auto r1 = run_trial(h, cfg, 3, 2);
  const auto r2 = run_trial(h, cfg, 3, 2);
  const std::string j1 = trial_record_json(r1);
  CHECK(j1 == trial_record_json(r2));
  CHECK(j1.back() == '\n');

  CHECK(r1.seed == trial_seed(42, 2, 3));
  CHECK((r1.winner == 'A' || r1.winner == 'B'));
  CHECK_FALSE(r1.forfeit);
  CHECK_FALSE(r1.trace.empty());

  const auto j = nlohmann::json::parse(j1);
  CHECK(j.at("trial") == 2);
  CHECK(j.at("seed") == r1.seed);
  CHECK(j.at("config").at("n") == 30);
  CHECK(j.at("config").at("q") == 3);
  CHECK(j.at("config").at("alice") == "greedy");
  CHECK(j.contains("trace"));
  CHECK(j.contains("dead_vertex") == (r1.winner == 'B'));
}

TEST_CASE("hand-built record serialises to pinned bytes") {
  TrialRecord r;
  r.config.n = 3;
  r.config.k = 3;
  r.config.d = 1.5;
  r.config.alice = "greedy";
  r.config.bob = "mirror";
  r.config.trials = 2;
  r.config.seed = 9;
  r.config.trace = false;
  r.trial = 1;
  r.q = 2;
  r.seed = 123;
  r.winner = 'B';
  r.rounds = 4;
  r.dead_vertex = 7;
  r.forfeit = true;
  r.forfeit_reason = "illegal move";

  const std::string expected =
      "{\"config\":{\"n\":3,\"k\":3,\"d\":1.5,\"q\":2,\"alice\":\"greedy\","
      "\"bob\":\"mirror\",\"trials\":2,\"seed\":9,\"trace\":false},"
      "\"trial\":1,\"seed\":123,\"winner\":\"B\",\"rounds\":4,\"dead_vertex\":7,"
      "\"forfeit\":true,\"forfeit_reason\":\"illegal move\","
      "\"decomposition_built\":false,\"max_phi_colored_neighbors\":0,"
      "\"fallback_colorings\":0}\n";
  CHECK(trial_record_json(r) == expected);
}

TEST_CASE("instrumentation fields are present for every strategy") {
  // A 4-uniform game keeps the two-phase strategy in its greedy phase, so
  // the instrumentation stays zeroed but still serialises.
  const auto h = generate_random(12, 4, 3.0, 1);
  ExperimentConfig cfg;
  cfg.n = 12;
  cfg.k = 4;
  cfg.d = 3.0;
  cfg.alice = "two_phase";
  cfg.bob = "uniform";
  cfg.seed = 5;

  const auto r = run_trial(h, cfg, 8, 0);
  CHECK_FALSE(r.decomposition_built);
  CHECK(r.max_phi_colored_neighbors == 0);
  CHECK(r.fallback_colorings == 0);

  const auto j = nlohmann::json::parse(trial_record_json(r));
  CHECK(j.at("decomposition_built") == false);
  CHECK(j.at("max_phi_colored_neighbors") == 0);
  CHECK(j.at("fallback_colorings") == 0);
  CHECK_FALSE(j.contains("trace"));
}

TEST_CASE("unknown strategy names are rejected") {
  const auto h = make_hypergraph(3, 3, {{0, 1, 2}});
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.alice = "nope";
  CHECK_THROWS_AS(run_trial(h, cfg, 2, 0), std::invalid_argument);
}

TEST_CASE("sweep over a single edge") {
  // One edge, three vertices: with q = 1 the third vertex always dies, and
  // with q >= 2 it can never be blocked on both colours.
  const auto h = make_hypergraph(3, 3, {{0, 1, 2}});
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.k = 3;
  cfg.q_lo = 1;
  cfg.q_hi = 3;
  cfg.alice = "greedy";
  cfg.bob = "mirror";
  cfg.trials = 6;
  cfg.seed = 11;

  const auto rows = run_sweep(h, cfg);
  REQUIRE(rows.size() == 3);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].q == cfg.q_lo + i);
    CHECK(rows[i].trials == 6);
    CHECK(rows[i].win_rate ==
          static_cast<double>(rows[i].a_wins) / static_cast<double>(rows[i].trials));
  }
  CHECK(rows[0].a_wins == 0);
  CHECK(rows[1].a_wins == 6);
  CHECK(rows[2].a_wins == 6);

  const auto again = run_sweep(h, cfg);
  REQUIRE(again.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(again[i].a_wins == rows[i].a_wins);
    CHECK(again[i].win_rate == rows[i].win_rate);
  }
}

TEST_CASE("sweep csv formatting") {
  const std::vector<SweepRow> rows = {
      {1, 4, 0, 0.0}, {2, 4, 3, 0.75}, {5, 3, 1, 1.0 / 3.0}, {6, 2, 2, 1.0}};
  CHECK(sweep_csv(rows) ==
        "q,trials,a_wins,win_rate\n"
        "1,4,0,0\n"
        "2,4,3,0.75\n"
        "5,3,1,0.333333\n"
        "6,2,2,1\n");
  CHECK(sweep_csv({}) == "q,trials,a_wins,win_rate\n");
}
