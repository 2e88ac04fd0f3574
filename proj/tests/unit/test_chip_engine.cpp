#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace chipfire;

namespace {

const std::vector<FiringStrategy> kAllStrategies{
    FiringStrategy::min_index(), FiringStrategy::max_chips(), FiringStrategy::fifo(),
    FiringStrategy::random(1),   FiringStrategy::random(2),   FiringStrategy::random(3),
    FiringStrategy::random(4),   FiringStrategy::random(5)};

}  // namespace

TEST_CASE("termination classes") {
  auto pe = petersen().graph;
  CHECK(termination_class(pe, 14) == TerminationClass::GuaranteedTerminates);
  CHECK(termination_class(pe, 21) == TerminationClass::NeverTerminates);
  CHECK(termination_class(pe, 18) == TerminationClass::MayTerminate);
  CHECK(termination_class(pe, 15) == TerminationClass::MayTerminate);
  CHECK(termination_class(pe, 20) == TerminationClass::MayTerminate);
}

TEST_CASE("single-vertex configurations") {
  auto c = single_vertex_config(petersen().graph, 0, 14);
  CHECK(c.chips[0] == 14);
  CHECK(c.total() == 14);
  std::vector<Edge> k2{{0, 1}};
  CHECK(single_vertex_config(Graph::from_edge_list(2, k2), 1, 0).chips == std::vector<std::int64_t>{0, 0});
  CHECK(single_vertex_config(schlafli().graph, 0, 215).total() == 215);
  CHECK_THROWS_AS(single_vertex_config(petersen().graph, 10, 1), EngineError);
}

TEST_CASE("hand-traced games") {
  auto p3 = fixtures::path(3);
  auto out = play(p3, ChipConfig{{1, 0, 0}}, FiringStrategy::min_index());
  REQUIRE(out.terminated());
  CHECK(out.trace().s == 1);
  CHECK(out.trace().x == std::vector<std::int64_t>{1, 0, 0});
  CHECK(out.trace().final.chips == std::vector<std::int64_t>{0, 1, 0});

  std::vector<Edge> k2{{0, 1}};
  auto k2g = Graph::from_edge_list(2, k2);
  auto div = play(k2g, ChipConfig{{1, 0}}, FiringStrategy::min_index());
  REQUIRE_FALSE(div.terminated());
  CHECK(div.divergence().reason == DivergenceReason::NecessaryConditionViolated);
}

TEST_CASE("Petersen with 14 chips on one vertex takes 8 moves") {
  auto g = petersen().graph;
  auto out = play(g, single_vertex_config(g, 0, 14), FiringStrategy::min_index());
  REQUIRE(out.terminated());
  CHECK(out.trace().s == 8);
  // Independent re-simulation.
  auto naive = oracle::play_naive(fixtures::adjacency_of(g), single_vertex_config(g, 0, 14).chips, 1000);
  CHECK(naive.terminated);
  CHECK(naive.x == out.trace().x);
  CHECK(naive.final == out.trace().final.chips);
}

TEST_CASE("cutoff produces ExceededCutoff") {
  auto g = petersen().graph;
  PlayOptions opts;
  opts.cutoff = 3;
  auto out = play(g, single_vertex_config(g, 0, 14), FiringStrategy::min_index(), opts);
  REQUIRE_FALSE(out.terminated());
  CHECK(out.divergence().reason == DivergenceReason::ExceededCutoff);
  CHECK(out.divergence().moves_played == 3);

  opts.cutoff = 8;  // exactly enough
  CHECK(play(g, single_vertex_config(g, 0, 14), FiringStrategy::min_index(), opts).terminated());
}

TEST_CASE("non-terminating games in the MayTerminate band hit the default cutoff") {
  // C_4 with 4 chips: N = 2m - n = 4 and every vertex can keep firing.
  auto g = cycle(4).graph;
  auto out = play(g, ChipConfig{{1, 1, 1, 1}}, FiringStrategy::fifo());
  CHECK(out.terminated());  // nobody can fire
  auto spin = play(g, ChipConfig{{2, 1, 1, 0}}, FiringStrategy::min_index());
  REQUIRE_FALSE(spin.terminated());
  CHECK(spin.divergence().reason == DivergenceReason::ExceededCutoff);
  CHECK(spin.cutoff_used() == default_cutoff(g, 4));
}

TEST_CASE("input validation") {
  auto g = petersen().graph;
  CHECK_THROWS_AS(play(g, ChipConfig{{1, 2}}, FiringStrategy::min_index()), EngineError);
  std::vector<Edge> e{{0, 1}};
  auto disconnected = Graph::from_edge_list(3, e);
  CHECK_THROWS_AS(play(disconnected, ChipConfig{{0, 0, 0}}, FiringStrategy::min_index()), GraphError);
}

TEST_CASE("record sequence") {
  auto g = petersen().graph;
  PlayOptions opts;
  opts.record_sequence = true;
  auto out = play(g, single_vertex_config(g, 0, 14), FiringStrategy::fifo(), opts);
  REQUIRE(out.terminated());
  REQUIRE(out.trace().fired_sequence);
  CHECK(static_cast<std::int64_t>(out.trace().fired_sequence->size()) == out.trace().s);
  CHECK(out.trace().fired_sequence->front() == 0);
}

TEST_CASE("confluence on the exemplar games") {
  auto pe = petersen().graph;
  auto rep = confluence_check(pe, single_vertex_config(pe, 0, 14), kAllStrategies);
  CHECK(rep.agree);
  CHECK(rep.traces.front().s == 8);

  auto p3 = fixtures::path(3);
  auto rp3 = confluence_check(p3, ChipConfig{{1, 0, 0}}, kAllStrategies);
  CHECK(rp3.agree);
  CHECK(rp3.traces.front().s == 1);

  auto pa = paley(109).graph;
  auto rpa = confluence_check(pa, single_vertex_config(pa, 0, 2900), kAllStrategies);
  CHECK(rpa.agree);
  CHECK(rpa.traces.front().s == 53);

  CHECK_THROWS_AS(confluence_check(pe, single_vertex_config(pe, 0, 14), std::vector<FiringStrategy>{FiringStrategy::fifo()}),
                  std::invalid_argument);
  PlayOptions tiny;
  tiny.cutoff = 2;
  CHECK_THROWS_AS(confluence_check(pe, single_vertex_config(pe, 0, 14), kAllStrategies, tiny), EngineError);
}

TEST_CASE("abelian property, conservation and identities on random games") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::int64_t n = 4 + static_cast<std::int64_t>(seed % 25);
    auto g = gnp(n, 0.2 + 0.02 * static_cast<double>(seed % 15), seed + 100).graph;
    const auto m = static_cast<std::int64_t>(g.edge_count());
    std::uniform_int_distribution<std::int64_t> pickN(0, m - 1);
    ChipConfig a{oracle::random_config(g.vertex_count(), pickN(rng), rng)};
    CAPTURE(seed);
    auto rep = confluence_check(g, a, kAllStrategies);
    CHECK(rep.agree);
    const auto pinv = spectral::pinv_spectral(spectral::eigendecompose(laplacian(g)));
    const auto table = best_bound(g, a.total());
    for (const auto& t : rep.traces) {
      CHECK(t.final.total() == a.total());
      CHECK(verify_firing_identity(g, t));
      CHECK(std::count(t.x.begin(), t.x.end(), 0) >= 1);
      CHECK(verify_duration_identity(g, t, pinv.ldag) < 1e-8);
      for (std::size_t i = 0; i < g.vertex_count(); ++i) CHECK(t.final.chips[i] < g.degrees()[i]);
      std::int64_t sum_x = 0;
      for (auto v : t.x) sum_x += v;
      CHECK(sum_x == t.s);
      for (const auto& b : table.all) {
        if (b.applicable) CHECK(static_cast<double>(t.s) <= b.value + 1e-9);
      }
    }
    auto naive = oracle::play_naive(fixtures::adjacency_of(g), a.chips, 1'000'000);
    CHECK(naive.s == rep.traces.front().s);
  }
}

TEST_CASE("duration identity residuals") {
  auto p3 = fixtures::path(3);
  auto out = play(p3, ChipConfig{{1, 0, 0}}, FiringStrategy::min_index());
  auto pinv = spectral::pinv_spectral(spectral::eigendecompose(laplacian(p3)));
  CHECK(verify_duration_identity(p3, out.trace(), pinv.ldag) < 1e-10);

  auto pe = petersen().graph;
  auto tp = play(pe, single_vertex_config(pe, 0, 14), FiringStrategy::min_index()).trace();
  auto ppe = spectral::pinv_spectral(spectral::eigendecompose(laplacian(pe)));
  CHECK(verify_duration_identity(pe, tp, ppe.ldag) < 1e-8);

  // Shifting every x_v by one leaves Lx unchanged but leaves no unfired vertex.
  GameTrace shifted = tp;
  for (auto& v : shifted.x) v += 1;
  CHECK(verify_firing_identity(pe, shifted));
  CHECK_THROWS_AS(verify_duration_identity(pe, shifted, ppe.ldag), EngineError);

  GameTrace forged = tp;
  forged.x[1] += 1;
  CHECK_FALSE(verify_firing_identity(pe, forged));
}

TEST_CASE("chip and strategy syntax") {
  auto g = petersen().graph;
  CHECK(parse_chip_config("single:0:14", g) == single_vertex_config(g, 0, 14));
  auto c = parse_chip_config("csv:1,0,0,0,0,0,0,0,0,2", g);
  CHECK(c.total() == 3);
  CHECK_THROWS_AS(parse_chip_config("csv:1,2", g), EngineError);
  CHECK_THROWS_AS(parse_chip_config("single:0", g), EngineError);
  CHECK_THROWS_AS(parse_chip_config("pile:3", g), EngineError);
  CHECK_THROWS_AS(parse_chip_config("csv:1,-1,0,0,0,0,0,0,0,0", g), EngineError);

  CHECK(FiringStrategy::parse("max-chips") == FiringStrategy::max_chips());
  CHECK(FiringStrategy::parse("random", 9) == FiringStrategy::random(9));
  CHECK(FiringStrategy::random(9).to_string() == "random:9");
  CHECK_THROWS_AS(FiringStrategy::parse("lifo"), EngineError);
}

TEST_CASE("strategies are deterministic") {
  auto g = schlafli().graph;
  PlayOptions opts;
  opts.record_sequence = true;
  for (const auto& s : kAllStrategies) {
    auto a = play(g, single_vertex_config(g, 3, 215), s, opts);
    auto b = play(g, single_vertex_config(g, 3, 215), s, opts);
    CHECK(*a.trace().fired_sequence == *b.trace().fired_sequence);
  }
}
