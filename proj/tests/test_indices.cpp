/*
 * Copyright 2026 The vpow Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vpow/errors.hpp"
#include "vpow/indices.hpp"

using vpow::Rational;

namespace {

std::vector<Rational> R(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Rational> out;
  for (auto [n, d] : values) {
    Rational r(n, d);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::set<std::string> yes_sets(const vpow::GeneralVotingGame& g, const std::vector<vpow::MinimumWinningEvent>& events) {
  std::set<std::string> out;
  for (const auto& e : events) {
    std::string s;
    for (auto p : e.supporters) s += g.players[p].id;
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("Shapley-Shubik permutation values") {
  CHECK(vpow::shapley_shubik_permutation(fixture::committee(), 0) ==
        R({{3, 5}, {1, 10}, {1, 10}, {1, 10}, {1, 10}}));
  CHECK(vpow::shapley_shubik_permutation(fixture::weighted({1, 1, 1}, 2), 0) == R({{1, 3}, {1, 3}, {1, 3}}));
  CHECK(vpow::shapley_shubik_permutation(fixture::weighted({1, 0, 0}, 1), 0) == R({{1, 1}, {0, 1}, {0, 1}}));
}

TEST_CASE("Shapley-Shubik domain") {
  auto ternary = fixture::load("abstention");
  CHECK_THROWS_AS(vpow::shapley_shubik_permutation(ternary, 0), vpow::NotApplicableError);
  CHECK_THROWS_AS(vpow::shapley_shubik_permutation(fixture::weighted(std::vector<int>(11, 1), 6), 0),
                  vpow::NotApplicableError);
}

TEST_CASE("Banzhaf combination values") {
  const auto committee = vpow::banzhaf_combinations(fixture::committee(), 0);
  CHECK(committee == R({{7, 8}, {1, 8}, {1, 8}, {1, 8}, {1, 8}}));
  CHECK(vpow::normalize(committee) == R({{7, 11}, {1, 11}, {1, 11}, {1, 11}, {1, 11}}));
  CHECK(vpow::banzhaf_combinations(fixture::weighted({2, 1, 1, 0}, 3), 0)[3] == 0);
  CHECK(vpow::banzhaf_combinations(fixture::weighted({1, 1, 1}, 3), 0) == R({{1, 4}, {1, 4}, {1, 4}}));
}

TEST_CASE("Johnston values") {
  const auto j = vpow::johnston(fixture::weighted({2, 1, 1}, 3), 0);
  CHECK(j.raw == R({{3, 8}, {1, 8}, {1, 8}}));
  CHECK(j.fractional == R({{2, 3}, {1, 6}, {1, 6}}));
  CHECK(j.warning.empty());
  CHECK(vpow::johnston(fixture::weighted({1, 0, 0}, 1), 0).raw == R({{1, 2}, {0, 1}, {0, 1}}));
  const auto never = vpow::johnston(fixture::weighted({1, 1}, 5), 0);
  CHECK(never.fractional == R({{0, 1}, {0, 1}}));
  CHECK_FALSE(never.warning.empty());
}

TEST_CASE("Coleman measures") {
  const auto g = fixture::committee();
  const vpow::EnumeratedGame eg(g);
  const auto init = vpow::coleman_initiate(eg, 0, 0);
  const auto prev = vpow::coleman_prevent(eg, 0, 0);
  CHECK(init.direct == Rational(7, 8));
  CHECK(*init.formula == Rational(7, 8));
  CHECK(prev.direct == Rational(7, 8));
  CHECK(*prev.formula == Rational(7, 8));

  const auto dummy = fixture::weighted({2, 1, 1, 0}, 3);
  const vpow::EnumeratedGame deg(dummy);
  CHECK(vpow::coleman_initiate(deg, 0, 3).direct == 0);
  CHECK(vpow::coleman_prevent(deg, 0, 3).direct == 0);

  const auto dictator = fixture::weighted({1, 0, 0}, 1);
  const vpow::EnumeratedGame dg(dictator);
  CHECK(vpow::coleman_initiate(dg, 0, 0).direct == 1);
  CHECK(vpow::coleman_prevent(dg, 0, 0).direct == 1);

  const auto always = fixture::constant();
  const vpow::EnumeratedGame ag(always);
  CHECK_THROWS_WITH_AS(vpow::coleman_initiate(ag, 0, 0), doctest::Contains("1 - Pr(O) = 0"),
                       vpow::UndefinedDenominatorError);
  CHECK_THROWS_WITH_AS(vpow::coleman_prevent(ag, 1, 0), doctest::Contains("= 0"), vpow::UndefinedDenominatorError);
  CHECK(vpow::coleman_prevent(ag, 0, 0).direct == 0);
}

TEST_CASE("elementary-probability formulations") {
  const auto g = fixture::committee();
  const vpow::EnumeratedGame eg(g);
  const auto t = vpow::elementary_index_report(eg, 0, 0);
  CHECK(*t.banzhaf.value == Rational(7, 8));
  CHECK(*t.straffin.value == Rational(7, 8));
  CHECK(*t.johnston.value == Rational(7, 16));
  CHECK(*t.shapley_shubik.value == Rational(7, 16));
  CHECK(*t.shapley_shubik.value != vpow::shapley_shubik_permutation(g, 0)[0]);
  CHECK(*t.coleman_initiate.value == Rational(7, 8));
  CHECK(*t.coleman_prevent.value == Rational(7, 8));
  CHECK(t.model == "uniform");
  CHECK(vpow::total_power(Rational(11, 25), Rational(3, 10)) == Rational(7, 50));
}

TEST_CASE("monotonicity") {
  SUBCASE("quota rule orders actions by weight") {
    const auto m = vpow::is_monotone(fixture::committee(), 0);
    CHECK(m.monotone);
    for (const auto& levels : m.levels) CHECK(levels == std::vector<std::size_t>{0, 1});
    // A dummy's actions are interchangeable.
    const auto d = vpow::is_monotone(fixture::weighted({2, 1, 1, 0}, 3), 0);
    CHECK(d.levels[3] == std::vector<std::size_t>{0, 0});
  }
  SUBCASE("parity is not monotone") {
    const auto g = fixture::parity3();
    const auto m = vpow::is_monotone(g, 0);
    CHECK_FALSE(m.monotone);
    REQUIRE(m.violating_player);
    REQUIRE(m.witness.size() == 2);
    for (const auto& [yields, misses] : m.witness) {
      CHECK(vpow::evaluate_rule(g, yields) == 0);
      CHECK(vpow::evaluate_rule(g, misses) != 0);
    }
    // The two pairs move the player in opposite directions.
    const std::size_t p = *m.violating_player;
    CHECK(m.witness[0].first.actions[p] == m.witness[1].second.actions[p]);
    CHECK(m.witness[0].second.actions[p] == m.witness[1].first.actions[p]);
  }
  SUBCASE("constant rule") { CHECK(vpow::is_monotone(fixture::constant(), 0).monotone); }
  SUBCASE("reversed action labels are still monotone") {
    auto g = fixture::committee();
    std::vector<std::vector<Rational>> w;
    for (int x : {4, 2, 1, 1, 1}) w.push_back({Rational(x), Rational(0)});
    g.rule = vpow::DecisionRule::weighted_quota(std::move(w), Rational(5));
    const auto m = vpow::is_monotone(g, 0);
    CHECK(m.monotone);
    CHECK(m.levels[0] == std::vector<std::size_t>{1, 0});
  }
}

TEST_CASE("minimum winning events") {
  const auto q322 = fixture::weighted({3, 2, 2}, 4);
  const vpow::EnumeratedGame qeg(q322);
  CHECK(yes_sets(q322, vpow::minimum_winning_events(qeg, 0)) == std::set<std::string>{"AB", "AC", "BC"});

  const auto committee = fixture::committee();
  const vpow::EnumeratedGame ceg(committee);
  CHECK(yes_sets(committee, vpow::minimum_winning_events(ceg, 0)) ==
        std::set<std::string>{"AB", "AC", "AD", "AE", "BCDE"});

  const auto dictator = fixture::weighted({1, 0, 0}, 1);
  const vpow::EnumeratedGame deg(dictator);
  const auto events = vpow::minimum_winning_events(deg, 0);
  CHECK(yes_sets(dictator, events) == std::set<std::string>{"A"});
  // Interchangeable actions of the dummies leave one event per dummy vote.
  CHECK(events.size() == 4);

  const auto parity = fixture::parity3();
  const vpow::EnumeratedGame peg(parity);
  CHECK_THROWS_WITH_AS(vpow::minimum_winning_events(peg, 0), doctest::Contains("monotonic"),
                       vpow::NotApplicableError);
}

TEST_CASE("Holler and Deegan-Packel") {
  const auto q322 = fixture::weighted({3, 2, 2}, 4);
  const vpow::EnumeratedGame qeg(q322);
  const auto h = vpow::holler(qeg, 0);
  CHECK(h.raw == R({{2, 1}, {2, 1}, {2, 1}}));
  CHECK(h.normalized == R({{1, 3}, {1, 3}, {1, 3}}));
  const auto dp = vpow::deegan_packel(qeg, 0);
  CHECK(dp.raw == R({{1, 1}, {1, 1}, {1, 1}}));
  CHECK(dp.normalized == R({{1, 3}, {1, 3}, {1, 3}}));

  const auto dictator = fixture::weighted({1, 0, 0}, 1);
  const vpow::EnumeratedGame deg(dictator);
  CHECK(vpow::holler(deg, 0).normalized == R({{1, 1}, {0, 1}, {0, 1}}));
  CHECK(vpow::deegan_packel(deg, 0).normalized == R({{1, 1}, {0, 1}, {0, 1}}));
}

TEST_CASE("minimum winning events satisfy their definition") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_game(rng, {.monotone_only = true});
    const vpow::EnumeratedGame eg(g);
    const auto mono = vpow::is_monotone(eg, 0);
    REQUIRE(mono.monotone);
    const auto events = vpow::minimum_winning_events(eg, 0);
    std::set<vpow::Configuration> listed;
    for (const auto& e : events) {
      listed.insert(e.configuration);
      CHECK(oracle::evaluate(g, e.configuration.actions) == 0);
    }
    // Every configuration yielding O is minimal iff no single one-level
    // step down keeps O.
    const auto space = g.space();
    std::vector<std::size_t> a(g.players.size(), 0);
    do {
      if (oracle::evaluate(g, a) != 0) continue;
      bool minimal = true;
      for (std::size_t p = 0; p < a.size() && minimal; ++p) {
        const auto& levels = mono.levels[p];
        if (levels[a[p]] == 0) continue;
        for (std::size_t b = 0; b < levels.size(); ++b) {
          if (levels[b] + 1 != levels[a[p]]) continue;
          auto lower = a;
          lower[p] = b;
          if (oracle::evaluate(g, lower) == 0) minimal = false;
        }
      }
      CHECK(listed.count(vpow::Configuration{a}) == (minimal ? 1U : 0U));
    } while (space.next(a));
  }
}

TEST_CASE("classical oracles agree with the brute-force references") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_game(rng, {.max_players = 6, .binary = true, .product_model = false});
    CHECK(vpow::shapley_shubik_permutation(g, 0) == oracle::shapley_shubik(g, 0));
    CHECK(vpow::banzhaf_combinations(g, 0) == oracle::banzhaf(g, 0));
    const vpow::EnumeratedGame eg(g);
    for (std::size_t p = 0; p < g.players.size(); ++p) {
      CHECK(vpow::banzhaf_combinations(g, 0)[p] == vpow::criticality_probability_formula(eg, 0, p, vpow::kTCd));
      CHECK(vpow::johnston(g, 0).raw[p] == vpow::criticality_probability_formula(eg, 0, p, vpow::kDC0));
    }
  }
}

TEST_CASE("homogeneity total criticality equals permutation Shapley-Shubik on monotone yes/no games") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_game(rng, {.max_players = 8, .binary = true, .monotone_only = true});
    const auto h = vpow::with_model(g, vpow::ProbabilityModel::homogeneity());
    const vpow::EnumeratedGame eg(h);
    const auto ss = vpow::shapley_shubik_permutation(g, 0);
    Rational total = 0;
    for (std::size_t p = 0; p < g.players.size(); ++p) {
      CHECK(vpow::criticality_probability(eg, 0, p, vpow::kTCd) == ss[p]);
      total += ss[p];
    }
    const std::size_t n = g.players.size();
    if (oracle::evaluate(g, std::vector<std::size_t>(n, 1)) == 0 && oracle::evaluate(g, std::vector<std::size_t>(n, 0)) != 0) {
      CHECK(total == 1);
    }
  }
}

TEST_CASE("abstention breaks the equivalence") {
  const auto g = fixture::load("abstention");
  const vpow::EnumeratedGame eg(g);
  for (std::size_t p = 0; p < g.players.size(); ++p) {
    CHECK(vpow::criticality_probability(eg, 0, p, vpow::kTCd) != vpow::criticality_probability(eg, 0, p, vpow::kIC0));
  }
}

TEST_CASE("index report") {
  const auto g = fixture::committee();
  const vpow::EnumeratedGame eg(g);
  const auto report = vpow::index_report(eg, 0);
  REQUIRE(report.players.size() == 5);
  Rational ss_total = 0;
  for (const auto& p : report.players) {
    ss_total += *p.shapley_shubik.oracle;
    for (const auto* e : {&p.shapley_shubik, &p.banzhaf, &p.straffin_independence, &p.straffin_homogeneity,
                          &p.johnston_raw, &p.johnston_fractional, &p.coleman_initiate, &p.coleman_prevent,
                          &p.deegan_packel, &p.holler}) {
      if (e->oracle && e->normalized) {
        CHECK(*e->normalized >= 0);
        CHECK(*e->normalized <= 1);
      }
    }
    CHECK(*p.banzhaf.oracle == *p.banzhaf.formula);
    CHECK(*p.straffin_homogeneity.oracle == *p.shapley_shubik.oracle);
    CHECK(*p.coleman_initiate.oracle == *p.coleman_initiate.formula);
  }
  CHECK(ss_total == 1);
  CHECK(*report.players[0].banzhaf.normalized == Rational(7, 11));
  CHECK(*report.players[0].holler.normalized == Rational(1, 3));

  const auto parity = fixture::parity3();
  const vpow::EnumeratedGame peg(parity);
  const auto pr = vpow::index_report(peg, 0);
  CHECK_FALSE(pr.players[0].holler.oracle);
  CHECK(pr.players[0].holler.note.find("monotonic") != std::string::npos);
}
