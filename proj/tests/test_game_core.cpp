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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vpow/errors.hpp"
#include "vpow/game.hpp"
#include "vpow/rational.hpp"

using vpow::Rational;

TEST_CASE("rational parsing is exact") {
  CHECK(vpow::parse_rational("0.1") == Rational(1, 10));
  CHECK(vpow::parse_rational("7/10") == Rational(7, 10));
  CHECK(vpow::parse_rational("-2") == Rational(-2));
  CHECK(vpow::parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(vpow::parse_rational("1E2") == Rational(100));
  CHECK_THROWS_AS(vpow::parse_rational("1/0"), vpow::ValidationError);
  CHECK_THROWS_AS(vpow::parse_rational("abc"), vpow::ValidationError);
  CHECK_THROWS_AS(vpow::parse_rational(""), vpow::ValidationError);
}

TEST_CASE("rational rendering") {
  CHECK(vpow::to_fraction_string(Rational(7, 8)) == "7/8");
  CHECK(vpow::to_fraction_string(Rational(3)) == "3");
  CHECK(vpow::to_decimal_string(Rational(7, 8)) == "0.875000000000");
  CHECK(vpow::to_decimal_string(Rational(1, 3)) == "0.333333333333");
  CHECK(vpow::to_decimal_string(Rational(2, 3)) == "0.666666666667");
  CHECK(vpow::to_decimal_string(Rational(-1, 8), 2) == "-0.13");
  CHECK(vpow::to_decimal_string(Rational(0)) == "0.000000000000");
}

TEST_CASE("weighted quota evaluation") {
  const auto g = fixture::committee();
  CHECK(vpow::evaluate_rule_label(g, g.configuration({"yes", "no", "no", "no", "no"})) == "lose");
  CHECK(vpow::evaluate_rule_label(g, g.configuration({"yes", "yes", "no", "no", "no"})) == "win");
  CHECK(vpow::evaluate_rule_label(g, g.configuration({"no", "no", "no", "no", "no"})) == "lose");
  CHECK(vpow::evaluate_rule_label(g, g.configuration({"no", "yes", "yes", "yes", "yes"})) == "win");
}

TEST_CASE("rule evaluation is pure") {
  const auto g = fixture::committee();
  const auto c = g.configuration({"yes", "no", "yes", "no", "no"});
  const auto first = vpow::evaluate_rule(g, c);
  for (int i = 0; i < 100; ++i) CHECK(vpow::evaluate_rule(g, c) == first);
}

TEST_CASE("invalid configurations are rejected") {
  const auto g = fixture::committee();
  CHECK_THROWS_AS(vpow::evaluate_rule(g, vpow::Configuration{{1, 0}}), vpow::ValidationError);
  CHECK_THROWS_AS(vpow::evaluate_rule(g, vpow::Configuration{{2, 0, 0, 0, 0}}), vpow::ValidationError);
  CHECK_THROWS_AS(g.configuration({"maybe", "no", "no", "no", "no"}), vpow::ValidationError);
}

TEST_CASE("game validation") {
  auto g = fixture::committee();
  SUBCASE("duplicate player id") {
    g.players[1].id = "A";
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("'A'"), vpow::ValidationError);
  }
  SUBCASE("single action player") {
    g.players[0].actions = {"yes"};
    CHECK_THROWS_AS(g.validate(), vpow::ValidationError);
  }
  SUBCASE("duplicate action label") {
    g.players[0].actions = {"yes", "yes"};
    CHECK_THROWS_AS(g.validate(), vpow::ValidationError);
  }
  SUBCASE("duplicate outcome label") {
    g.outcomes.labels = {"win", "win"};
    CHECK_THROWS_AS(g.validate(), vpow::ValidationError);
  }
  SUBCASE("single outcome") {
    g.outcomes.labels = {"win"};
    CHECK_THROWS_AS(g.validate(), vpow::ValidationError);
  }
}

TEST_CASE("enumeration emits every configuration once in lexicographic order") {
  SUBCASE("two uniform yes/no players") {
    const auto g = fixture::weighted({1, 1}, 1);
    std::vector<vpow::Configuration> seen;
    vpow::enumerate_configurations(g, [&](const vpow::Configuration& c, const Rational& m) {
      seen.push_back(c);
      CHECK(m == Rational(1, 4));
    });
    REQUIRE(seen.size() == 4);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(seen.front().actions == std::vector<std::size_t>{0, 0});
    CHECK(seen.back().actions == std::vector<std::size_t>{1, 1});
  }
  SUBCASE("committee: 32 configurations of mass 1/32") {
    const auto g = fixture::committee();
    std::size_t count = 0;
    Rational total = 0;
    vpow::enumerate_configurations(g, [&](const vpow::Configuration&, const Rational& m) {
      ++count;
      total += m;
      CHECK(m == Rational(1, 32));
    });
    CHECK(count == 32);
    CHECK(total == 1);
  }
  SUBCASE("homogeneity mass for two yes votes of three") {
    const auto g = fixture::weighted({1, 1, 1}, 2, vpow::ProbabilityModel::homogeneity());
    vpow::enumerate_configurations(g, [&](const vpow::Configuration& c, const Rational& m) {
      const auto yes = std::count(c.actions.begin(), c.actions.end(), 1U);
      if (yes == 2) CHECK(m == Rational(1, 12));
    });
  }
}

TEST_CASE("enumeration cap") {
  const auto g = fixture::committee();
  CHECK_THROWS_WITH_AS(vpow::EnumeratedGame(g, 16), doctest::Contains("mc"), vpow::CapExceededError);
  CHECK_NOTHROW(vpow::EnumeratedGame(g, 32));
}

TEST_CASE("outcome probabilities") {
  CHECK(vpow::outcome_probability(fixture::weighted({1, 1, 1}, 2), 0) == Rational(1, 2));
  CHECK(vpow::outcome_probability(fixture::committee(), 0) == Rational(1, 2));
  CHECK(vpow::outcome_probability(fixture::weighted({1, 1, 1}, 3, vpow::ProbabilityModel::homogeneity()), 0) ==
        Rational(1, 4));
  CHECK_THROWS_AS(vpow::outcome_probability(fixture::committee(), 2), vpow::ValidationError);
}

TEST_CASE("conditional outcome probabilities") {
  const auto g = fixture::committee();
  CHECK(vpow::conditional_outcome_probability(g, 0, 0, 1) == Rational(15, 16));
  CHECK(vpow::conditional_outcome_probability(g, 0, 0, 0) == Rational(1, 16));
  CHECK(vpow::conditional_outcome_probability(g, 0, 1, 1) == Rational(9, 16));
  CHECK(vpow::conditional_outcome_probability(g, 0, 1, 0) == Rational(7, 16));
  const auto dictator = fixture::weighted({1, 0, 0}, 1);
  CHECK(vpow::conditional_outcome_probability(dictator, 0, 0, 1) == 1);
  CHECK(vpow::conditional_outcome_probability(dictator, 0, 0, 0) == 0);
}

TEST_CASE("conditioning on a zero-probability action is an error") {
  auto g = fixture::committee();
  g.model = vpow::ProbabilityModel::product({{Rational(1), Rational(0)},
                                             {Rational(1, 2), Rational(1, 2)},
                                             {Rational(1, 2), Rational(1, 2)},
                                             {Rational(1, 2), Rational(1, 2)},
                                             {Rational(1, 2), Rational(1, 2)}});
  CHECK_THROWS_AS(vpow::conditional_outcome_probability(g, 0, 0, 1), vpow::UndefinedConditionalError);
  CHECK(vpow::conditional_outcome_probability(g, 0, 0, 0) == Rational(1, 16));
}

TEST_CASE("conditional paths match the oracles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_game(rng, {});
    const vpow::EnumeratedGame eg(g);
    for (std::size_t p = 0; p < g.players.size(); ++p) {
      for (std::size_t a = 0; a < g.players[p].actions.size(); ++a) {
        if (vpow::action_probability(g, p, a) == 0) continue;
        CHECK(vpow::conditional_outcome_probability(eg, 0, p, a) == oracle::substituted(g, 0, p, a));
        CHECK(vpow::conditional_outcome_probability(eg, 0, p, a) == oracle::conditioned(g, 0, p, a));
      }
    }
  }
  // Dependent model: Bayes filtering.
  const auto h = fixture::weighted({1, 1, 1}, 2, vpow::ProbabilityModel::homogeneity());
  CHECK(vpow::conditional_outcome_probability(h, 0, 0, 1) == oracle::conditioned(h, 0, 0, 1));
  CHECK(vpow::conditional_outcome_probability(h, 0, 0, 1) != oracle::substituted(h, 0, 0, 1));
}

TEST_CASE("action probabilities") {
  CHECK(vpow::action_probability(fixture::committee(), 0, 0) == Rational(1, 2));
  CHECK(vpow::action_probability(fixture::weighted({1, 1, 1}, 2, vpow::ProbabilityModel::homogeneity()), 1, 0) ==
        Rational(1, 2));
  auto g = fixture::weighted({1, 1}, 1);
  g.model = vpow::ProbabilityModel::product(
      {{Rational(3, 10), Rational(7, 10)}, {Rational(1, 2), Rational(1, 2)}});
  CHECK(vpow::action_probability(g, 0, 0) == Rational(3, 10));
}

TEST_CASE("outcome probabilities sum to one for every model") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_game(rng, {.min_players = 1, .max_players = 6, .binary = true});
    switch (trial % 4) {
      case 0:
        break;
      case 1:
        g.model = vpow::ProbabilityModel::homogeneity();
        break;
      case 2: {
        std::map<vpow::Configuration, Rational> table;
        std::uniform_int_distribution<int> d(0, 5);
        Rational total = 0;
        oracle::for_each_configuration(oracle::radices(g), [&](const auto& a) {
          const int w = d(rng);
          if (w > 0) table[vpow::Configuration{a}] = Rational(w);
          total += w;
        });
        if (total == 0) {
          table[vpow::Configuration{std::vector<std::size_t>(g.players.size(), 0)}] = 1;
          total = 1;
        }
        for (auto& [c, m] : table) m /= total;
        g.model = vpow::ProbabilityModel::explicit_table(std::move(table));
        break;
      }
      case 3: {
        auto half = std::make_shared<const vpow::ProbabilityModel>(vpow::ProbabilityModel::homogeneity());
        auto other = std::make_shared<const vpow::ProbabilityModel>(g.model);
        g.model = vpow::ProbabilityModel::mixture({{Rational(1, 3), half}, {Rational(2, 3), other}});
        break;
      }
    }
    g.validate();
    const vpow::EnumeratedGame eg(g);
    Rational total = 0;
    for (std::size_t o = 0; o < g.outcomes.size(); ++o) {
      const Rational p = vpow::outcome_probability(eg, o);
      CHECK(p == oracle::outcome_probability(g, o));
      total += p;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("law of total probability under independence") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_game(rng, {});
    const vpow::EnumeratedGame eg(g);
    for (std::size_t p = 0; p < g.players.size(); ++p) {
      Rational total = 0;
      for (std::size_t a = 0; a < g.players[p].actions.size(); ++a) {
        const Rational pa = vpow::action_probability(g, p, a);
        if (pa != 0) total += pa * vpow::conditional_outcome_probability(eg, 0, p, a);
      }
      CHECK(total == vpow::outcome_probability(eg, 0));
    }
  }
}

TEST_CASE("chunked enumeration reproduces the global sum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_game(rng, {});
    const vpow::EnumeratedGame eg(g);
    const Rational whole = vpow::outcome_probability(eg, 0);
    std::uniform_int_distribution<std::uint64_t> cut(0, eg.size());
    std::vector<std::uint64_t> cuts{0, eg.size(), cut(rng), cut(rng), cut(rng)};
    std::sort(cuts.begin(), cuts.end());
    Rational sum = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) sum += vpow::outcome_probability_range(eg, 0, cuts[i], cuts[i + 1]);
    CHECK(sum == whole);

    Rational visited = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      vpow::enumerate_configuration_range(g, cuts[i], cuts[i + 1], [&](const vpow::Configuration& c, const Rational& m) {
        if (vpow::evaluate_rule(g, c) == 0) visited += m;
      });
    }
    CHECK(visited == whole);
  }
}
