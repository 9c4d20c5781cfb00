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


#ifndef VPOW_TESTS_FIXTURES_HPP
#define VPOW_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "vpow/game.hpp"
#include "vpow/game_file.hpp"

namespace fixture {

using vpow::Rational;

/// Yes/no weighted quota game, outcomes {win, lose}, uniform model.
inline vpow::GeneralVotingGame weighted(const std::vector<int>& weights, int quota,
                                        vpow::ProbabilityModel model = vpow::ProbabilityModel::uniform()) {
  vpow::GeneralVotingGame g;
  g.outcomes.labels = {"win", "lose"};
  std::vector<std::vector<Rational>> w;
  for (std::size_t p = 0; p < weights.size(); ++p) {
    g.players.push_back(vpow::PlayerSpace{std::string(1, static_cast<char>('A' + p)), {"no", "yes"}, std::nullopt});
    w.push_back({Rational(0), Rational(weights[p])});
  }
  g.rule = vpow::DecisionRule::weighted_quota(std::move(w), Rational(quota), 0, 1);
  g.model = std::move(model);
  g.validate();
  return g;
}

inline vpow::GeneralVotingGame committee() { return weighted({4, 2, 1, 1, 1}, 5); }

/// Win iff an odd number of the three players vote yes.
inline vpow::GeneralVotingGame parity3() {
  vpow::GeneralVotingGame g;
  g.outcomes.labels = {"win", "lose"};
  for (const char* id : {"A", "B", "C"}) g.players.push_back(vpow::PlayerSpace{id, {"no", "yes"}, std::nullopt});
  std::vector<std::size_t> table;
  for (int i = 0; i < 8; ++i) table.push_back(__builtin_popcount(i) % 2 == 1 ? 0 : 1);
  g.rule = vpow::DecisionRule::explicit_table(std::move(table));
  g.model = vpow::ProbabilityModel::uniform();
  g.validate();
  return g;
}

/// Every configuration yields "win".
inline vpow::GeneralVotingGame constant(std::size_t players = 2) {
  vpow::GeneralVotingGame g;
  g.outcomes.labels = {"win", "lose"};
  for (std::size_t p = 0; p < players; ++p) {
    g.players.push_back(vpow::PlayerSpace{std::string(1, static_cast<char>('A' + p)), {"no", "yes"}, std::nullopt});
  }
  g.rule = vpow::DecisionRule::explicit_table(std::vector<std::size_t>(std::size_t{1} << players, 0));
  g.model = vpow::ProbabilityModel::uniform();
  g.validate();
  return g;
}

inline std::string corpus(const std::string& name) { return std::string(VPOW_DATA_DIR) + "/games/" + name + ".json"; }

inline vpow::GeneralVotingGame load(const std::string& name) { return vpow::load_game_file(corpus(name)); }

}  // namespace fixture

#endif  // VPOW_TESTS_FIXTURES_HPP
