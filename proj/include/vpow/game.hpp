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

#ifndef VPOW_GAME_HPP
#define VPOW_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vpow/model.hpp"
#include "vpow/rational.hpp"
#include "vpow/rule.hpp"
#include "vpow/space.hpp"

namespace vpow {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Players, outcomes, decision rule and probability model.
struct GeneralVotingGame {
  std::string title;
  std::string description;
  std::vector<PlayerSpace> players;
  OutcomeSpace outcomes;
  DecisionRule rule;
  ProbabilityModel model;

  /// Checks every structural invariant. Throws ValidationError.
  void validate() const;

  ConfigurationSpace space() const;
  std::size_t player_index(std::string_view id) const;
  std::size_t outcome_index(std::string_view label) const;
  std::size_t action_index(std::size_t player, std::string_view label) const;
  bool all_binary() const;

  /// Configuration from action labels, in player order.
  Configuration configuration(const std::vector<std::string>& labels) const;

  bool operator==(const GeneralVotingGame&) const = default;
};

/// W(ω) as an outcome index. Throws ValidationError for a configuration of
/// the wrong length or with an out-of-range action.
std::size_t evaluate_rule(const GeneralVotingGame& game, const Configuration& config);
const std::string& evaluate_rule_label(const GeneralVotingGame& game, const Configuration& config);

/// A game whose configuration space has been materialized: the outcome of
/// every configuration, and its mass (cached for spaces up to 2^20).
/// Everything on the exact path is computed from this view.
class EnumeratedGame {
 public:
  /// Throws CapExceededError when the space holds more than `cap`
  /// configurations.
  explicit EnumeratedGame(const GeneralVotingGame& game, std::uint64_t cap = kDefaultEnumerationCap);

  const GeneralVotingGame& game() const { return *game_; }
  const ConfigurationSpace& space() const { return space_; }
  std::uint64_t size() const { return space_.size(); }
  std::size_t outcome(std::uint64_t index) const { return outcomes_[index]; }
  Rational mass(std::uint64_t index) const;

 private:
  const GeneralVotingGame* game_;
  ConfigurationSpace space_;
  std::vector<std::uint32_t> outcomes_;
  std::vector<Rational> masses_;
};

using ConfigurationVisitor = std::function<void(const Configuration&, const Rational&)>;

/// Visits every configuration with its mass, in lexicographic order of
/// action indices.
void enumerate_configurations(const GeneralVotingGame& game, const ConfigurationVisitor& visit,
                              std::uint64_t cap = kDefaultEnumerationCap);
/// Visits the configurations whose linear index lies in [first, last).
void enumerate_configuration_range(const GeneralVotingGame& game, std::uint64_t first, std::uint64_t last,
                                   const ConfigurationVisitor& visit);

/// Pr(O) restricted to the configurations with linear index in [first, last).
Rational outcome_probability_range(const EnumeratedGame& eg, std::size_t outcome, std::uint64_t first,
                                   std::uint64_t last);
Rational outcome_probability(const EnumeratedGame& eg, std::size_t outcome);
Rational outcome_probability(const GeneralVotingGame& game, std::size_t outcome);

/// How a conditional on a player's action was computed.
enum class Conditioning {
  /// Independence: force the action, integrate the others' marginal.
  substitution,
  /// Dependent models: filter the joint mass on the action and renormalize.
  bayes,
};

const char* to_string(Conditioning c);
Conditioning conditioning_for(const ProbabilityModel& model);

/// Pr(O | x_i = action). Throws UndefinedConditionalError when the action
/// has probability zero.
Rational conditional_outcome_probability(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                         std::size_t action);
Rational conditional_outcome_probability(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                                         std::size_t action);

Rational action_probability(const GeneralVotingGame& game, std::size_t player, std::size_t action);

}  // namespace vpow

#endif  // VPOW_GAME_HPP
