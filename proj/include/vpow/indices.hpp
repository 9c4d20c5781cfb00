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

#ifndef VPOW_INDICES_HPP
#define VPOW_INDICES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vpow/criticality.hpp"
#include "vpow/game.hpp"

namespace vpow {

// Classical algorithms. They work on the rule alone (orderings, yes/no
// combinations, minimum winning events) and serve as oracles for the
// probability formulas. Binary players follow the declaration convention
// of PlayerSpace: action 0 is "no", action 1 is "yes".

/// Pivot counts over all n! orderings, divided by n!. Binary games, n <= 10.
std::vector<Rational> shapley_shubik_permutation(const GeneralVotingGame& game, std::size_t outcome);

/// Swing count over all 2^n yes/no combinations, divided by 2^n (i.e. the
/// uniform-model Pr(TC^δ)). Binary games.
std::vector<Rational> banzhaf_combinations(const GeneralVotingGame& game, std::size_t outcome);

struct JohnstonValues {
  std::vector<Rational> raw;         // Pr(DC^0) under the game's model
  std::vector<Rational> fractional;  // classical, normalized to sum 1
  std::string warning;
};

JohnstonValues johnston(const GeneralVotingGame& game, std::size_t outcome);

/// Direct conditional and three-probability fraction, side by side.
struct ColemanValue {
  Rational direct;
  std::optional<Rational> formula;
};

/// Pr(IC^δ | not O). Throws UndefinedDenominatorError when Pr(O) = 1.
ColemanValue coleman_initiate(const EnumeratedGame& eg, std::size_t outcome, std::size_t player);
/// Pr(DC^δ | O). Throws UndefinedDenominatorError when Pr(O) = 0.
ColemanValue coleman_prevent(const EnumeratedGame& eg, std::size_t outcome, std::size_t player);

/// Index values written in terms of the elementary probabilities of the
/// game's own model.
struct ElementaryIndexValues {
  Conditioning conditioning = Conditioning::substitution;
  std::string model;
  FormulaValue shapley_shubik;  // Pr(x_min) (Pr(O|x_max) - Pr(O|x_min))
  FormulaValue banzhaf;         // Pr(O|x_max) - Pr(O|x_min)
  FormulaValue straffin;        // same expression as banzhaf
  FormulaValue johnston;        // Pr(O) - Pr(O|x_min)
  FormulaValue coleman_initiate;
  FormulaValue coleman_prevent;
};

ElementaryIndexValues elementary_index_report(const EnumeratedGame& eg, std::size_t outcome, std::size_t player);
ElementaryIndexValues elementary_index_report(const CriticalityReport& report, const ProbabilityModel& model);

/// Elementary-probability form of total power for a plain pair of
/// conditionals: Pr(O | yes) - Pr(O | no).
Rational total_power(const Rational& given_yes, const Rational& given_no);

/// Monotonicity with respect to one outcome.
struct MonotonicityResult {
  bool monotone = false;
  /// levels[player][action]: rank in the induced order, 0 = lowest support.
  /// Actions sharing a level are interchangeable for the outcome.
  std::vector<std::vector<std::size_t>> levels;
  /// Violation evidence when not monotone: in each pair the first
  /// configuration yields the outcome and the second, which changes only
  /// `violating_player`'s action, does not. The two pairs together rule out
  /// every order.
  std::optional<std::size_t> violating_player;
  std::vector<std::pair<Configuration, Configuration>> witness;
};

MonotonicityResult is_monotone(const EnumeratedGame& eg, std::size_t outcome);
MonotonicityResult is_monotone(const GeneralVotingGame& game, std::size_t outcome);

struct MinimumWinningEvent {
  Configuration configuration;
  std::size_t outcome = 0;
  /// Players above their lowest level.
  std::vector<std::size_t> supporters;
};

/// Configurations yielding the outcome that lose it when any single player
/// steps one level down. Throws NotApplicableError on non-monotone rules.
std::vector<MinimumWinningEvent> minimum_winning_events(const EnumeratedGame& eg, std::size_t outcome);

/// Raw counts and normalized shares.
struct MweIndexValues {
  std::vector<Rational> raw;
  std::vector<Rational> normalized;
};

MweIndexValues holler(const EnumeratedGame& eg, std::size_t outcome);
MweIndexValues deegan_packel(const EnumeratedGame& eg, std::size_t outcome);

/// Divides by the sum when it is nonzero, else returns zeros.
std::vector<Rational> normalize(const std::vector<Rational>& values);

/// One index for one player: the classical oracle and the probability
/// formula, each when applicable.
struct IndexEntry {
  std::optional<Rational> oracle;
  std::optional<Rational> formula;
  std::optional<Rational> normalized;
  std::string model;
  std::string note;
};

struct PlayerIndices {
  std::size_t player = 0;
  IndexEntry shapley_shubik;
  IndexEntry banzhaf;
  IndexEntry straffin_independence;
  IndexEntry straffin_homogeneity;
  IndexEntry johnston_raw;
  IndexEntry johnston_fractional;
  IndexEntry coleman_initiate;
  IndexEntry coleman_prevent;
  IndexEntry deegan_packel;
  IndexEntry holler;
};

struct IndexReport {
  std::size_t outcome = 0;
  std::vector<PlayerIndices> players;
};

IndexReport index_report(const EnumeratedGame& eg, std::size_t outcome);

/// The same game with a different probability model.
GeneralVotingGame with_model(const GeneralVotingGame& game, ProbabilityModel model);

}  // namespace vpow

#endif  // VPOW_INDICES_HPP
