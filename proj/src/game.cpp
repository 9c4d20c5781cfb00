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

#include "vpow/game.hpp"

#include <set>

#include "vpow/errors.hpp"

namespace vpow {
namespace {

constexpr std::uint64_t kMassCacheLimit = std::uint64_t{1} << 20;

void check_player(const GeneralVotingGame& game, std::size_t player) {
  if (player >= game.players.size()) {
    throw ValidationError("player index " + std::to_string(player) + " out of range");
  }
}

void check_outcome(const GeneralVotingGame& game, std::size_t outcome) {
  if (outcome >= game.outcomes.size()) {
    throw ValidationError("outcome index " + std::to_string(outcome) + " out of range");
  }
}

}  // namespace

void GeneralVotingGame::validate() const {
  if (players.empty()) throw ValidationError("game has no players");
  std::set<std::string> ids;
  for (const auto& p : players) {
    if (!ids.insert(p.id).second) throw ValidationError("duplicate player id '" + p.id + "'");
    if (p.actions.size() < 2) {
      throw ValidationError("player '" + p.id + "' needs at least two actions");
    }
    std::set<std::string> labels(p.actions.begin(), p.actions.end());
    if (labels.size() != p.actions.size()) {
      throw ValidationError("player '" + p.id + "' has duplicate action labels");
    }
    if (p.min_action && *p.min_action >= p.actions.size()) {
      throw ValidationError("player '" + p.id + "' declares an invalid minimal action");
    }
  }
  if (outcomes.size() < 2) throw ValidationError("outcome space needs at least two outcomes");
  std::set<std::string> olabels(outcomes.labels.begin(), outcomes.labels.end());
  if (olabels.size() != outcomes.size()) throw ValidationError("duplicate outcome labels");
  rule.validate(players, outcomes, space());
  model.validate(players);
}

ConfigurationSpace GeneralVotingGame::space() const {
  std::vector<std::size_t> radices;
  radices.reserve(players.size());
  for (const auto& p : players) radices.push_back(p.actions.size());
  return ConfigurationSpace(std::move(radices));
}

std::size_t GeneralVotingGame::player_index(std::string_view id) const {
  for (std::size_t p = 0; p < players.size(); ++p) {
    if (players[p].id == id) return p;
  }
  throw ValidationError("unknown player '" + std::string(id) + "'");
}

std::size_t GeneralVotingGame::outcome_index(std::string_view label) const {
  if (auto o = outcomes.find(label)) return *o;
  throw ValidationError("unknown outcome '" + std::string(label) + "'");
}

std::size_t GeneralVotingGame::action_index(std::size_t player, std::string_view label) const {
  check_player(*this, player);
  if (auto a = players[player].find_action(label)) return *a;
  throw ValidationError("unknown action '" + std::string(label) + "' for player '" + players[player].id + "'");
}

bool GeneralVotingGame::all_binary() const {
  for (const auto& p : players) {
    if (p.actions.size() != 2) return false;
  }
  return true;
}

Configuration GeneralVotingGame::configuration(const std::vector<std::string>& labels) const {
  if (labels.size() != players.size()) {
    throw ValidationError("configuration has " + std::to_string(labels.size()) + " entries, expected " +
                          std::to_string(players.size()));
  }
  Configuration c;
  for (std::size_t p = 0; p < labels.size(); ++p) c.actions.push_back(action_index(p, labels[p]));
  return c;
}

std::size_t evaluate_rule(const GeneralVotingGame& game, const Configuration& config) {
  const auto space = game.space();
  space.index_of(config.actions);  // validates length and ranges
  return game.rule.evaluate(space, config.actions);
}

const std::string& evaluate_rule_label(const GeneralVotingGame& game, const Configuration& config) {
  return game.outcomes.labels[evaluate_rule(game, config)];
}

EnumeratedGame::EnumeratedGame(const GeneralVotingGame& game, std::uint64_t cap)
    : game_(&game), space_(game.space()) {
  if (space_.saturated() || space_.size() > cap) {
    throw CapExceededError("configuration space has " +
                           (space_.saturated() ? std::string("more than 2^64") : std::to_string(space_.size())) +
                           " configurations, above the enumeration cap of " + std::to_string(cap) +
                           "; use Monte-Carlo estimation (mc) or raise --cap");
  }
  outcomes_.resize(space_.size());
  const bool cache = space_.size() <= kMassCacheLimit;
  if (cache) masses_.resize(space_.size());
  std::vector<std::size_t> actions(space_.players(), 0);
  std::uint64_t index = 0;
  do {
    outcomes_[index] = static_cast<std::uint32_t>(game.rule.evaluate(space_, actions));
    if (cache) masses_[index] = game.model.mass(game.players, actions);
    ++index;
  } while (space_.next(actions));
}

Rational EnumeratedGame::mass(std::uint64_t index) const {
  if (!masses_.empty()) return masses_[index];
  return game_->model.mass(game_->players, space_.decode(index).actions);
}

void enumerate_configurations(const GeneralVotingGame& game, const ConfigurationVisitor& visit,
                              std::uint64_t cap) {
  const auto space = game.space();
  if (space.saturated() || space.size() > cap) {
    throw CapExceededError("configuration space above the enumeration cap of " + std::to_string(cap) +
                           "; use Monte-Carlo estimation (mc) or raise --cap");
  }
  enumerate_configuration_range(game, 0, space.size(), visit);
}

void enumerate_configuration_range(const GeneralVotingGame& game, std::uint64_t first, std::uint64_t last,
                                   const ConfigurationVisitor& visit) {
  const auto space = game.space();
  if (last > space.size()) last = space.size();
  if (first >= last) return;
  Configuration c = space.decode(first);
  for (std::uint64_t index = first; index < last; ++index) {
    visit(c, game.model.mass(game.players, c.actions));
    space.next(c.actions);
  }
}

Rational outcome_probability_range(const EnumeratedGame& eg, std::size_t outcome, std::uint64_t first,
                                   std::uint64_t last) {
  check_outcome(eg.game(), outcome);
  if (last > eg.size()) last = eg.size();
  Rational total = 0;
  for (std::uint64_t i = first; i < last; ++i) {
    if (eg.outcome(i) == outcome) total += eg.mass(i);
  }
  return total;
}

Rational outcome_probability(const EnumeratedGame& eg, std::size_t outcome) {
  return outcome_probability_range(eg, outcome, 0, eg.size());
}

Rational outcome_probability(const GeneralVotingGame& game, std::size_t outcome) {
  return outcome_probability(EnumeratedGame(game), outcome);
}

const char* to_string(Conditioning c) { return c == Conditioning::substitution ? "substitution" : "bayes"; }

Conditioning conditioning_for(const ProbabilityModel& model) {
  return model.is_product() ? Conditioning::substitution : Conditioning::bayes;
}

Rational conditional_outcome_probability(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                         std::size_t action) {
  const auto& game = eg.game();
  check_outcome(game, outcome);
  check_player(game, player);
  if (action >= game.players[player].actions.size()) {
    throw ValidationError("action index " + std::to_string(action) + " invalid for player '" +
                          game.players[player].id + "'");
  }
  const auto& space = eg.space();
  const std::uint64_t stride = space.stride(player);
  const std::size_t radix = space.radix(player);

  Rational with_action = 0;     // Pr(x_i = a)
  Rational joint = 0;           // Pr(O, x_i = a)
  Rational substituted = 0;     // Σ_r λ(r) I^O(r × a)
  for (std::uint64_t base = 0; base < eg.size(); ++base) {
    if (space.digit(base, player) != 0) continue;
    Rational lambda = 0;
    for (std::size_t b = 0; b < radix; ++b) lambda += eg.mass(base + b * stride);
    const std::uint64_t forced = base + action * stride;
    const Rational m = eg.mass(forced);
    with_action += m;
    if (eg.outcome(forced) == outcome) {
      joint += m;
      substituted += lambda;
    }
  }
  if (sgn(with_action) == 0) {
    throw UndefinedConditionalError("Pr(" + game.players[player].id + " = " + game.players[player].actions[action] +
                                    ") is zero; the conditional probability is undefined");
  }
  if (conditioning_for(game.model) == Conditioning::substitution) return substituted;
  return joint / with_action;
}

Rational conditional_outcome_probability(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                                         std::size_t action) {
  return conditional_outcome_probability(EnumeratedGame(game), outcome, player, action);
}

Rational action_probability(const GeneralVotingGame& game, std::size_t player, std::size_t action) {
  check_player(game, player);
  const auto marginal = game.model.action_marginal(game.players, player);
  if (action >= marginal.size()) {
    throw ValidationError("action index " + std::to_string(action) + " invalid for player '" +
                          game.players[player].id + "'");
  }
  return marginal[action];
}

}  // namespace vpow
