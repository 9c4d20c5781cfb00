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

#include "vpow/rule.hpp"

#include "vpow/errors.hpp"

namespace vpow {
namespace {

std::int64_t to_int64(const mpz_class& z) {
  // Leave headroom so that a sum over many players cannot overflow the
  // 128-bit accumulator used in evaluate().
  static const mpz_class kLimit = mpz_class(1) << 62;
  if (abs(z) >= kLimit) throw ValidationError("quota weights too large after scaling to integers");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

const char* to_string(DecisionRule::Kind kind) {
  switch (kind) {
    case DecisionRule::Kind::weighted_quota:
      return "weighted-quota";
    case DecisionRule::Kind::k_weighted_quota:
      return "k-weighted-quota";
    case DecisionRule::Kind::explicit_table:
      return "explicit-table";
  }
  return "?";
}

DecisionRule DecisionRule::weighted_quota(std::vector<std::vector<Rational>> weights, Rational quota,
                                          std::size_t met, std::size_t unmet) {
  DecisionRule rule;
  rule.kind_ = Kind::weighted_quota;
  rule.components_.push_back(QuotaComponent{std::move(weights), std::move(quota)});
  rule.met_ = met;
  rule.unmet_ = unmet;
  rule.prepare_scaled();
  return rule;
}

DecisionRule DecisionRule::k_weighted_quota(std::vector<QuotaComponent> components, std::size_t met,
                                            std::size_t unmet) {
  if (components.empty()) throw ValidationError("k-weighted-quota rule needs at least one component");
  DecisionRule rule;
  rule.kind_ = Kind::k_weighted_quota;
  rule.components_ = std::move(components);
  rule.met_ = met;
  rule.unmet_ = unmet;
  rule.prepare_scaled();
  return rule;
}

DecisionRule DecisionRule::explicit_table(std::vector<std::size_t> outcomes) {
  DecisionRule rule;
  rule.kind_ = Kind::explicit_table;
  rule.table_ = std::move(outcomes);
  return rule;
}

void DecisionRule::prepare_scaled() {
  scaled_weights_.clear();
  scaled_quota_.clear();
  for (const auto& component : components_) {
    mpz_class lcm = component.quota.get_den();
    for (const auto& row : component.weights) {
      for (const auto& w : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den().get_mpz_t());
    }
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(component.weights.size());
    for (const auto& row : component.weights) {
      std::vector<std::int64_t> scaled;
      scaled.reserve(row.size());
      for (const auto& w : row) scaled.push_back(to_int64(w.get_num() * (lcm / w.get_den())));
      rows.push_back(std::move(scaled));
    }
    scaled_weights_.push_back(std::move(rows));
    scaled_quota_.push_back(to_int64(component.quota.get_num() * (lcm / component.quota.get_den())));
  }
}

void DecisionRule::validate(const std::vector<PlayerSpace>& players, const OutcomeSpace& outcomes,
                            const ConfigurationSpace& space) const {
  if (kind_ == Kind::explicit_table) {
    if (space.saturated() || table_.size() != space.size()) {
      throw ValidationError("explicit-table rule covers " + std::to_string(table_.size()) +
                            " configurations, the product space has " + std::to_string(space.size()));
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] >= outcomes.size()) {
        throw ValidationError("explicit-table entry " + std::to_string(i) + " names an unknown outcome");
      }
    }
    return;
  }
  if (met_ >= outcomes.size() || unmet_ >= outcomes.size() || met_ == unmet_) {
    throw ValidationError("quota rule needs two distinct outcomes for met/unmet");
  }
  for (const auto& component : components_) {
    if (component.weights.size() != players.size()) {
      throw ValidationError("quota component has weights for " + std::to_string(component.weights.size()) +
                            " players, game has " + std::to_string(players.size()));
    }
    for (std::size_t p = 0; p < players.size(); ++p) {
      if (component.weights[p].size() != players[p].actions.size()) {
        throw ValidationError("player '" + players[p].id + "' has " + std::to_string(players[p].actions.size()) +
                              " actions but " + std::to_string(component.weights[p].size()) + " weights");
      }
    }
  }
}

std::size_t DecisionRule::evaluate(const ConfigurationSpace& space, std::span<const std::size_t> actions) const {
  if (kind_ == Kind::explicit_table) return table_[space.index_of(actions)];
  for (std::size_t c = 0; c < scaled_weights_.size(); ++c) {
    __int128 sum = 0;
    const auto& rows = scaled_weights_[c];
    for (std::size_t p = 0; p < actions.size(); ++p) sum += rows[p][actions[p]];
    if (sum < scaled_quota_[c]) return unmet_;
  }
  return met_;
}

bool DecisionRule::operator==(const DecisionRule& other) const {
  return kind_ == other.kind_ && components_ == other.components_ && met_ == other.met_ &&
         unmet_ == other.unmet_ && table_ == other.table_ && declared_monotone == other.declared_monotone;
}

}  // namespace vpow
