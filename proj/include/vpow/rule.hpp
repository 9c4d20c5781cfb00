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

#ifndef VPOW_RULE_HPP
#define VPOW_RULE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpow/rational.hpp"
#include "vpow/space.hpp"

namespace vpow {

/// One weighted threshold: weights[player][action] summed over a
/// configuration must reach `quota`.
struct QuotaComponent {
  std::vector<std::vector<Rational>> weights;
  Rational quota;
  bool operator==(const QuotaComponent&) const = default;
};

/// The decision rule W: a total map from configurations to outcome indices.
class DecisionRule {
 public:
  enum class Kind { weighted_quota, k_weighted_quota, explicit_table };

  DecisionRule() = default;

  /// Outcome `met` when the weighted sum reaches the quota, `unmet` otherwise.
  static DecisionRule weighted_quota(std::vector<std::vector<Rational>> weights, Rational quota,
                                     std::size_t met = 0, std::size_t unmet = 1);
  /// Intersection of several weighted thresholds: `met` only if all are met.
  static DecisionRule k_weighted_quota(std::vector<QuotaComponent> components, std::size_t met = 0,
                                       std::size_t unmet = 1);
  /// `outcomes[i]` is the outcome of the configuration with linear index i.
  static DecisionRule explicit_table(std::vector<std::size_t> outcomes);

  Kind kind() const { return kind_; }
  const std::vector<QuotaComponent>& components() const { return components_; }
  std::size_t met() const { return met_; }
  std::size_t unmet() const { return unmet_; }
  const std::vector<std::size_t>& table() const { return table_; }

  std::optional<bool> declared_monotone;

  /// Checks shapes against the players and outcome space. Throws
  /// ValidationError.
  void validate(const std::vector<PlayerSpace>& players, const OutcomeSpace& outcomes,
                const ConfigurationSpace& space) const;

  /// Outcome index; the configuration is assumed valid.
  std::size_t evaluate(const ConfigurationSpace& space, std::span<const std::size_t> actions) const;

  bool operator==(const DecisionRule& other) const;

 private:
  void prepare_scaled();

  Kind kind_ = Kind::weighted_quota;
  std::vector<QuotaComponent> components_;
  std::size_t met_ = 0;
  std::size_t unmet_ = 1;
  std::vector<std::size_t> table_;

  // Integer images of the rational weights: each component is multiplied by
  // the lcm of its denominators.
  std::vector<std::vector<std::vector<std::int64_t>>> scaled_weights_;
  std::vector<std::int64_t> scaled_quota_;
};

const char* to_string(DecisionRule::Kind kind);

}  // namespace vpow

#endif  // VPOW_RULE_HPP
