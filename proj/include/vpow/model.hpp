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

#ifndef VPOW_MODEL_HPP
#define VPOW_MODEL_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vpow/rational.hpp"
#include "vpow/space.hpp"

namespace vpow {

/// The probability measure over configurations.
///
/// Product-type models (uniform, product) make players independent; the
/// homogeneity, explicit-table and mixture kinds can correlate them. The
/// distinction matters for conditioning: under independence, conditioning
/// on a player's action equals substituting that action, otherwise it does
/// not.
class ProbabilityModel {
 public:
  enum class Kind { uniform, product, homogeneity, explicit_table, mixture };

  struct Component;

  ProbabilityModel() = default;

  static ProbabilityModel uniform();
  /// distributions[player][action].
  static ProbabilityModel product(std::vector<std::vector<Rational>> distributions);
  /// Common yes-probability p drawn uniformly on [0,1]; binary players only.
  static ProbabilityModel homogeneity();
  /// Joint masses; configurations absent from the table have mass 0.
  static ProbabilityModel explicit_table(std::map<Configuration, Rational> masses);
  static ProbabilityModel mixture(std::vector<Component> components);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<Rational>>& distributions() const { return distributions_; }
  const std::map<Configuration, Rational>& table() const { return table_; }
  const std::vector<Component>& components() const { return components_; }

  /// True when the model makes players independent.
  bool is_product() const;

  /// Checks every invariant against the players; throws ValidationError
  /// naming the offending sum when masses do not add up to 1.
  void validate(const std::vector<PlayerSpace>& players) const;

  /// Pr(dω) for one configuration.
  Rational mass(const std::vector<PlayerSpace>& players, std::span<const std::size_t> actions) const;

  /// Marginal distribution of a single player's action.
  std::vector<Rational> action_marginal(const std::vector<PlayerSpace>& players, std::size_t player) const;

  std::string label() const;

  bool operator==(const ProbabilityModel& other) const;

 private:
  Kind kind_ = Kind::uniform;
  std::vector<std::vector<Rational>> distributions_;
  std::map<Configuration, Rational> table_;
  std::vector<Component> components_;
};

struct ProbabilityModel::Component {
  Rational weight;
  std::shared_ptr<const ProbabilityModel> model;
};

const char* to_string(ProbabilityModel::Kind kind);

/// k!(n-k)!/(n+1)!: the integral of p^k (1-p)^(n-k) over p in [0,1].
Rational homogeneity_mass_closed_form(std::size_t n, std::size_t k);

/// Mass function over the configurations of the other players, indexed by
/// the linear index of `space` (the product space without `excluded`).
struct ReducedMass {
  std::size_t excluded = 0;
  ConfigurationSpace space;
  std::vector<Rational> mass;
};

/// λ: sums the joint mass over the excluded player's actions. Brute force
/// over the full product space.
ReducedMass marginalize(const ProbabilityModel& model, const std::vector<PlayerSpace>& players,
                        std::size_t excluded);

}  // namespace vpow

#endif  // VPOW_MODEL_HPP
