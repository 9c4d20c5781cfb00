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

#ifndef VPOW_CRITICALITY_HPP
#define VPOW_CRITICALITY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "vpow/game.hpp"

namespace vpow {

enum class Direction { increasing, decreasing, total };
enum class Assumption { zero, delta };

struct CriticalityKind {
  Direction direction;
  Assumption assumption;
  bool operator==(const CriticalityKind&) const = default;
};

inline constexpr CriticalityKind kIC0{Direction::increasing, Assumption::zero};
inline constexpr CriticalityKind kDC0{Direction::decreasing, Assumption::zero};
inline constexpr CriticalityKind kTC0{Direction::total, Assumption::zero};
inline constexpr CriticalityKind kICd{Direction::increasing, Assumption::delta};
inline constexpr CriticalityKind kDCd{Direction::decreasing, Assumption::delta};
inline constexpr CriticalityKind kTCd{Direction::total, Assumption::delta};

/// Report order: IC^0, DC^0, TC^0, IC^δ, DC^δ, TC^δ.
inline constexpr std::array<CriticalityKind, 6> kCriticalityKinds{kIC0, kDC0, kTC0, kICd, kDCd, kTCd};

std::size_t slot(CriticalityKind kind);
/// "IC^0", "DC^delta", ...
std::string to_string(CriticalityKind kind);
/// Accepts "IC0", "IC^0", "ICd", "IC^delta", ... (case-insensitive).
CriticalityKind parse_criticality_kind(std::string_view text);

/// x_i^Omax / x_i^Omin for one configuration of the others. Ties go to the
/// lowest action index; `achieves` tells whether the chosen action yields O.
struct ActionChoice {
  std::size_t action = 0;
  bool achieves = false;
};

ActionChoice best_action(const GeneralVotingGame& game, std::size_t outcome, const ReducedConfiguration& reduced);
ActionChoice worst_action(const GeneralVotingGame& game, std::size_t outcome, const ReducedConfiguration& reduced);

/// W(ω) != O and some action of the player yields O. Under the zero
/// assumption the player must also start from its lowest support: the
/// declared minimal action if the player has one, else worst_action.
bool is_increasingly_critical(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                              const Configuration& config, Assumption assumption);
/// W(ω) = O and switching to worst_action destroys O. The final vote is
/// worst_action under both assumptions, so the zero and delta sets coincide.
bool is_decreasingly_critical(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                              const Configuration& config, Assumption assumption);
bool is_critical(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                 const Configuration& config, CriticalityKind kind);

/// Direct path: mass-weighted count of member configurations. The range
/// overload restricts the sum to linear indices in [first, last).
Rational criticality_probability(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                 CriticalityKind kind);
Rational criticality_probability_range(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                       CriticalityKind kind, std::uint64_t first, std::uint64_t last);

/// A formula-path value, or the reason it is not available.
struct FormulaValue {
  std::optional<Rational> value;
  std::string note;
};

/// The three (four) probabilities every index reduces to.
struct ElementaryProbabilities {
  Conditioning conditioning = Conditioning::substitution;
  Rational outcome;                        // Pr(O)
  std::optional<Rational> given_max;       // Pr(O | x_max)
  std::optional<Rational> given_min;       // Pr(O | x_min)
  /// Constant lowest-support action used by the criticality-0 formulas.
  std::optional<std::size_t> reference_action;
  std::string reference_source;            // "declared", "monotone-binary" or why none
  std::optional<Rational> reference_probability;  // Pr(x_min)
  std::optional<Rational> given_reference;        // Pr(O | x_min) for the reference action
  /// Actions that are best (worst) responses for every configuration of the
  /// others, when they exist.
  std::optional<std::size_t> constant_best;
  std::optional<std::size_t> constant_worst;
  std::string note;
};

struct CriticalityReport {
  std::size_t player = 0;
  std::size_t outcome = 0;
  std::array<Rational, 6> direct;
  std::array<FormulaValue, 6> formula;
  ElementaryProbabilities elementary;
  /// Σ mass over configurations with W(ω) != O, summed directly.
  Rational complement_mass;
};

/// Both paths in one pass over the configurations of the others.
CriticalityReport criticality_report(const EnumeratedGame& eg, std::size_t outcome, std::size_t player);

/// Formula path for a single kind. Throws NotApplicableError or
/// UndefinedConditionalError when the value is unavailable.
Rational criticality_probability_formula(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                         CriticalityKind kind);

}  // namespace vpow

#endif  // VPOW_CRITICALITY_HPP
