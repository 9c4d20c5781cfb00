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


#ifndef VPOW_ESTIMATION_HPP
#define VPOW_ESTIMATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "vpow/criticality.hpp"
#include "vpow/game.hpp"

namespace vpow {

/// Counter-based generator: every draw is a pure function of
/// (seed, sample index, lane), so any partition of the sample range sees the
/// same stream. Each word is splitmix64 applied three times in sequence.
std::uint64_t random_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane);
/// Uniform double in [0, 1) from the top 53 bits of random_word.
double random_unit(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane);

/// What to estimate.
struct EstimationTarget {
  enum class Kind { outcome, criticality, conditional };

  Kind kind = Kind::outcome;
  std::size_t outcome = 0;
  std::size_t player = 0;
  CriticalityKind criticality = kTCd;
  std::size_t action = 0;

  static EstimationTarget outcome_of(std::size_t outcome);
  static EstimationTarget criticality_of(std::size_t outcome, std::size_t player, CriticalityKind kind);
  /// Pr(O | player plays action).
  static EstimationTarget conditional_of(std::size_t outcome, std::size_t player, std::size_t action);
};

struct Estimate {
  double point = 0.0;
  double standard_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t samples = 0;
  /// Samples entering the mean; below `samples` only under rejection.
  std::uint64_t accepted = 0;
  std::uint64_t hits = 0;
  std::uint64_t seed = 0;
  /// "direct", "forced-substitution" or "rejection".
  std::string method;
};

inline constexpr std::uint64_t kMinimumSamples = 100;
inline constexpr double kMinimumAcceptanceRate = 1e-4;

/// Indicator-mean estimate with a 95% normal interval. `threads` = 0 picks
/// the hardware concurrency; the result does not depend on it. Throws
/// ValidationError for fewer than kMinimumSamples samples and
/// EstimationError when rejection accepts too few samples.
Estimate mc_estimate(const GeneralVotingGame& game, const EstimationTarget& target, std::uint64_t samples,
                     std::uint64_t seed, unsigned threads = 0);

}  // namespace vpow

#endif  // VPOW_ESTIMATION_HPP
