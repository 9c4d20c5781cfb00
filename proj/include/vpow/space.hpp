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

#ifndef VPOW_SPACE_HPP
#define VPOW_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vpow {

/// A player and its finite action set. Actions are declared in order of
/// increasing support for the "winning" outcome: for binary players the
/// first action is "no" and the second "yes". Homogeneity sampling and the
/// permutation Shapley-Shubik oracle rely on that convention.
struct PlayerSpace {
  std::string id;
  std::vector<std::string> actions;
  /// Declared lowest-support action, used by criticality 0.
  std::optional<std::size_t> min_action;

  std::optional<std::size_t> find_action(std::string_view label) const;
  std::size_t action_count() const { return actions.size(); }
  bool operator==(const PlayerSpace&) const = default;
};

/// One action index per player, in player order.
struct Configuration {
  std::vector<std::size_t> actions;
  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

/// A configuration with one player removed. `actions` has n-1 entries, the
/// excluded player's slot is skipped.
struct ReducedConfiguration {
  std::size_t excluded = 0;
  std::vector<std::size_t> actions;

  Configuration insert(std::size_t action) const;
  bool operator==(const ReducedConfiguration&) const = default;
};

ReducedConfiguration remove_player(const Configuration& config, std::size_t player);

/// Finite outcome labels.
struct OutcomeSpace {
  std::vector<std::string> labels;

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t size() const { return labels.size(); }
  bool operator==(const OutcomeSpace&) const = default;
};

/// Mixed-radix indexing of the product space. Player 0 is the most
/// significant digit, so increasing indices walk the configurations in
/// lexicographic order of their action indices.
class ConfigurationSpace {
 public:
  ConfigurationSpace() = default;
  explicit ConfigurationSpace(std::vector<std::size_t> radices);

  std::size_t players() const { return radices_.size(); }
  std::size_t radix(std::size_t player) const { return radices_[player]; }
  std::uint64_t stride(std::size_t player) const { return strides_[player]; }

  /// Number of configurations; saturates at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  bool saturated() const { return saturated_; }

  std::uint64_t index_of(std::span<const std::size_t> actions) const;
  Configuration decode(std::uint64_t index) const;
  void decode_into(std::uint64_t index, std::vector<std::size_t>& actions) const;
  std::size_t digit(std::uint64_t index, std::size_t player) const {
    return static_cast<std::size_t>((index / strides_[player]) % radices_[player]);
  }

  /// Advances `actions` to the lexicographic successor; false after the last.
  bool next(std::vector<std::size_t>& actions) const;

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
  bool saturated_ = false;
};

}  // namespace vpow

#endif  // VPOW_SPACE_HPP
