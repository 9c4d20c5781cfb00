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

#include "vpow/space.hpp"

#include <limits>

#include "vpow/errors.hpp"

namespace vpow {

std::optional<std::size_t> PlayerSpace::find_action(std::string_view label) const {
  for (std::size_t a = 0; a < actions.size(); ++a) {
    if (actions[a] == label) return a;
  }
  return std::nullopt;
}

Configuration ReducedConfiguration::insert(std::size_t action) const {
  Configuration c;
  c.actions.reserve(actions.size() + 1);
  c.actions.insert(c.actions.end(), actions.begin(), actions.begin() + static_cast<std::ptrdiff_t>(excluded));
  c.actions.push_back(action);
  c.actions.insert(c.actions.end(), actions.begin() + static_cast<std::ptrdiff_t>(excluded), actions.end());
  return c;
}

ReducedConfiguration remove_player(const Configuration& config, std::size_t player) {
  if (player >= config.actions.size()) {
    throw ValidationError("player index " + std::to_string(player) + " out of range");
  }
  ReducedConfiguration r;
  r.excluded = player;
  r.actions = config.actions;
  r.actions.erase(r.actions.begin() + static_cast<std::ptrdiff_t>(player));
  return r;
}

std::optional<std::size_t> OutcomeSpace::find(std::string_view label) const {
  for (std::size_t o = 0; o < labels.size(); ++o) {
    if (labels[o] == label) return o;
  }
  return std::nullopt;
}

ConfigurationSpace::ConfigurationSpace(std::vector<std::size_t> radices)
    : radices_(std::move(radices)), strides_(radices_.size(), 1) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t stride = 1;
  for (std::size_t p = radices_.size(); p-- > 0;) {
    if (radices_[p] == 0) throw ValidationError("player with an empty action set");
    strides_[p] = stride;
    if (stride > kMax / radices_[p]) {
      saturated_ = true;
      stride = kMax;
    } else {
      stride *= radices_[p];
    }
  }
  size_ = stride;
}

std::uint64_t ConfigurationSpace::index_of(std::span<const std::size_t> actions) const {
  if (actions.size() != radices_.size()) {
    throw ValidationError("configuration has " + std::to_string(actions.size()) + " entries, expected " +
                          std::to_string(radices_.size()));
  }
  std::uint64_t index = 0;
  for (std::size_t p = 0; p < actions.size(); ++p) {
    if (actions[p] >= radices_[p]) {
      throw ValidationError("action index " + std::to_string(actions[p]) + " invalid for player " +
                            std::to_string(p));
    }
    index += actions[p] * strides_[p];
  }
  return index;
}

Configuration ConfigurationSpace::decode(std::uint64_t index) const {
  Configuration c;
  decode_into(index, c.actions);
  return c;
}

void ConfigurationSpace::decode_into(std::uint64_t index, std::vector<std::size_t>& actions) const {
  actions.resize(radices_.size());
  for (std::size_t p = 0; p < radices_.size(); ++p) actions[p] = digit(index, p);
}

bool ConfigurationSpace::next(std::vector<std::size_t>& actions) const {
  for (std::size_t p = radices_.size(); p-- > 0;) {
    if (++actions[p] < radices_[p]) return true;
    actions[p] = 0;
  }
  return false;
}

}  // namespace vpow
