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


#ifndef VPOW_REPORT_HPP
#define VPOW_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vpow/criticality.hpp"
#include "vpow/estimation.hpp"
#include "vpow/game.hpp"
#include "vpow/indices.hpp"

namespace vpow {

inline constexpr const char* kToolVersion = "0.1.0";

/// {"fraction": "p/q", "decimal": "0.xxxxxxxxxxxx"}.
nlohmann::json rational_json(const Rational& value);

enum class CheckStatus { pass, fail, skipped };
const char* to_string(CheckStatus status);

struct IdentityCheck {
  std::string name;
  std::optional<std::size_t> player;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

/// Exact identity suite for one outcome: criticality formulas against the
/// direct path, the Coleman fractions, total probability, and the classical
/// oracles where their domain applies. Formula identities are skipped under
/// dependent models, where conditioning and substitution differ.
std::vector<IdentityCheck> check_identities(const EnumeratedGame& eg, std::size_t outcome);

bool all_passed(const std::vector<IdentityCheck>& checks);

/// Players to include: all, or the one named by `player`.
std::vector<std::size_t> selected_players(const GeneralVotingGame& game, const std::optional<std::string>& player);

// Each report comes as a JSON document with sorted keys and as a fixed-width
// table. Every JSON report carries "game", "model" and "version".

nlohmann::json analysis_json(const EnumeratedGame& eg, std::size_t outcome, const std::vector<std::size_t>& players);
std::string analysis_table(const EnumeratedGame& eg, std::size_t outcome, const std::vector<std::size_t>& players);

nlohmann::json probabilities_json(const EnumeratedGame& eg, std::size_t outcome,
                                  const std::vector<std::size_t>& players);
std::string probabilities_table(const EnumeratedGame& eg, std::size_t outcome,
                                const std::vector<std::size_t>& players);

nlohmann::json identities_json(const EnumeratedGame& eg, std::size_t outcome, const std::vector<IdentityCheck>& checks);
std::string identities_table(const EnumeratedGame& eg, std::size_t outcome, const std::vector<IdentityCheck>& checks);

nlohmann::json mwe_json(const EnumeratedGame& eg, std::size_t outcome, const std::vector<MinimumWinningEvent>& events);
std::string mwe_table(const EnumeratedGame& eg, std::size_t outcome, const std::vector<MinimumWinningEvent>& events);

/// Classical algorithm names accepted by the oracle report.
const std::vector<std::string>& oracle_names();
/// Runs the named algorithm; throws ValidationError for unknown names and
/// propagates NotApplicableError from the algorithm.
nlohmann::json oracle_json(const EnumeratedGame& eg, std::size_t outcome, const std::string& name);
std::string oracle_table(const nlohmann::json& report);

nlohmann::json estimate_json(const GeneralVotingGame& game, const EstimationTarget& target, const Estimate& estimate);
std::string estimate_table(const GeneralVotingGame& game, const EstimationTarget& target, const Estimate& estimate);

/// Fixed-width rendering; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace vpow

#endif  // VPOW_REPORT_HPP
