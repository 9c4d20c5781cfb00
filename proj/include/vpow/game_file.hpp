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


#ifndef VPOW_GAME_FILE_HPP
#define VPOW_GAME_FILE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "vpow/game.hpp"

namespace vpow {

inline constexpr int kGameFileVersion = 1;

/// Parses and validates a game file (schema in docs/game-file-schema.md).
/// Errors name the field path and line, e.g.
/// "players[2].id (line 14): duplicate player id 'C'".
GeneralVotingGame parse_game_file(std::string_view text);
GeneralVotingGame load_game_file(const std::string& path);

/// Canonical JSON form; parse_game_file(serialize_game(g)) == g.
nlohmann::json game_to_json(const GeneralVotingGame& game);
std::string serialize_game(const GeneralVotingGame& game);

/// Number for integers, "p/q" string otherwise.
nlohmann::json rational_to_json(const Rational& value);

}  // namespace vpow

#endif  // VPOW_GAME_FILE_HPP
