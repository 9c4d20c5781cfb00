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


#include "vpow/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "vpow/errors.hpp"
#include "vpow/estimation.hpp"
#include "vpow/game_file.hpp"
#include "vpow/report.hpp"

namespace vpow {
namespace {

struct Options {
  std::string game_file;
  std::string outcome;
  std::string player;
  std::string format = "table";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::string index;
  std::string kind;
  std::string action;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("gamefile", o.game_file, "Game file (JSON)")->required();
  cmd->add_option("--outcome", o.outcome, "Outcome label (default: the rule's 'met' outcome, else the first)");
  cmd->add_option("--player", o.player, "Restrict to one player id");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--cap", o.cap, "Enumeration cap in configurations")->check(CLI::PositiveNumber);
}

std::size_t resolve_outcome(const GeneralVotingGame& game, const std::string& label) {
  if (!label.empty()) return game.outcome_index(label);
  return game.rule.kind() == DecisionRule::Kind::explicit_table ? 0 : game.rule.met();
}

std::optional<std::string> optional_player(const std::string& player) {
  return player.empty() ? std::nullopt : std::optional(player);
}

void emit(std::ostream& out, const Options& o, const nlohmann::json& report, const std::string& table) {
  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << table;
  }
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  const auto game = load_game_file(o.game_file);
  const std::size_t outcome = resolve_outcome(game, o.outcome);

  if (command == "mc") {
    EstimationTarget target = EstimationTarget::outcome_of(outcome);
    if (!o.action.empty()) {
      if (o.player.empty()) throw ValidationError("--action needs --player");
      if (!o.kind.empty()) throw ValidationError("--action and --kind are exclusive");
      const std::size_t p = game.player_index(o.player);
      target = EstimationTarget::conditional_of(outcome, p, game.action_index(p, o.action));
    } else if (!o.player.empty()) {
      target = EstimationTarget::criticality_of(outcome, game.player_index(o.player),
                                                o.kind.empty() ? kTCd : parse_criticality_kind(o.kind));
    } else if (!o.kind.empty()) {
      throw ValidationError("--kind needs --player");
    }
    const auto estimate = mc_estimate(game, target, o.samples, o.seed, o.threads);
    emit(out, o, estimate_json(game, target, estimate), estimate_table(game, target, estimate));
    return kExitOk;
  }

  const EnumeratedGame eg(game, o.cap);
  const auto players = selected_players(game, optional_player(o.player));
  if (command == "analyze") {
    emit(out, o, analysis_json(eg, outcome, players), analysis_table(eg, outcome, players));
  } else if (command == "probabilities") {
    emit(out, o, probabilities_json(eg, outcome, players), probabilities_table(eg, outcome, players));
  } else if (command == "check-identities") {
    const auto checks = check_identities(eg, outcome);
    emit(out, o, identities_json(eg, outcome, checks), identities_table(eg, outcome, checks));
    return all_passed(checks) ? kExitOk : kExitIdentityFailure;
  } else if (command == "mwe") {
    const auto events = minimum_winning_events(eg, outcome);
    emit(out, o, mwe_json(eg, outcome, events), mwe_table(eg, outcome, events));
  } else if (command == "oracle") {
    const auto report = oracle_json(eg, outcome, o.index);
    emit(out, o, report, oracle_table(report));
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte-Carlo voting power for generalized voting games", "vpow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Criticality probabilities, indices and identities");
  auto* probabilities = app.add_subcommand("probabilities", "Elementary probabilities per player");
  auto* oracle = app.add_subcommand("oracle", "Run one classical index algorithm");
  auto* identities = app.add_subcommand("check-identities", "Exact identity suite; exit 2 on failure");
  auto* mwe = app.add_subcommand("mwe", "Minimum winning events with Holler and Deegan-Packel values");
  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate of an outcome, criticality or conditional");
  for (auto* cmd : {analyze, probabilities, oracle, identities, mwe, mc}) add_common(cmd, o);
  oracle->add_option("--index", o.index, "Algorithm name")->required()->check(CLI::IsMember(oracle_names()));
  mc->add_option("--samples", o.samples, "Sample count (>= 100)");
  mc->add_option("--seed", o.seed, "Generator seed");
  mc->add_option("--kind", o.kind, "Criticality kind for --player: IC0, DC0, TC0, ICd, DCd, TCd (default TCd)");
  mc->add_option("--action", o.action, "Estimate Pr(outcome | player plays this action); needs --player");
  mc->add_option("--threads", o.threads, "Worker threads (0 = hardware); results do not depend on it");

  std::vector<const char*> argv{"vpow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, o, out);
  } catch (const NotApplicableError& e) {
    err << "vpow: not applicable: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const UndefinedConditionalError& e) {
    err << "vpow: undefined: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const UndefinedDenominatorError& e) {
    err << "vpow: undefined: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const Error& e) {
    err << "vpow: error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace vpow
