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


#include "vpow/report.hpp"

#include <algorithm>
#include <sstream>

#include "vpow/errors.hpp"

namespace vpow {
namespace {

using nlohmann::json;

constexpr const char* kDependentSkip =
    "dependent model: the formula uses Bayes conditioning and need not match the direct path";

json optional_rational(const std::optional<Rational>& value) {
  return value ? rational_json(*value) : json(nullptr);
}

std::string cell(const std::optional<Rational>& value) { return value ? to_fraction_string(*value) : "-"; }

std::string both(const Rational& value) {
  return to_fraction_string(value) + " (" + to_decimal_string(value) + ")";
}

// "87.5%": rounded to two places, trailing zeros dropped.
std::string percent(const Rational& value) {
  std::string s = to_decimal_string(value * 100, 2);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s + "%";
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

const std::string& outcome_label(const EnumeratedGame& eg, std::size_t outcome) {
  return eg.game().outcomes.labels[outcome];
}

json game_json(const GeneralVotingGame& game, std::optional<std::uint64_t> configurations, const std::string& outcome,
               const char* path) {
  json players = json::array();
  for (const auto& p : game.players) players.push_back(json{{"id", p.id}, {"actions", p.actions}});
  return json{{"title", game.title},
              {"description", game.description},
              {"players", std::move(players)},
              {"outcomes", game.outcomes.labels},
              {"outcome", outcome},
              {"rule", to_string(game.rule.kind())},
              {"configurations", configurations ? json(*configurations) : json(nullptr)},
              {"path", path}};
}

json model_json(const ProbabilityModel& model) {
  return json{{"label", model.label()},
              {"kind", to_string(model.kind())},
              {"conditioning", to_string(conditioning_for(model))}};
}

json base_report(const EnumeratedGame& eg, std::size_t outcome) {
  return json{{"game", game_json(eg.game(), eg.size(), outcome_label(eg, outcome), "exact")},
              {"model", model_json(eg.game().model)},
              {"version", kToolVersion}};
}

std::string header(const GeneralVotingGame& game, const std::string& command, std::optional<std::uint64_t> size,
                   const std::string& outcome) {
  std::ostringstream out;
  out << "vpow " << kToolVersion << "  " << command << "\n";
  out << "game:    " << (game.title.empty() ? "(untitled)" : game.title) << "  [" << game.players.size()
      << " players, " << (size ? std::to_string(*size) : std::string("> 2^64")) << " configurations, rule "
      << to_string(game.rule.kind()) << "]\n";
  out << "model:   " << game.model.label() << "  [conditioning: " << to_string(conditioning_for(game.model))
      << "]\n";
  out << "outcome: " << outcome << "\n";
  return out.str();
}

json index_entry_json(const IndexEntry& e) {
  json out{{"oracle", optional_rational(e.oracle)},
           {"formula", optional_rational(e.formula)},
           {"normalized", optional_rational(e.normalized)},
           {"model", e.model}};
  if (!e.note.empty()) out["note"] = e.note;
  return out;
}

std::vector<std::pair<const char*, const IndexEntry PlayerIndices::*>> index_fields() {
  return {{"shapley_shubik", &PlayerIndices::shapley_shubik},
          {"banzhaf", &PlayerIndices::banzhaf},
          {"straffin_independence", &PlayerIndices::straffin_independence},
          {"straffin_homogeneity", &PlayerIndices::straffin_homogeneity},
          {"johnston_raw", &PlayerIndices::johnston_raw},
          {"johnston_fractional", &PlayerIndices::johnston_fractional},
          {"coleman_initiate", &PlayerIndices::coleman_initiate},
          {"coleman_prevent", &PlayerIndices::coleman_prevent},
          {"deegan_packel", &PlayerIndices::deegan_packel},
          {"holler", &PlayerIndices::holler}};
}

json elementary_json(const GeneralVotingGame& game, std::size_t player, const ElementaryProbabilities& el) {
  json out{{"outcome", rational_json(el.outcome)},
           {"given_max", optional_rational(el.given_max)},
           {"given_min", optional_rational(el.given_min)},
           {"reference_action",
            el.reference_action ? json(game.players[player].actions[*el.reference_action]) : json(nullptr)},
           {"reference_source", el.reference_source},
           {"reference_probability", optional_rational(el.reference_probability)},
           {"given_reference", optional_rational(el.given_reference)},
           {"conditioning", to_string(el.conditioning)}};
  if (el.given_max && el.given_min) out["total_power"] = rational_json(*el.given_max - *el.given_min);
  if (!el.note.empty()) out["note"] = el.note;
  return out;
}

json identity_list_json(const GeneralVotingGame& game, const std::vector<IdentityCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back(json{{"name", c.name},
                       {"player", c.player ? json(game.players[*c.player].id) : json(nullptr)},
                       {"status", to_string(c.status)},
                       {"detail", c.detail}});
  }
  return out;
}

std::string configuration_text(const GeneralVotingGame& game, const Configuration& c) {
  std::string s = "(";
  for (std::size_t p = 0; p < c.actions.size(); ++p) s += (p ? "," : "") + game.players[p].actions[c.actions[p]];
  return s + ")";
}

std::string supporter_text(const GeneralVotingGame& game, const std::vector<std::size_t>& supporters) {
  std::string s = "{";
  for (std::size_t i = 0; i < supporters.size(); ++i) s += (i ? "," : "") + game.players[supporters[i]].id;
  return s + "}";
}

}  // namespace

json rational_json(const Rational& value) {
  return json{{"fraction", to_fraction_string(value)}, {"decimal", to_decimal_string(value)}};
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

bool all_passed(const std::vector<IdentityCheck>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
}

std::vector<std::size_t> selected_players(const GeneralVotingGame& game, const std::optional<std::string>& player) {
  if (player) return {game.player_index(*player)};
  std::vector<std::size_t> all(game.players.size());
  for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
  return all;
}

std::vector<IdentityCheck> check_identities(const EnumeratedGame& eg, std::size_t outcome) {
  const auto& game = eg.game();
  std::vector<IdentityCheck> checks;
  auto compare = [&](const std::string& name, std::optional<std::size_t> player, const Rational& lhs,
                     const Rational& rhs) {
    const bool ok = lhs == rhs;
    checks.push_back(IdentityCheck{name, player, ok ? CheckStatus::pass : CheckStatus::fail,
                                   to_fraction_string(lhs) + (ok ? " = " : " != ") + to_fraction_string(rhs)});
  };
  auto skip = [&](const std::string& name, std::optional<std::size_t> player, const std::string& why) {
    checks.push_back(IdentityCheck{name, player, CheckStatus::skipped, why});
  };

  Rational total = 0;
  for (std::size_t o = 0; o < game.outcomes.size(); ++o) total += outcome_probability(eg, o);
  compare("outcome-probabilities-sum-to-one", std::nullopt, total, Rational(1));

  const bool product = game.model.is_product();
  const bool binary = game.all_binary();
  const auto mono = is_monotone(eg, outcome);
  // The classical yes/no algorithms read action 1 as the supporting vote.
  bool yes_is_higher = mono.monotone;
  for (const auto& levels : mono.levels) yes_is_higher = yes_is_higher && levels.size() == 2 && levels[1] >= levels[0];

  struct FormulaIdentity {
    const char* name;
    CriticalityKind kind;
  };
  const FormulaIdentity formula_identities[] = {{"dc-zero-formula", kDC0},     {"dc-delta-formula", kDCd},
                                                {"ic-delta-formula", kICd},    {"tc-delta-formula", kTCd},
                                                {"ic-zero-formula", kIC0},     {"tc-zero-formula", kTC0}};

  for (std::size_t p = 0; p < game.players.size(); ++p) {
    const auto rep = criticality_report(eg, outcome, p);

    bool paths_agree = true;
    std::string detail = "report and enumeration agree on all six kinds";
    for (auto kind : kCriticalityKinds) {
      const Rational other = criticality_probability(eg, outcome, p, kind);
      if (other != rep.direct[slot(kind)]) {
        paths_agree = false;
        detail = to_string(kind) + ": " + to_fraction_string(rep.direct[slot(kind)]) +
                 " != " + to_fraction_string(other);
        break;
      }
    }
    checks.push_back(IdentityCheck{"direct-paths-agree", p, paths_agree ? CheckStatus::pass : CheckStatus::fail,
                                   detail});
    compare("dc-zero-equals-dc-delta", p, rep.direct[slot(kDC0)], rep.direct[slot(kDCd)]);
    compare("tc-delta-is-disjoint-union", p, rep.direct[slot(kTCd)],
            criticality_probability(eg, outcome, p, kICd) + criticality_probability(eg, outcome, p, kDCd));

    for (const auto& id : formula_identities) {
      const auto& f = rep.formula[slot(id.kind)];
      if (!product) {
        skip(id.name, p, kDependentSkip);
      } else if (!f.value) {
        skip(id.name, p, f.note);
      } else {
        compare(id.name, p, rep.direct[slot(id.kind)], *f.value);
      }
    }
    if (rep.formula[slot(kTCd)].value) {
      compare("formula-tc-equals-ic-plus-dc", p, *rep.formula[slot(kTCd)].value,
              *rep.formula[slot(kICd)].value + *rep.formula[slot(kDCd)].value);
    } else {
      skip("formula-tc-equals-ic-plus-dc", p, rep.formula[slot(kTCd)].note);
    }

    if (product) {
      Rational recombined = 0;
      for (std::size_t a = 0; a < game.players[p].actions.size(); ++a) {
        const Rational pa = action_probability(game, p, a);
        if (sgn(pa) != 0) recombined += pa * conditional_outcome_probability(eg, outcome, p, a);
      }
      compare("law-of-total-probability", p, recombined, rep.elementary.outcome);
    } else {
      skip("law-of-total-probability", p, "checked for independent players only");
    }

    const Rational& pr_o = rep.elementary.outcome;
    const auto elementary = elementary_index_report(rep, game.model);
    if (!product) {
      skip("coleman-initiate", p, kDependentSkip);
      skip("coleman-prevent", p, kDependentSkip);
    } else {
      if (pr_o == 1) {
        skip("coleman-initiate", p, "undefined: 1 - Pr(O) = 0");
      } else {
        compare("coleman-initiate", p, rep.direct[slot(kICd)] / rep.complement_mass, *elementary.coleman_initiate.value);
      }
      if (sgn(pr_o) == 0) {
        skip("coleman-prevent", p, "undefined: Pr(O) = 0");
      } else {
        compare("coleman-prevent", p, rep.direct[slot(kDCd)] / pr_o, *elementary.coleman_prevent.value);
      }
    }

    if (binary && mono.monotone) {
      compare("ic-zero-equals-ic-delta", p, rep.direct[slot(kIC0)], rep.direct[slot(kICd)]);
    } else {
      skip("ic-zero-equals-ic-delta", p, "holds for monotone yes/no games only");
    }
  }

  if (binary) {
    const auto uniform_game = with_model(game, ProbabilityModel::uniform());
    const EnumeratedGame uniform_eg(uniform_game);
    const auto banzhaf = banzhaf_combinations(game, outcome);
    for (std::size_t p = 0; p < game.players.size(); ++p) {
      compare("banzhaf-combinations-equal-uniform-tc-delta", p, banzhaf[p],
              criticality_probability_formula(uniform_eg, outcome, p, kTCd));
    }
    if (yes_is_higher && game.players.size() <= 10) {
      const auto homogeneity_game = with_model(game, ProbabilityModel::homogeneity());
      const EnumeratedGame homogeneity_eg(homogeneity_game);
      const auto ss = shapley_shubik_permutation(game, outcome);
      for (std::size_t p = 0; p < game.players.size(); ++p) {
        compare("shapley-shubik-equals-homogeneity-tc-delta", p, ss[p],
                criticality_probability(homogeneity_eg, outcome, p, kTCd));
      }
    } else {
      skip("shapley-shubik-equals-homogeneity-tc-delta", std::nullopt,
           "needs a monotone yes/no rule with action 1 as the supporting vote and at most 10 players");
    }
  } else {
    skip("banzhaf-combinations-equal-uniform-tc-delta", std::nullopt, "classical algorithm needs yes/no players");
    skip("shapley-shubik-equals-homogeneity-tc-delta", std::nullopt, "classical algorithm needs yes/no players");
  }
  return checks;
}

json analysis_json(const EnumeratedGame& eg, std::size_t outcome, const std::vector<std::size_t>& players) {
  const auto& game = eg.game();
  json report = base_report(eg, outcome);
  const auto indices = index_report(eg, outcome);
  json out = json::array();
  for (auto p : players) {
    const auto rep = criticality_report(eg, outcome, p);
    json crit = json::object();
    for (auto kind : kCriticalityKinds) {
      const auto& f = rep.formula[slot(kind)];
      json entry{{"direct", rational_json(rep.direct[slot(kind)])}, {"formula", optional_rational(f.value)}};
      if (!f.value) entry["note"] = f.note;
      crit[to_string(kind)] = std::move(entry);
    }
    json idx = json::object();
    for (const auto& [name, field] : index_fields()) idx[name] = index_entry_json(indices.players[p].*field);
    out.push_back(json{{"id", game.players[p].id},
                       {"criticality", std::move(crit)},
                       {"elementary", elementary_json(game, p, rep.elementary)},
                       {"indices", std::move(idx)}});
  }
  report["players"] = std::move(out);
  report["identities"] = identity_list_json(game, check_identities(eg, outcome));
  return report;
}

std::string analysis_table(const EnumeratedGame& eg, std::size_t outcome, const std::vector<std::size_t>& players) {
  const auto& game = eg.game();
  const auto indices = index_report(eg, outcome);
  std::ostringstream out;
  out << header(game, "analyze", eg.size(), outcome_label(eg, outcome));
  out << "Pr(" << outcome_label(eg, outcome) << ") = " << both(outcome_probability(eg, outcome)) << "\n\n";

  std::vector<std::vector<std::string>> direct{{"player"}}, formula{{"player"}};
  for (auto kind : kCriticalityKinds) {
    direct[0].push_back(to_string(kind));
    formula[0].push_back(to_string(kind));
  }
  std::vector<std::string> notes;
  for (auto p : players) {
    const auto rep = criticality_report(eg, outcome, p);
    std::vector<std::string> d{game.players[p].id}, f{game.players[p].id};
    for (auto kind : kCriticalityKinds) {
      d.push_back(to_fraction_string(rep.direct[slot(kind)]));
      f.push_back(cell(rep.formula[slot(kind)].value));
    }
    direct.push_back(std::move(d));
    formula.push_back(std::move(f));
    for (const auto& fv : rep.formula) {
      if (!fv.value && !fv.note.empty()) {
        notes.push_back(game.players[p].id + ": " + fv.note);
        break;
      }
    }
  }
  out << "Criticality probabilities, direct enumeration\n" << render_table(direct) << "\n";
  out << "Criticality probabilities, elementary-probability formulas\n" << render_table(formula);
  for (const auto& n : notes) out << "  note " << n << "\n";
  out << "\n";

  std::vector<std::vector<std::string>> classical{
      {"player", "Banzhaf", "Banzhaf norm", "SS perm", "SS formula", "Johnston raw", "Johnston frac", "Holler norm",
       "Deegan-Packel norm"}};
  std::vector<std::vector<std::string>> prob{
      {"player", "Straffin indep", "Straffin homog", "homog formula", "Coleman initiate", "init formula",
       "Coleman prevent", "prevent formula"}};
  for (auto p : players) {
    const auto& ix = indices.players[p];
    classical.push_back({game.players[p].id, cell(ix.banzhaf.oracle), cell(ix.banzhaf.normalized),
                         cell(ix.shapley_shubik.oracle), cell(ix.shapley_shubik.formula), cell(ix.johnston_raw.oracle),
                         cell(ix.johnston_fractional.oracle), cell(ix.holler.normalized),
                         cell(ix.deegan_packel.normalized)});
    prob.push_back({game.players[p].id, cell(ix.straffin_independence.oracle), cell(ix.straffin_homogeneity.oracle),
                    cell(ix.straffin_homogeneity.formula), cell(ix.coleman_initiate.oracle),
                    cell(ix.coleman_initiate.formula), cell(ix.coleman_prevent.oracle),
                    cell(ix.coleman_prevent.formula)});
  }
  out << "Classical indices\n" << render_table(classical) << "\n";
  out << "Probabilistic indices\n" << render_table(prob) << "\n";

  const auto checks = check_identities(eg, outcome);
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : checks) {
    passed += c.status == CheckStatus::pass;
    failed += c.status == CheckStatus::fail;
    skipped += c.status == CheckStatus::skipped;
  }
  out << "Identities: " << passed << " pass, " << failed << " fail, " << skipped << " skipped\n";
  return out.str();
}

json probabilities_json(const EnumeratedGame& eg, std::size_t outcome, const std::vector<std::size_t>& players) {
  const auto& game = eg.game();
  json report = base_report(eg, outcome);
  json out = json::array();
  for (auto p : players) {
    const auto rep = criticality_report(eg, outcome, p);
    out.push_back(json{{"id", game.players[p].id}, {"elementary", elementary_json(game, p, rep.elementary)}});
  }
  report["players"] = std::move(out);
  return report;
}

std::string probabilities_table(const EnumeratedGame& eg, std::size_t outcome,
                                const std::vector<std::size_t>& players) {
  const auto& game = eg.game();
  const std::string& o = outcome_label(eg, outcome);
  std::ostringstream out;
  out << header(game, "probabilities", eg.size(), o) << "\n";
  std::vector<std::vector<std::string>> rows{
      {"player", "Pr(O)", "Pr(O|x_max)", "Pr(O|x_min)", "Pr(x_min)", "total power"}};
  std::vector<std::string> sentences;
  for (auto p : players) {
    const auto el = criticality_report(eg, outcome, p).elementary;
    std::optional<Rational> power;
    if (el.given_max && el.given_min) power = *el.given_max - *el.given_min;
    rows.push_back({game.players[p].id, to_fraction_string(el.outcome), cell(el.given_max), cell(el.given_min),
                    cell(el.reference_probability), cell(power)});
    if (power) {
      sentences.push_back(game.players[p].id + ": total voting power for '" + o + "' is " + percent(*el.given_max) +
                          " - " + percent(*el.given_min) + " = " + percent(*power));
    } else {
      sentences.push_back(game.players[p].id + ": " + el.note);
    }
  }
  out << render_table(rows) << "\n";
  for (const auto& s : sentences) out << s << "\n";
  return out.str();
}

json identities_json(const EnumeratedGame& eg, std::size_t outcome, const std::vector<IdentityCheck>& checks) {
  json report = base_report(eg, outcome);
  report["identities"] = identity_list_json(eg.game(), checks);
  report["passed"] = all_passed(checks);
  return report;
}

std::string identities_table(const EnumeratedGame& eg, std::size_t outcome, const std::vector<IdentityCheck>& checks) {
  const auto& game = eg.game();
  std::ostringstream out;
  out << header(game, "check-identities", eg.size(), outcome_label(eg, outcome)) << "\n";
  std::vector<std::vector<std::string>> rows{{"identity", "player", "status", "detail"}};
  for (const auto& c : checks) {
    rows.push_back({c.name, c.player ? game.players[*c.player].id : "-", to_string(c.status), c.detail});
  }
  out << render_table(rows);
  out << (all_passed(checks) ? "all identities hold\n" : "IDENTITY FAILURE\n");
  return out.str();
}

json mwe_json(const EnumeratedGame& eg, std::size_t outcome, const std::vector<MinimumWinningEvent>& events) {
  const auto& game = eg.game();
  json report = base_report(eg, outcome);
  json list = json::array();
  for (const auto& e : events) {
    json config = json::object();
    for (std::size_t p = 0; p < game.players.size(); ++p) {
      config[game.players[p].id] = game.players[p].actions[e.configuration.actions[p]];
    }
    json supporters = json::array();
    for (auto p : e.supporters) supporters.push_back(game.players[p].id);
    list.push_back(json{{"configuration", std::move(config)}, {"supporters", std::move(supporters)}});
  }
  const auto hol = holler(eg, outcome);
  const auto dp = deegan_packel(eg, outcome);
  json players = json::array();
  for (std::size_t p = 0; p < game.players.size(); ++p) {
    players.push_back(json{{"id", game.players[p].id},
                           {"holler", json{{"raw", rational_json(hol.raw[p])},
                                           {"normalized", rational_json(hol.normalized[p])}}},
                           {"deegan_packel", json{{"raw", rational_json(dp.raw[p])},
                                                  {"normalized", rational_json(dp.normalized[p])}}}});
  }
  report["events"] = std::move(list);
  report["players"] = std::move(players);
  return report;
}

std::string mwe_table(const EnumeratedGame& eg, std::size_t outcome, const std::vector<MinimumWinningEvent>& events) {
  const auto& game = eg.game();
  std::ostringstream out;
  out << header(game, "mwe", eg.size(), outcome_label(eg, outcome)) << "\n";
  std::vector<std::vector<std::string>> rows{{"#", "supporters", "configuration"}};
  for (std::size_t i = 0; i < events.size(); ++i) {
    rows.push_back({std::to_string(i + 1), supporter_text(game, events[i].supporters),
                    configuration_text(game, events[i].configuration)});
  }
  out << render_table(rows) << "\n";
  const auto hol = holler(eg, outcome);
  const auto dp = deegan_packel(eg, outcome);
  std::vector<std::vector<std::string>> idx{{"player", "Holler raw", "Holler norm", "Deegan-Packel raw",
                                             "Deegan-Packel norm"}};
  for (std::size_t p = 0; p < game.players.size(); ++p) {
    idx.push_back({game.players[p].id, to_fraction_string(hol.raw[p]), to_fraction_string(hol.normalized[p]),
                   to_fraction_string(dp.raw[p]), to_fraction_string(dp.normalized[p])});
  }
  out << render_table(idx);
  return out.str();
}

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names{"banzhaf",  "coleman", "deegan-packel",
                                              "holler",   "johnston", "shapley-shubik"};
  return names;
}

json oracle_json(const EnumeratedGame& eg, std::size_t outcome, const std::string& name) {
  const auto& game = eg.game();
  json report = base_report(eg, outcome);
  report["oracle"] = name;
  json players = json::array();
  auto add = [&](std::size_t p, json values) {
    values["id"] = game.players[p].id;
    players.push_back(std::move(values));
  };
  const std::size_t n = game.players.size();
  if (name == "shapley-shubik") {
    const auto v = shapley_shubik_permutation(game, outcome);
    for (std::size_t p = 0; p < n; ++p) add(p, json{{"value", rational_json(v[p])}});
  } else if (name == "banzhaf") {
    const auto v = banzhaf_combinations(game, outcome);
    const auto norm = normalize(v);
    for (std::size_t p = 0; p < n; ++p) {
      add(p, json{{"value", rational_json(v[p])}, {"normalized", rational_json(norm[p])}});
    }
  } else if (name == "johnston") {
    const auto v = johnston(game, outcome);
    for (std::size_t p = 0; p < n; ++p) {
      add(p, json{{"raw", rational_json(v.raw[p])}, {"fractional", rational_json(v.fractional[p])}});
    }
    if (!v.warning.empty()) report["warning"] = v.warning;
  } else if (name == "coleman") {
    for (std::size_t p = 0; p < n; ++p) {
      const auto init = coleman_initiate(eg, outcome, p);
      const auto prev = coleman_prevent(eg, outcome, p);
      add(p, json{{"initiate", rational_json(init.direct)}, {"prevent", rational_json(prev.direct)}});
    }
  } else if (name == "holler" || name == "deegan-packel") {
    const auto v = name == "holler" ? holler(eg, outcome) : deegan_packel(eg, outcome);
    for (std::size_t p = 0; p < n; ++p) {
      add(p, json{{"value", rational_json(v.raw[p])}, {"normalized", rational_json(v.normalized[p])}});
    }
  } else {
    std::string known;
    for (const auto& k : oracle_names()) known += (known.empty() ? "" : ", ") + k;
    throw ValidationError("unknown oracle '" + name + "' (expected one of: " + known + ")");
  }
  report["players"] = std::move(players);
  return report;
}

std::string oracle_table(const json& report) {
  std::ostringstream out;
  out << "vpow " << kToolVersion << "  oracle " << report["oracle"].get<std::string>() << "\n";
  out << "game:    " << report["game"]["title"].get<std::string>() << "\n";
  out << "outcome: " << report["game"]["outcome"].get<std::string>() << "\n\n";
  std::vector<std::vector<std::string>> rows{{"player"}};
  for (const auto& [key, value] : report["players"][0].items()) {
    if (key != "id") rows[0].push_back(key);
  }
  for (const auto& entry : report["players"]) {
    std::vector<std::string> row{entry["id"].get<std::string>()};
    for (std::size_t c = 1; c < rows[0].size(); ++c) {
      const auto& v = entry[rows[0][c]];
      row.push_back(v["fraction"].get<std::string>() + " (" + v["decimal"].get<std::string>() + ")");
    }
    rows.push_back(std::move(row));
  }
  out << render_table(rows);
  if (report.contains("warning")) out << "warning: " << report["warning"].get<std::string>() << "\n";
  return out.str();
}

namespace {

std::string target_text(const GeneralVotingGame& game, const EstimationTarget& target) {
  const std::string& o = game.outcomes.labels[target.outcome];
  switch (target.kind) {
    case EstimationTarget::Kind::outcome:
      return "Pr(" + o + ")";
    case EstimationTarget::Kind::criticality:
      return "Pr(" + to_string(target.criticality) + ") for " + game.players[target.player].id + ", outcome " + o;
    case EstimationTarget::Kind::conditional:
      return "Pr(" + o + " | " + game.players[target.player].id + " = " +
             game.players[target.player].actions[target.action] + ")";
  }
  return "";
}

}  // namespace

json estimate_json(const GeneralVotingGame& game, const EstimationTarget& target, const Estimate& e) {
  const auto space = game.space();
  json t{{"description", target_text(game, target)}};
  switch (target.kind) {
    case EstimationTarget::Kind::outcome:
      t["kind"] = "outcome";
      break;
    case EstimationTarget::Kind::criticality:
      t["kind"] = "criticality";
      t["player"] = game.players[target.player].id;
      t["criticality"] = to_string(target.criticality);
      break;
    case EstimationTarget::Kind::conditional:
      t["kind"] = "conditional";
      t["player"] = game.players[target.player].id;
      t["action"] = game.players[target.player].actions[target.action];
      break;
  }
  return json{{"game", game_json(game, space.saturated() ? std::nullopt : std::optional(space.size()),
                                 game.outcomes.labels[target.outcome], "monte-carlo")},
              {"model", model_json(game.model)},
              {"version", kToolVersion},
              {"target", std::move(t)},
              {"estimate", json{{"point", e.point},
                                {"standard_error", e.standard_error},
                                {"ci95", json::array({e.ci_low, e.ci_high})},
                                {"samples", e.samples},
                                {"accepted", e.accepted},
                                {"hits", e.hits},
                                {"seed", e.seed},
                                {"method", e.method},
                                {"generator", "splitmix64 counter (seed, sample, lane)"}}}};
}

std::string estimate_table(const GeneralVotingGame& game, const EstimationTarget& target, const Estimate& e) {
  const auto space = game.space();
  std::ostringstream out;
  out << header(game, "mc", space.saturated() ? std::nullopt : std::optional(space.size()),
                game.outcomes.labels[target.outcome]);
  out << "target:  " << target_text(game, target) << "\n\n";
  out.setf(std::ios::fixed);
  out.precision(6);
  std::vector<std::vector<std::string>> rows{{"estimate", "std error", "95% interval", "samples", "accepted", "seed",
                                              "method"}};
  std::ostringstream point, se, ci;
  for (auto* s : {&point, &se, &ci}) {
    s->setf(std::ios::fixed);
    s->precision(6);
  }
  point << e.point;
  se << e.standard_error;
  ci << "[" << e.ci_low << ", " << e.ci_high << "]";
  rows.push_back({point.str(), se.str(), ci.str(), std::to_string(e.samples), std::to_string(e.accepted),
                  std::to_string(e.seed), e.method});
  out << render_table(rows);
  return out.str();
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t c = 0; c < row.size(); ++c) {
      text += row[c];
      if (c + 1 < row.size()) text += std::string(widths[c] - display_width(row[c]) + 2, ' ');
    }
    out << text << "\n";
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    line(rows[r]);
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c + 1 < widths.size() ? 2 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  return out.str();
}

}  // namespace vpow
