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

#include "vpow/criticality.hpp"

#include <algorithm>
#include <cctype>

#include "vpow/errors.hpp"

namespace vpow {
namespace {

void check_args(const GeneralVotingGame& game, std::size_t outcome, std::size_t player) {
  if (outcome >= game.outcomes.size()) throw ValidationError("outcome index out of range");
  if (player >= game.players.size()) throw ValidationError("player index out of range");
}

// I^O(reduced × a) for every action a of the excluded player.
std::vector<bool> indicators(const GeneralVotingGame& game, std::size_t outcome,
                             const ReducedConfiguration& reduced) {
  if (reduced.excluded >= game.players.size()) throw ValidationError("player index out of range");
  const auto space = game.space();
  const std::size_t k = game.players[reduced.excluded].actions.size();
  std::vector<bool> ind(k);
  for (std::size_t a = 0; a < k; ++a) {
    const Configuration c = reduced.insert(a);
    space.index_of(c.actions);
    ind[a] = game.rule.evaluate(space, c.actions) == outcome;
  }
  return ind;
}

ActionChoice pick(const std::vector<bool>& ind, bool maximize) {
  bool target = !maximize;
  for (bool v : ind) {
    if (v == maximize) target = maximize;
  }
  for (std::size_t a = 0; a < ind.size(); ++a) {
    if (ind[a] == target) return ActionChoice{a, target};
  }
  return ActionChoice{0, ind.empty() ? false : static_cast<bool>(ind[0])};
}

// Linear-index view of one configuration: its player digit and the indices
// of all its siblings that differ only in that player's action.
struct Siblings {
  std::uint64_t base;
  std::uint64_t stride;
  std::size_t radix;
  std::size_t own;
};

Siblings siblings_of(const ConfigurationSpace& space, std::uint64_t index, std::size_t player) {
  const std::size_t own = space.digit(index, player);
  return Siblings{index - own * space.stride(player), space.stride(player), space.radix(player), own};
}

}  // namespace

std::size_t slot(CriticalityKind kind) {
  const std::size_t base = kind.assumption == Assumption::zero ? 0 : 3;
  switch (kind.direction) {
    case Direction::increasing:
      return base;
    case Direction::decreasing:
      return base + 1;
    case Direction::total:
      return base + 2;
  }
  return base;
}

std::string to_string(CriticalityKind kind) {
  std::string s = kind.direction == Direction::increasing   ? "IC"
                  : kind.direction == Direction::decreasing ? "DC"
                                                            : "TC";
  return s + (kind.assumption == Assumption::zero ? "^0" : "^delta");
}

CriticalityKind parse_criticality_kind(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (c != '^' && c != '_') t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (const auto kind : kCriticalityKinds) {
    std::string name = kind.direction == Direction::increasing   ? "IC"
                       : kind.direction == Direction::decreasing ? "DC"
                                                                 : "TC";
    if (kind.assumption == Assumption::zero) {
      if (t == name + "0") return kind;
    } else if (t == name + "D" || t == name + "DELTA") {
      return kind;
    }
  }
  throw ValidationError("unknown criticality kind '" + std::string(text) +
                        "' (expected IC0, DC0, TC0, ICd, DCd or TCd)");
}

ActionChoice best_action(const GeneralVotingGame& game, std::size_t outcome, const ReducedConfiguration& reduced) {
  return pick(indicators(game, outcome, reduced), true);
}

ActionChoice worst_action(const GeneralVotingGame& game, std::size_t outcome, const ReducedConfiguration& reduced) {
  return pick(indicators(game, outcome, reduced), false);
}

bool is_increasingly_critical(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                              const Configuration& config, Assumption assumption) {
  check_args(game, outcome, player);
  const auto reduced = remove_player(config, player);
  const auto ind = indicators(game, outcome, reduced);
  const std::size_t own = config.actions[player];
  if (ind[own]) return false;
  if (!pick(ind, true).achieves) return false;
  if (assumption == Assumption::delta) return true;
  const auto& declared = game.players[player].min_action;
  return own == (declared ? *declared : pick(ind, false).action);
}

bool is_decreasingly_critical(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                              const Configuration& config, Assumption /*assumption*/) {
  check_args(game, outcome, player);
  const auto reduced = remove_player(config, player);
  const auto ind = indicators(game, outcome, reduced);
  return ind[config.actions[player]] && !pick(ind, false).achieves;
}

bool is_critical(const GeneralVotingGame& game, std::size_t outcome, std::size_t player,
                 const Configuration& config, CriticalityKind kind) {
  switch (kind.direction) {
    case Direction::increasing:
      return is_increasingly_critical(game, outcome, player, config, kind.assumption);
    case Direction::decreasing:
      return is_decreasingly_critical(game, outcome, player, config, kind.assumption);
    case Direction::total:
      return is_increasingly_critical(game, outcome, player, config, kind.assumption) ||
             is_decreasingly_critical(game, outcome, player, config, kind.assumption);
  }
  return false;
}

Rational criticality_probability_range(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                       CriticalityKind kind, std::uint64_t first, std::uint64_t last) {
  const auto& game = eg.game();
  check_args(game, outcome, player);
  if (last > eg.size()) last = eg.size();
  const auto& declared = game.players[player].min_action;
  const bool want_ic = kind.direction != Direction::decreasing;
  const bool want_dc = kind.direction != Direction::increasing;

  Rational total = 0;
  for (std::uint64_t index = first; index < last; ++index) {
    const Siblings s = siblings_of(eg.space(), index, player);
    bool any = false;
    bool all = true;
    std::size_t first_loser = s.radix;
    for (std::size_t a = 0; a < s.radix; ++a) {
      const bool hit = eg.outcome(s.base + a * s.stride) == outcome;
      any = any || hit;
      all = all && hit;
      if (!hit && first_loser == s.radix) first_loser = a;
    }
    const bool here = eg.outcome(index) == outcome;
    bool member = false;
    if (here) {
      member = want_dc && !all;
    } else if (want_ic && any) {
      // worst_action is the first losing action whenever one exists.
      const std::size_t floor = declared ? *declared : first_loser;
      member = kind.assumption == Assumption::delta || s.own == floor;
    }
    if (member) total += eg.mass(index);
  }
  return total;
}

Rational criticality_probability(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                 CriticalityKind kind) {
  return criticality_probability_range(eg, outcome, player, kind, 0, eg.size());
}

CriticalityReport criticality_report(const EnumeratedGame& eg, std::size_t outcome, std::size_t player) {
  const auto& game = eg.game();
  check_args(game, outcome, player);
  const auto& space = eg.space();
  const std::uint64_t stride = space.stride(player);
  const std::size_t k = space.radix(player);
  const auto& declared = game.players[player].min_action;

  CriticalityReport report;
  report.player = player;
  report.outcome = outcome;
  auto& el = report.elementary;
  el.conditioning = conditioning_for(game.model);

  Rational ic0 = 0, icd = 0, dc = 0, pr_o = 0, complement = 0;
  Rational sub_max = 0, sub_min = 0;
  std::vector<Rational> sub_by_action(k, Rational(0));  // Σ_r λ(r) I^O(r × a)
  std::vector<Rational> action_mass(k, Rational(0));    // Pr(x_i = a)
  std::vector<Rational> action_joint(k, Rational(0));   // Pr(O, x_i = a)
  std::vector<bool> always_max(k, true), always_min(k, true);
  std::vector<bool> ind(k);
  std::vector<Rational> mass(k);

  for (std::uint64_t base = 0; base < eg.size(); ++base) {
    if (space.digit(base, player) != 0) continue;
    bool mx = false, mn = true;
    Rational lambda = 0;
    for (std::size_t a = 0; a < k; ++a) {
      const std::uint64_t index = base + a * stride;
      ind[a] = eg.outcome(index) == outcome;
      mass[a] = eg.mass(index);
      lambda += mass[a];
      mx = mx || ind[a];
      mn = mn && ind[a];
    }
    std::size_t worst = 0;
    while (worst < k && ind[worst] != mn) ++worst;
    const std::size_t floor = declared ? *declared : worst;

    for (std::size_t a = 0; a < k; ++a) {
      const Rational& m = mass[a];
      action_mass[a] += m;
      if (ind[a]) {
        pr_o += m;
        action_joint[a] += m;
        sub_by_action[a] += lambda;
        if (!mn) dc += m;
      } else {
        complement += m;
        if (mx) {
          icd += m;
          if (a == floor) ic0 += m;
        }
      }
      always_max[a] = always_max[a] && ind[a] == mx;
      always_min[a] = always_min[a] && ind[a] == mn;
    }
    if (mx) sub_max += lambda;
    if (mn) sub_min += lambda;
  }

  report.direct[slot(kIC0)] = ic0;
  report.direct[slot(kDC0)] = dc;
  report.direct[slot(kTC0)] = ic0 + dc;
  report.direct[slot(kICd)] = icd;
  report.direct[slot(kDCd)] = dc;
  report.direct[slot(kTCd)] = icd + dc;
  report.complement_mass = complement;
  el.outcome = pr_o;

  for (std::size_t a = 0; a < k && !el.constant_best; ++a) {
    if (always_max[a]) el.constant_best = a;
  }
  for (std::size_t a = 0; a < k && !el.constant_worst; ++a) {
    if (always_min[a]) el.constant_worst = a;
  }

  // Reference lowest-support action for the criticality-0 formulas.
  if (declared) {
    el.reference_action = *declared;
    el.reference_source = "declared";
  } else if (k == 2 && el.constant_worst) {
    el.reference_action = el.constant_worst;
    el.reference_source = "monotone-binary";
  } else {
    el.reference_source = "none: declare a minimal action or use a monotone binary player";
  }

  auto bayes = [&](std::size_t a, std::optional<Rational>& out) -> bool {
    if (sgn(action_mass[a]) == 0) {
      el.note = "Pr(" + game.players[player].id + " = " + game.players[player].actions[a] +
                ") is zero; conditional undefined";
      return false;
    }
    out = action_joint[a] / action_mass[a];
    return true;
  };

  if (el.conditioning == Conditioning::substitution) {
    el.given_max = sub_max;
    el.given_min = sub_min;
    if (el.reference_action) {
      el.given_reference = sub_by_action[*el.reference_action];
      el.reference_probability = action_mass[*el.reference_action];
    }
  } else {
    if (!el.constant_best || !el.constant_worst) {
      el.note = "no single action is a best and worst response for every configuration of the others; "
                "Pr(O | x_max) and Pr(O | x_min) are undefined under a dependent model";
    } else if (bayes(*el.constant_best, el.given_max) && bayes(*el.constant_worst, el.given_min) &&
               el.reference_action) {
      std::optional<Rational> given_ref;
      if (bayes(*el.reference_action, given_ref)) {
        el.given_reference = given_ref;
        el.reference_probability = action_mass[*el.reference_action];
      }
    }
    if (el.reference_action && !el.reference_probability) {
      el.reference_probability = action_mass[*el.reference_action];
    }
  }

  const std::string missing = el.note.empty() ? el.reference_source : el.note;
  if (el.given_max && el.given_min) {
    const Rational& gmax = *el.given_max;
    const Rational& gmin = *el.given_min;
    report.formula[slot(kICd)].value = gmax - pr_o;
    report.formula[slot(kDCd)].value = pr_o - gmin;
    report.formula[slot(kTCd)].value = gmax - gmin;
    report.formula[slot(kDC0)].value = pr_o - gmin;
    if (el.given_reference && el.reference_probability) {
      const Rational ic0_formula = *el.reference_probability * (gmax - *el.given_reference);
      report.formula[slot(kIC0)].value = ic0_formula;
      report.formula[slot(kTC0)].value = (pr_o - gmin) + ic0_formula;
    } else {
      report.formula[slot(kIC0)].note = missing;
      report.formula[slot(kTC0)].note = missing;
    }
  } else {
    for (auto& f : report.formula) f.note = el.note;
  }
  return report;
}

Rational criticality_probability_formula(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                                         CriticalityKind kind) {
  const auto report = criticality_report(eg, outcome, player);
  const auto& f = report.formula[slot(kind)];
  if (f.value) return *f.value;
  if (f.note.find("is zero") != std::string::npos) throw UndefinedConditionalError(f.note);
  throw NotApplicableError(to_string(kind) + " formula not applicable: " + f.note);
}

}  // namespace vpow
