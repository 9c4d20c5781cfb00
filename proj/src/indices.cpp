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

#include "vpow/indices.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "vpow/errors.hpp"

namespace vpow {
namespace {

constexpr std::size_t kMaxPermutationPlayers = 10;
constexpr std::size_t kMaxCombinationPlayers = 30;

void require_binary(const GeneralVotingGame& game, const char* what) {
  if (!game.all_binary()) {
    throw NotApplicableError(std::string(what) + " is defined for yes/no games only; this game has a player with " +
                             "more than two actions");
  }
}

void check_outcome(const GeneralVotingGame& game, std::size_t outcome) {
  if (outcome >= game.outcomes.size()) throw ValidationError("outcome index out of range");
}

// W on a yes/no bitmask: bit p set means player p votes action 1.
class BinaryRule {
 public:
  BinaryRule(const GeneralVotingGame& game, std::size_t outcome)
      : game_(game), space_(game.space()), outcome_(outcome), actions_(game.players.size()) {}

  bool wins(std::uint64_t mask) {
    for (std::size_t p = 0; p < actions_.size(); ++p) actions_[p] = (mask >> p) & 1U;
    return game_.rule.evaluate(space_, actions_) == outcome_;
  }

 private:
  const GeneralVotingGame& game_;
  ConfigurationSpace space_;
  std::size_t outcome_;
  std::vector<std::size_t> actions_;
};

// Pivot counts for the orderings that start with `first`.
std::vector<std::uint64_t> pivots_from(const GeneralVotingGame& game, std::size_t outcome, std::size_t first,
                                       const std::vector<bool>& outcome_by_mask) {
  const std::size_t n = game.players.size();
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < n; ++p) {
    if (p != first) rest.push_back(p);
  }
  (void)outcome;
  do {
    std::uint64_t mask = std::uint64_t{1} << first;
    if (outcome_by_mask[mask]) {
      ++counts[first];
      continue;
    }
    for (std::size_t p : rest) {
      mask |= std::uint64_t{1} << p;
      if (outcome_by_mask[mask]) {
        ++counts[p];
        break;
      }
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return counts;
}

}  // namespace

std::vector<Rational> normalize(const std::vector<Rational>& values) {
  Rational sum = 0;
  for (const auto& v : values) sum += v;
  std::vector<Rational> out(values.size(), Rational(0));
  if (sgn(sum) == 0) return out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / sum;
  return out;
}

GeneralVotingGame with_model(const GeneralVotingGame& game, ProbabilityModel model) {
  GeneralVotingGame copy = game;
  copy.model = std::move(model);
  copy.model.validate(copy.players);
  return copy;
}

std::vector<Rational> shapley_shubik_permutation(const GeneralVotingGame& game, std::size_t outcome) {
  check_outcome(game, outcome);
  require_binary(game, "permutation Shapley-Shubik");
  const std::size_t n = game.players.size();
  if (n > kMaxPermutationPlayers) {
    throw NotApplicableError("permutation Shapley-Shubik enumerates n! orderings and is limited to " +
                             std::to_string(kMaxPermutationPlayers) + " players");
  }
  BinaryRule rule(game, outcome);
  std::vector<bool> outcome_by_mask(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < outcome_by_mask.size(); ++mask) outcome_by_mask[mask] = rule.wins(mask);

  std::vector<Rational> values(n, Rational(0));
  // No ordering has a pivot when the empty coalition already yields O.
  if (outcome_by_mask[0]) return values;

  // One task per leading player; integer counts make the reduction exact.
  std::vector<std::future<std::vector<std::uint64_t>>> parts;
  for (std::size_t first = 0; first < n; ++first) {
    parts.push_back(std::async(std::launch::async, pivots_from, std::cref(game), outcome, first,
                               std::cref(outcome_by_mask)));
  }
  std::vector<std::uint64_t> counts(n, 0);
  for (auto& part : parts) {
    const auto c = part.get();
    for (std::size_t p = 0; p < n; ++p) counts[p] += c[p];
  }
  const Rational orderings = factorial(n);
  for (std::size_t p = 0; p < n; ++p) values[p] = Rational(static_cast<unsigned long>(counts[p])) / orderings;
  return values;
}

std::vector<Rational> banzhaf_combinations(const GeneralVotingGame& game, std::size_t outcome) {
  check_outcome(game, outcome);
  require_binary(game, "Banzhaf combinations");
  const std::size_t n = game.players.size();
  if (n > kMaxCombinationPlayers) throw CapExceededError("Banzhaf combinations limited to 30 players");
  BinaryRule rule(game, outcome);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> wins(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) wins[mask] = rule.wins(mask);
  std::vector<Rational> values(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::uint64_t swings = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (wins[mask] != wins[mask ^ (std::uint64_t{1} << p)]) ++swings;
    }
    values[p] = Rational(mpz_class(static_cast<unsigned long>(swings)), mpz_class(1) << static_cast<unsigned>(n));
    values[p].canonicalize();
  }
  return values;
}

JohnstonValues johnston(const GeneralVotingGame& game, std::size_t outcome) {
  check_outcome(game, outcome);
  require_binary(game, "Johnston");
  const std::size_t n = game.players.size();
  const EnumeratedGame eg(game);
  JohnstonValues out;
  out.raw.reserve(n);
  for (std::size_t p = 0; p < n; ++p) out.raw.push_back(criticality_probability(eg, outcome, p, kDC0));

  // Classical fractional version: every configuration yielding O splits one
  // point among the players whose switch to "no" destroys it.
  BinaryRule rule(game, outcome);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Rational> points(n, Rational(0));
  bool any_winning = false;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!rule.wins(mask)) continue;
    any_winning = true;
    std::vector<std::size_t> critical;
    for (std::size_t p = 0; p < n; ++p) {
      const std::uint64_t bit = std::uint64_t{1} << p;
      if (!rule.wins(mask & ~bit) || !rule.wins(mask | bit)) critical.push_back(p);
    }
    for (auto p : critical) points[p] += Rational(1, static_cast<unsigned long>(critical.size()));
  }
  out.fractional = normalize(points);
  if (!any_winning) out.warning = "no configuration yields outcome '" + game.outcomes.labels[outcome] + "'";
  return out;
}

ElementaryIndexValues elementary_index_report(const CriticalityReport& report, const ProbabilityModel& model) {
  ElementaryIndexValues t;
  const auto& el = report.elementary;
  t.conditioning = el.conditioning;
  t.model = model.label();
  t.shapley_shubik = report.formula[slot(kIC0)];
  t.banzhaf = report.formula[slot(kTCd)];
  t.straffin = report.formula[slot(kTCd)];
  t.johnston = report.formula[slot(kDC0)];
  const Rational& pr_o = el.outcome;
  if (!el.given_max || !el.given_min) {
    t.coleman_initiate.note = t.coleman_prevent.note = report.formula[slot(kTCd)].note;
    return t;
  }
  if (pr_o == 1) {
    t.coleman_initiate.note = "undefined: 1 - Pr(O) = 0";
  } else {
    t.coleman_initiate.value = (*el.given_max - pr_o) / (1 - pr_o);
  }
  if (sgn(pr_o) == 0) {
    t.coleman_prevent.note = "undefined: Pr(O) = 0";
  } else {
    t.coleman_prevent.value = (pr_o - *el.given_min) / pr_o;
  }
  return t;
}

ElementaryIndexValues elementary_index_report(const EnumeratedGame& eg, std::size_t outcome, std::size_t player) {
  return elementary_index_report(criticality_report(eg, outcome, player), eg.game().model);
}

Rational total_power(const Rational& given_yes, const Rational& given_no) { return given_yes - given_no; }

ColemanValue coleman_initiate(const EnumeratedGame& eg, std::size_t outcome, std::size_t player) {
  const auto report = criticality_report(eg, outcome, player);
  if (sgn(report.complement_mass) == 0) {
    throw UndefinedDenominatorError("Coleman initiate is undefined: Pr(not " + eg.game().outcomes.labels[outcome] +
                                    ") = 1 - Pr(O) = 0");
  }
  ColemanValue v;
  v.direct = report.direct[slot(kICd)] / report.complement_mass;
  v.formula = elementary_index_report(report, eg.game().model).coleman_initiate.value;
  return v;
}

ColemanValue coleman_prevent(const EnumeratedGame& eg, std::size_t outcome, std::size_t player) {
  const auto report = criticality_report(eg, outcome, player);
  if (sgn(report.elementary.outcome) == 0) {
    throw UndefinedDenominatorError("Coleman prevent is undefined: Pr(" + eg.game().outcomes.labels[outcome] +
                                    ") = 0");
  }
  ColemanValue v;
  v.direct = report.direct[slot(kDCd)] / report.elementary.outcome;
  v.formula = elementary_index_report(report, eg.game().model).coleman_prevent.value;
  return v;
}

MonotonicityResult is_monotone(const EnumeratedGame& eg, std::size_t outcome) {
  const auto& game = eg.game();
  check_outcome(game, outcome);
  const auto& space = eg.space();
  MonotonicityResult result;
  result.monotone = true;
  result.levels.resize(game.players.size());

  for (std::size_t p = 0; p < game.players.size(); ++p) {
    const std::size_t k = space.radix(p);
    if (k > 64) throw NotApplicableError("monotonicity analysis supports at most 64 actions per player");
    const std::uint64_t stride = space.stride(p);
    // Distinct sets of O-yielding actions, each with one reduced configuration
    // that produces it.
    std::map<std::uint64_t, std::uint64_t> families;
    for (std::uint64_t base = 0; base < eg.size(); ++base) {
      if (space.digit(base, p) != 0) continue;
      std::uint64_t mask = 0;
      for (std::size_t a = 0; a < k; ++a) {
        if (eg.outcome(base + a * stride) == outcome) mask |= std::uint64_t{1} << a;
      }
      families.emplace(mask, base);
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sets(families.begin(), families.end());
    std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
      return std::popcount(x.first) != std::popcount(y.first) ? std::popcount(x.first) < std::popcount(y.first)
                                                              : x.first < y.first;
    });
    // The O-yielding sets must be nested for an order making each an upset.
    for (std::size_t s = 0; s + 1 < sets.size(); ++s) {
      const auto [small, base_small] = sets[s];
      const auto [large, base_large] = sets[s + 1];
      if ((small & ~large) == 0) continue;
      const std::size_t a = static_cast<std::size_t>(std::countr_zero(small & ~large));
      const std::size_t b = static_cast<std::size_t>(std::countr_zero(large & ~small));
      result.monotone = false;
      if (!result.violating_player) {
        result.violating_player = p;
        result.witness.emplace_back(space.decode(base_small + a * stride), space.decode(base_small + b * stride));
        result.witness.emplace_back(space.decode(base_large + b * stride), space.decode(base_large + a * stride));
      }
      break;
    }
    std::vector<std::size_t> count(k, 0);
    for (const auto& [mask, base] : sets) {
      for (std::size_t a = 0; a < k; ++a) count[a] += (mask >> a) & 1U;
    }
    std::vector<std::size_t> distinct(count.begin(), count.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto& levels = result.levels[p];
    levels.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      levels[a] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), count[a]) -
                                           distinct.begin());
    }
  }
  return result;
}

MonotonicityResult is_monotone(const GeneralVotingGame& game, std::size_t outcome) {
  return is_monotone(EnumeratedGame(game), outcome);
}

std::vector<MinimumWinningEvent> minimum_winning_events(const EnumeratedGame& eg, std::size_t outcome) {
  const auto mono = is_monotone(eg, outcome);
  if (!mono.monotone) {
    throw NotApplicableError("minimum winning events require a monotonic decision rule; '" +
                             eg.game().players[*mono.violating_player].id + "' has no order in which raising " +
                             "its action never destroys outcome '" + eg.game().outcomes.labels[outcome] + "'");
  }
  const auto& space = eg.space();
  const std::size_t n = space.players();
  // step_down[p][level] = an action one level below `level`.
  std::vector<std::vector<std::size_t>> step_down(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto& levels = mono.levels[p];
    const std::size_t top = *std::max_element(levels.begin(), levels.end());
    step_down[p].assign(top + 1, 0);
    for (std::size_t a = levels.size(); a-- > 0;) {
      if (levels[a] + 1 <= top) step_down[p][levels[a] + 1] = a;
    }
  }

  std::vector<MinimumWinningEvent> events;
  std::vector<std::size_t> actions(n, 0);
  std::uint64_t index = 0;
  do {
    if (eg.outcome(index) == outcome) {
      bool minimal = true;
      std::vector<std::size_t> supporters;
      for (std::size_t p = 0; p < n && minimal; ++p) {
        const std::size_t level = mono.levels[p][actions[p]];
        if (level == 0) continue;
        supporters.push_back(p);
        const std::size_t lower = step_down[p][level];
        const std::uint64_t moved = index - actions[p] * space.stride(p) + lower * space.stride(p);
        if (eg.outcome(moved) == outcome) minimal = false;
      }
      if (minimal) events.push_back(MinimumWinningEvent{Configuration{actions}, outcome, std::move(supporters)});
    }
    ++index;
  } while (space.next(actions));
  return events;
}

namespace {

bool decreasingly_critical_at(const EnumeratedGame& eg, std::size_t outcome, std::size_t player,
                              std::uint64_t index) {
  const auto& space = eg.space();
  const std::size_t own = space.digit(index, player);
  const std::uint64_t base = index - own * space.stride(player);
  if (eg.outcome(index) != outcome) return false;
  for (std::size_t a = 0; a < space.radix(player); ++a) {
    if (eg.outcome(base + a * space.stride(player)) != outcome) return true;
  }
  return false;
}

}  // namespace

MweIndexValues holler(const EnumeratedGame& eg, std::size_t outcome) {
  const auto events = minimum_winning_events(eg, outcome);
  const std::size_t n = eg.space().players();
  MweIndexValues out;
  out.raw.assign(n, Rational(0));
  for (const auto& e : events) {
    const std::uint64_t index = eg.space().index_of(e.configuration.actions);
    for (std::size_t p = 0; p < n; ++p) {
      if (decreasingly_critical_at(eg, outcome, p, index)) out.raw[p] += 1;
    }
  }
  out.normalized = normalize(out.raw);
  return out;
}

MweIndexValues deegan_packel(const EnumeratedGame& eg, std::size_t outcome) {
  const auto events = minimum_winning_events(eg, outcome);
  const std::size_t n = eg.space().players();
  MweIndexValues out;
  out.raw.assign(n, Rational(0));
  for (const auto& e : events) {
    if (e.supporters.empty()) continue;
    const std::uint64_t index = eg.space().index_of(e.configuration.actions);
    const Rational share(1, static_cast<unsigned long>(e.supporters.size()));
    for (auto p : e.supporters) {
      if (decreasingly_critical_at(eg, outcome, p, index)) out.raw[p] += share;
    }
  }
  out.normalized = normalize(out.raw);
  return out;
}

IndexReport index_report(const EnumeratedGame& eg, std::size_t outcome) {
  const auto& game = eg.game();
  check_outcome(game, outcome);
  const std::size_t n = game.players.size();
  IndexReport report;
  report.outcome = outcome;
  report.players.resize(n);

  const bool binary = game.all_binary();
  const std::string model_label = game.model.label();

  std::optional<std::vector<Rational>> ss, bz;
  std::optional<JohnstonValues> jo;
  std::string ss_note, binary_note = "classical algorithm defined for yes/no games only";
  if (binary) {
    try {
      ss = shapley_shubik_permutation(game, outcome);
    } catch (const NotApplicableError& e) {
      ss_note = e.what();
    }
    bz = banzhaf_combinations(game, outcome);
    jo = johnston(game, outcome);
  }
  const auto bz_norm = bz ? std::optional(normalize(*bz)) : std::nullopt;

  std::optional<GeneralVotingGame> uniform_game, homogeneity_game;
  uniform_game = with_model(game, ProbabilityModel::uniform());
  std::optional<EnumeratedGame> uniform_eg, homogeneity_eg;
  uniform_eg.emplace(*uniform_game);
  if (binary) {
    homogeneity_game = with_model(game, ProbabilityModel::homogeneity());
    homogeneity_eg.emplace(*homogeneity_game);
  }

  std::optional<MweIndexValues> hol, dp;
  std::string mwe_note;
  try {
    hol = holler(eg, outcome);
    dp = deegan_packel(eg, outcome);
  } catch (const NotApplicableError& e) {
    mwe_note = e.what();
  }

  for (std::size_t p = 0; p < n; ++p) {
    auto& out = report.players[p];
    out.player = p;
    const auto crit = criticality_report(eg, outcome, p);
    const auto elementary = elementary_index_report(crit, game.model);

    out.shapley_shubik.model = model_label;
    if (ss) {
      out.shapley_shubik.oracle = (*ss)[p];
    } else {
      out.shapley_shubik.note = binary ? ss_note : binary_note;
    }
    out.shapley_shubik.formula = elementary.shapley_shubik.value;
    if (!elementary.shapley_shubik.value) {
      out.shapley_shubik.note += (out.shapley_shubik.note.empty() ? "" : "; ") + elementary.shapley_shubik.note;
    }

    const auto uniform_crit = criticality_report(*uniform_eg, outcome, p);
    out.banzhaf.model = "uniform";
    if (bz) {
      out.banzhaf.oracle = (*bz)[p];
      out.banzhaf.normalized = (*bz_norm)[p];
    } else {
      out.banzhaf.note = binary_note;
    }
    out.banzhaf.formula = uniform_crit.formula[slot(kTCd)].value;

    out.straffin_independence.model = "uniform";
    out.straffin_independence.oracle = uniform_crit.direct[slot(kTCd)];
    out.straffin_independence.formula = uniform_crit.formula[slot(kTCd)].value;

    out.straffin_homogeneity.model = "homogeneity";
    if (homogeneity_eg) {
      const auto h = criticality_report(*homogeneity_eg, outcome, p);
      out.straffin_homogeneity.oracle = h.direct[slot(kTCd)];
      out.straffin_homogeneity.formula = h.formula[slot(kTCd)].value;
      out.straffin_homogeneity.note = "formula uses Bayes conditioning; players are dependent";
    } else {
      out.straffin_homogeneity.note = "homogeneity model is defined for yes/no games only";
    }

    out.johnston_raw.model = model_label;
    out.johnston_raw.oracle = crit.direct[slot(kDC0)];
    out.johnston_raw.formula = elementary.johnston.value;
    out.johnston_fractional.model = "classical";
    if (jo) {
      out.johnston_fractional.oracle = jo->fractional[p];
      out.johnston_fractional.normalized = jo->fractional[p];
      out.johnston_fractional.note = jo->warning;
    } else {
      out.johnston_fractional.note = binary_note;
    }

    out.coleman_initiate.model = out.coleman_prevent.model = model_label;
    if (sgn(crit.complement_mass) != 0) {
      out.coleman_initiate.oracle = crit.direct[slot(kICd)] / crit.complement_mass;
    } else {
      out.coleman_initiate.note = "undefined: 1 - Pr(O) = 0";
    }
    out.coleman_initiate.formula = elementary.coleman_initiate.value;
    if (sgn(crit.elementary.outcome) != 0) {
      out.coleman_prevent.oracle = crit.direct[slot(kDCd)] / crit.elementary.outcome;
    } else {
      out.coleman_prevent.note = "undefined: Pr(O) = 0";
    }
    out.coleman_prevent.formula = elementary.coleman_prevent.value;

    out.holler.model = out.deegan_packel.model = "minimum winning events";
    if (hol) {
      out.holler.oracle = hol->raw[p];
      out.holler.normalized = hol->normalized[p];
      out.deegan_packel.oracle = dp->raw[p];
      out.deegan_packel.normalized = dp->normalized[p];
    } else {
      out.holler.note = out.deegan_packel.note = mwe_note;
    }
  }
  return report;
}

}  // namespace vpow
