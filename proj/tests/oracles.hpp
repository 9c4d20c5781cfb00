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


// Brute-force reference implementations written from the definitions. They
// share only the data types with the library: rule evaluation, masses,
// criticality membership and the classical algorithms are recomputed here.

#ifndef VPOW_TESTS_ORACLES_HPP
#define VPOW_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "vpow/game.hpp"

namespace oracle {

using vpow::Configuration;
using vpow::DecisionRule;
using vpow::GeneralVotingGame;
using vpow::ProbabilityModel;
using vpow::Rational;

inline void for_each_configuration(const std::vector<std::size_t>& radices,
                                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> a(radices.size(), 0);
  while (true) {
    visit(a);
    std::size_t p = radices.size();
    while (p > 0) {
      --p;
      if (++a[p] < radices[p]) break;
      a[p] = 0;
      if (p == 0) return;
    }
    if (radices.empty()) return;
  }
}

inline std::vector<std::size_t> radices(const GeneralVotingGame& g) {
  std::vector<std::size_t> r;
  for (const auto& p : g.players) r.push_back(p.actions.size());
  return r;
}

inline std::size_t evaluate(const GeneralVotingGame& g, const std::vector<std::size_t>& a) {
  const auto& rule = g.rule;
  if (rule.kind() == DecisionRule::Kind::explicit_table) {
    std::size_t index = 0;
    for (std::size_t p = 0; p < a.size(); ++p) index = index * g.players[p].actions.size() + a[p];
    return rule.table()[index];
  }
  for (const auto& c : rule.components()) {
    Rational sum = 0;
    for (std::size_t p = 0; p < a.size(); ++p) sum += c.weights[p][a[p]];
    if (sum < c.quota) return rule.unmet();
  }
  return rule.met();
}

inline Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

// ∫ p^k (1-p)^m dp expanded as a polynomial in p.
inline Rational beta_integral(unsigned k, unsigned m) {
  Rational total = 0;
  for (unsigned j = 0; j <= m; ++j) {
    Rational term = binomial(m, j) / Rational(k + j + 1);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline Rational mass(const ProbabilityModel& model, const GeneralVotingGame& g, const std::vector<std::size_t>& a) {
  switch (model.kind()) {
    case ProbabilityModel::Kind::uniform: {
      Rational m = 1;
      for (const auto& p : g.players) m /= Rational(static_cast<unsigned long>(p.actions.size()));
      return m;
    }
    case ProbabilityModel::Kind::product: {
      Rational m = 1;
      for (std::size_t p = 0; p < a.size(); ++p) m *= model.distributions()[p][a[p]];
      return m;
    }
    case ProbabilityModel::Kind::homogeneity: {
      unsigned yes = 0;
      for (auto x : a) yes += x == 1;
      return beta_integral(yes, static_cast<unsigned>(a.size()) - yes);
    }
    case ProbabilityModel::Kind::explicit_table: {
      const auto it = model.table().find(Configuration{a});
      return it == model.table().end() ? Rational(0) : it->second;
    }
    case ProbabilityModel::Kind::mixture: {
      Rational m = 0;
      for (const auto& c : model.components()) m += c.weight * mass(*c.model, g, a);
      return m;
    }
  }
  return 0;
}

inline Rational outcome_probability(const GeneralVotingGame& g, std::size_t o) {
  Rational total = 0;
  for_each_configuration(radices(g), [&](const auto& a) {
    if (evaluate(g, a) == o) total += mass(g.model, g, a);
  });
  return total;
}

struct Swing {
  bool achievable = false;  // some action yields O
  bool destroyable = false; // some action misses O
  std::size_t first_min = 0;  // lowest index minimizing the indicator
};

inline Swing swing(const GeneralVotingGame& g, std::size_t o, std::size_t player, std::vector<std::size_t> a) {
  Swing s;
  std::vector<int> ind;
  for (std::size_t x = 0; x < g.players[player].actions.size(); ++x) {
    a[player] = x;
    ind.push_back(evaluate(g, a) == o ? 1 : 0);
  }
  s.achievable = *std::max_element(ind.begin(), ind.end()) == 1;
  s.destroyable = *std::min_element(ind.begin(), ind.end()) == 0;
  s.first_min = static_cast<std::size_t>(std::min_element(ind.begin(), ind.end()) - ind.begin());
  return s;
}

enum class Set { ic0, dc0, tc0, icd, dcd, tcd };

inline bool member(const GeneralVotingGame& g, std::size_t o, std::size_t player, const std::vector<std::size_t>& a,
                   Set set) {
  const bool yields = evaluate(g, a) == o;
  const Swing s = swing(g, o, player, a);
  const bool icd = !yields && s.achievable;
  const std::size_t floor = g.players[player].min_action.value_or(s.first_min);
  const bool ic0 = icd && a[player] == floor;
  const bool dc = yields && s.destroyable;
  switch (set) {
    case Set::ic0: return ic0;
    case Set::dc0:
    case Set::dcd: return dc;
    case Set::tc0: return ic0 || dc;
    case Set::icd: return icd;
    case Set::tcd: return icd || dc;
  }
  return false;
}

inline Rational criticality(const GeneralVotingGame& g, std::size_t o, std::size_t player, Set set) {
  Rational total = 0;
  for_each_configuration(radices(g), [&](const auto& a) {
    if (member(g, o, player, a, set)) total += mass(g.model, g, a);
  });
  return total;
}

// Substitution conditional for independent players.
inline Rational substituted(const GeneralVotingGame& g, std::size_t o, std::size_t player, std::size_t action) {
  Rational total = 0;
  for_each_configuration(radices(g), [&](const auto& a) {
    auto forced = a;
    forced[player] = action;
    if (evaluate(g, forced) == o) total += mass(g.model, g, a);
  });
  return total;
}

// Bayes conditional.
inline Rational conditioned(const GeneralVotingGame& g, std::size_t o, std::size_t player, std::size_t action) {
  Rational joint = 0, marginal = 0;
  for_each_configuration(radices(g), [&](const auto& a) {
    if (a[player] != action) return;
    const Rational m = mass(g.model, g, a);
    marginal += m;
    if (evaluate(g, a) == o) joint += m;
  });
  return joint / marginal;
}

// Pivot of every ordering of the yes/no players; action 1 is "yes".
inline std::vector<Rational> shapley_shubik(const GeneralVotingGame& g, std::size_t o) {
  const std::size_t n = g.players.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> pivots(n, 0);
  std::uint64_t orderings = 0;
  do {
    ++orderings;
    std::vector<std::size_t> a(n, 0);
    if (evaluate(g, a) == o) continue;
    for (auto p : order) {
      a[p] = 1;
      if (evaluate(g, a) == o) {
        ++pivots[p];
        break;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<Rational> out;
  for (auto c : pivots) out.push_back(Rational(static_cast<unsigned long>(c)) / Rational(static_cast<unsigned long>(orderings)));
  return out;
}

inline std::vector<Rational> banzhaf(const GeneralVotingGame& g, std::size_t o) {
  const std::size_t n = g.players.size();
  std::vector<Rational> out(n, Rational(0));
  for_each_configuration(std::vector<std::size_t>(n, 2), [&](const auto& a) {
    for (std::size_t p = 0; p < n; ++p) {
      auto flipped = a;
      flipped[p] = 1 - a[p];
      if ((evaluate(g, a) == o) != (evaluate(g, flipped) == o)) out[p] += Rational(1, 1UL << n);
    }
  });
  return out;
}

// Random games ----------------------------------------------------------------

inline Rational random_probability_split(std::mt19937_64& rng, std::vector<Rational>& out, std::size_t k,
                                         bool allow_zero) {
  std::uniform_int_distribution<int> d(allow_zero ? 0 : 1, 9);
  std::vector<int> w(k);
  int sum = 0;
  for (auto& x : w) sum += (x = d(rng));
  if (sum == 0) {
    w[0] = 1;
    sum = 1;
  }
  out.clear();
  for (auto x : w) out.push_back(Rational(x, sum));
  for (auto& r : out) r.canonicalize();
  return Rational(sum);
}

struct RandomGameOptions {
  std::size_t min_players = 2;
  std::size_t max_players = 6;
  std::size_t max_actions = 3;
  bool binary = false;
  bool monotone_only = false;
  bool product_model = true;
};

inline GeneralVotingGame random_game(std::mt19937_64& rng, const RandomGameOptions& opt) {
  GeneralVotingGame g;
  g.title = "random";
  g.outcomes.labels = {"win", "lose"};
  const std::size_t n = std::uniform_int_distribution<std::size_t>(opt.min_players, opt.max_players)(rng);
  for (std::size_t p = 0; p < n; ++p) {
    vpow::PlayerSpace ps;
    ps.id = "P" + std::to_string(p);
    const std::size_t k = opt.binary ? 2 : std::uniform_int_distribution<std::size_t>(2, opt.max_actions)(rng);
    for (std::size_t a = 0; a < k; ++a) ps.actions.push_back("a" + std::to_string(a));
    g.players.push_back(std::move(ps));
  }
  const int rule_kind = opt.monotone_only ? 0 : std::uniform_int_distribution<int>(0, 2)(rng);
  if (rule_kind == 2) {
    std::size_t size = 1;
    for (const auto& p : g.players) size *= p.actions.size();
    std::vector<std::size_t> table(size);
    std::bernoulli_distribution coin(0.5);
    for (auto& t : table) t = coin(rng) ? 0 : 1;
    g.rule = DecisionRule::explicit_table(std::move(table));
  } else {
    // Nondecreasing weights give monotone rules; signed weights need not.
    const bool sorted = rule_kind == 0;
    std::vector<std::vector<Rational>> weights;
    Rational top = 0;
    for (const auto& p : g.players) {
      std::vector<int> w(p.actions.size());
      std::uniform_int_distribution<int> d(sorted ? 0 : -3, 4);
      for (auto& x : w) x = d(rng);
      if (sorted) std::sort(w.begin(), w.end());
      std::vector<Rational> row;
      for (auto x : w) row.push_back(Rational(x));
      top += *std::max_element(w.begin(), w.end());
      weights.push_back(std::move(row));
    }
    const int q = std::uniform_int_distribution<int>(0, std::max(1, static_cast<int>(top.get_num().get_si())))(rng);
    g.rule = DecisionRule::weighted_quota(std::move(weights), Rational(q), 0, 1);
  }
  if (opt.product_model) {
    std::vector<std::vector<Rational>> dist;
    for (const auto& p : g.players) {
      std::vector<Rational> d;
      random_probability_split(rng, d, p.actions.size(), true);
      dist.push_back(std::move(d));
    }
    g.model = ProbabilityModel::product(std::move(dist));
  } else {
    g.model = ProbabilityModel::uniform();
  }
  g.validate();
  return g;
}

}  // namespace oracle

#endif  // VPOW_TESTS_ORACLES_HPP
