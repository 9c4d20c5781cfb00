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


#include "vpow/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <thread>

#include "vpow/errors.hpp"

namespace vpow {
namespace {

constexpr std::uint64_t kBlock = 4096;
constexpr double kZ95 = 1.959963984540054;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Cumulative distribution rounded from exact partial sums; the last entry is
// exactly 1.
std::vector<double> cumulative(const std::vector<Rational>& masses) {
  std::vector<double> cdf;
  cdf.reserve(masses.size());
  Rational running = 0;
  for (const auto& m : masses) {
    running += m;
    cdf.push_back(to_double(running));
  }
  return cdf;
}

std::size_t pick(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  // Rounding can leave u above the last partial sum; trailing zero-mass
  // entries must never be picked.
  if (it == cdf.end()) {
    std::size_t i = cdf.size() - 1;
    while (i > 0 && cdf[i - 1] == cdf[i]) --i;
    return i;
  }
  return static_cast<std::size_t>(it - cdf.begin());
}

// Forward sampler for one model. Lanes are consumed from `lane` upward.
class Sampler {
 public:
  Sampler(const ProbabilityModel& model, const std::vector<PlayerSpace>& players)
      : kind_(model.kind()), radices_(players.size()) {
    for (std::size_t p = 0; p < players.size(); ++p) radices_[p] = players[p].actions.size();
    switch (kind_) {
      case ProbabilityModel::Kind::uniform:
      case ProbabilityModel::Kind::homogeneity:
        break;
      case ProbabilityModel::Kind::product:
        for (const auto& d : model.distributions()) cdfs_.push_back(cumulative(d));
        break;
      case ProbabilityModel::Kind::explicit_table: {
        std::vector<Rational> masses;
        for (const auto& [config, mass] : model.table()) {
          entries_.push_back(config);
          masses.push_back(mass);
        }
        cdfs_.push_back(cumulative(masses));
        break;
      }
      case ProbabilityModel::Kind::mixture: {
        std::vector<Rational> weights;
        for (const auto& c : model.components()) {
          weights.push_back(c.weight);
          components_.push_back(std::make_unique<Sampler>(*c.model, players));
        }
        cdfs_.push_back(cumulative(weights));
        break;
      }
    }
  }

  void draw(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane, std::vector<std::size_t>& actions) const {
    const std::size_t n = radices_.size();
    switch (kind_) {
      case ProbabilityModel::Kind::uniform:
        for (std::size_t p = 0; p < n; ++p) {
          const auto a = static_cast<std::size_t>(random_unit(seed, sample, lane + p) * static_cast<double>(radices_[p]));
          actions[p] = std::min(a, radices_[p] - 1);
        }
        break;
      case ProbabilityModel::Kind::product:
        for (std::size_t p = 0; p < n; ++p) actions[p] = pick(cdfs_[p], random_unit(seed, sample, lane + p));
        break;
      case ProbabilityModel::Kind::homogeneity: {
        const double yes = random_unit(seed, sample, lane);
        for (std::size_t p = 0; p < n; ++p) actions[p] = random_unit(seed, sample, lane + 1 + p) < yes ? 1 : 0;
        break;
      }
      case ProbabilityModel::Kind::explicit_table: {
        const auto& config = entries_[pick(cdfs_[0], random_unit(seed, sample, lane))];
        std::copy(config.actions.begin(), config.actions.end(), actions.begin());
        break;
      }
      case ProbabilityModel::Kind::mixture: {
        const std::size_t c = pick(cdfs_[0], random_unit(seed, sample, lane));
        components_[c]->draw(seed, sample, lane + 1, actions);
        break;
      }
    }
  }

 private:
  ProbabilityModel::Kind kind_;
  std::vector<std::size_t> radices_;
  std::vector<std::vector<double>> cdfs_;
  std::vector<Configuration> entries_;
  std::vector<std::unique_ptr<Sampler>> components_;
};

struct Counts {
  std::uint64_t accepted = 0;
  std::uint64_t hits = 0;
};

// Indicator of one criticality set at the sampled configuration. `actions`
// is restored before returning.
bool critical_at(const GeneralVotingGame& game, const ConfigurationSpace& space, std::size_t outcome,
                 std::size_t player, CriticalityKind kind, std::vector<std::size_t>& actions) {
  const std::size_t own = actions[player];
  const std::size_t k = space.radix(player);
  bool achieves_any = false;
  bool fails_any = false;
  std::size_t worst = k;
  for (std::size_t a = 0; a < k; ++a) {
    actions[player] = a;
    const bool yields = game.rule.evaluate(space, actions) == outcome;
    achieves_any = achieves_any || yields;
    if (!yields) {
      fails_any = true;
      if (worst == k) worst = a;
    }
  }
  actions[player] = own;
  if (worst == k) worst = 0;
  const bool current = game.rule.evaluate(space, actions) == outcome;

  const bool decreasing = current && fails_any;
  bool increasing = !current && achieves_any;
  if (increasing && kind.assumption == Assumption::zero) {
    const std::size_t floor = game.players[player].min_action.value_or(worst);
    increasing = own == floor;
  }
  switch (kind.direction) {
    case Direction::increasing:
      return increasing;
    case Direction::decreasing:
      return decreasing;
    case Direction::total:
      return increasing || decreasing;
  }
  return false;
}

}  // namespace

std::uint64_t random_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane) {
  return splitmix64(splitmix64(splitmix64(seed) + sample) + lane);
}

double random_unit(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane) {
  return static_cast<double>(random_word(seed, sample, lane) >> 11) * 0x1.0p-53;
}

EstimationTarget EstimationTarget::outcome_of(std::size_t outcome) {
  EstimationTarget t;
  t.kind = Kind::outcome;
  t.outcome = outcome;
  return t;
}

EstimationTarget EstimationTarget::criticality_of(std::size_t outcome, std::size_t player, CriticalityKind kind) {
  EstimationTarget t;
  t.kind = Kind::criticality;
  t.outcome = outcome;
  t.player = player;
  t.criticality = kind;
  return t;
}

EstimationTarget EstimationTarget::conditional_of(std::size_t outcome, std::size_t player, std::size_t action) {
  EstimationTarget t;
  t.kind = Kind::conditional;
  t.outcome = outcome;
  t.player = player;
  t.action = action;
  return t;
}

Estimate mc_estimate(const GeneralVotingGame& game, const EstimationTarget& target, std::uint64_t samples,
                     std::uint64_t seed, unsigned threads) {
  if (samples < kMinimumSamples) {
    throw ValidationError("Monte-Carlo estimation needs at least " + std::to_string(kMinimumSamples) + " samples");
  }
  if (target.outcome >= game.outcomes.size()) throw ValidationError("outcome index out of range");
  if (target.kind != EstimationTarget::Kind::outcome && target.player >= game.players.size()) {
    throw ValidationError("player index out of range");
  }
  if (target.kind == EstimationTarget::Kind::conditional &&
      target.action >= game.players[target.player].actions.size()) {
    throw ValidationError("action index out of range");
  }

  const Sampler sampler(game.model, game.players);
  const auto space = game.space();
  const bool substitute = target.kind == EstimationTarget::Kind::conditional && game.model.is_product();

  Estimate est;
  est.samples = samples;
  est.seed = seed;
  est.method = target.kind != EstimationTarget::Kind::conditional ? "direct"
               : substitute                                        ? "forced-substitution"
                                                                   : "rejection";

  auto run_block = [&](std::uint64_t first, std::uint64_t last) {
    Counts c;
    std::vector<std::size_t> actions(game.players.size(), 0);
    for (std::uint64_t s = first; s < last; ++s) {
      sampler.draw(seed, s, 0, actions);
      bool hit = false;
      switch (target.kind) {
        case EstimationTarget::Kind::outcome:
          hit = game.rule.evaluate(space, actions) == target.outcome;
          break;
        case EstimationTarget::Kind::criticality:
          hit = critical_at(game, space, target.outcome, target.player, target.criticality, actions);
          break;
        case EstimationTarget::Kind::conditional:
          if (substitute) {
            actions[target.player] = target.action;
          } else if (actions[target.player] != target.action) {
            continue;
          }
          hit = game.rule.evaluate(space, actions) == target.outcome;
          break;
      }
      ++c.accepted;
      c.hits += hit ? 1 : 0;
    }
    return c;
  };

  // Fixed blocks, integer counts: the sum is independent of scheduling.
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  std::vector<Counts> per_worker(workers);
  auto work = [&](unsigned w) {
    for (std::uint64_t b = w; b < blocks; b += workers) {
      const auto c = run_block(b * kBlock, std::min(samples, (b + 1) * kBlock));
      per_worker[w].accepted += c.accepted;
      per_worker[w].hits += c.hits;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& c : per_worker) {
    est.accepted += c.accepted;
    est.hits += c.hits;
  }

  if (static_cast<double>(est.accepted) < kMinimumAcceptanceRate * static_cast<double>(samples) ||
      est.accepted < 2) {
    throw EstimationError("rejection sampling accepted " + std::to_string(est.accepted) + " of " +
                          std::to_string(samples) + " samples for " + game.players[target.player].id + " = " +
                          game.players[target.player].actions[target.action] +
                          "; the acceptance rate is below 1e-4, so the conditional cannot be estimated");
  }
  const double n = static_cast<double>(est.accepted);
  est.point = static_cast<double>(est.hits) / n;
  // Unbiased sample variance of a 0/1 indicator.
  const double variance = est.point * (1.0 - est.point) * n / (n - 1.0);
  est.standard_error = std::sqrt(variance / n);
  est.ci_low = std::max(0.0, est.point - kZ95 * est.standard_error);
  est.ci_high = std::min(1.0, est.point + kZ95 * est.standard_error);
  return est;
}

}  // namespace vpow
