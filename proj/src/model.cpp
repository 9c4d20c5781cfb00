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

#include "vpow/model.hpp"

#include "vpow/errors.hpp"

namespace vpow {
namespace {

std::string sum_text(const Rational& sum) {
  return to_decimal_string(sum, 12) + " (" + to_fraction_string(sum) + ")";
}

std::vector<std::size_t> radices_of(const std::vector<PlayerSpace>& players) {
  std::vector<std::size_t> radices;
  radices.reserve(players.size());
  for (const auto& p : players) radices.push_back(p.actions.size());
  return radices;
}

}  // namespace

const char* to_string(ProbabilityModel::Kind kind) {
  switch (kind) {
    case ProbabilityModel::Kind::uniform:
      return "uniform";
    case ProbabilityModel::Kind::product:
      return "product";
    case ProbabilityModel::Kind::homogeneity:
      return "homogeneity";
    case ProbabilityModel::Kind::explicit_table:
      return "explicit-table";
    case ProbabilityModel::Kind::mixture:
      return "mixture";
  }
  return "?";
}

ProbabilityModel ProbabilityModel::uniform() { return ProbabilityModel{}; }

ProbabilityModel ProbabilityModel::product(std::vector<std::vector<Rational>> distributions) {
  ProbabilityModel m;
  m.kind_ = Kind::product;
  m.distributions_ = std::move(distributions);
  return m;
}

ProbabilityModel ProbabilityModel::homogeneity() {
  ProbabilityModel m;
  m.kind_ = Kind::homogeneity;
  return m;
}

ProbabilityModel ProbabilityModel::explicit_table(std::map<Configuration, Rational> masses) {
  ProbabilityModel m;
  m.kind_ = Kind::explicit_table;
  m.table_ = std::move(masses);
  return m;
}

ProbabilityModel ProbabilityModel::mixture(std::vector<Component> components) {
  ProbabilityModel m;
  m.kind_ = Kind::mixture;
  m.components_ = std::move(components);
  return m;
}

bool ProbabilityModel::is_product() const {
  switch (kind_) {
    case Kind::uniform:
    case Kind::product:
      return true;
    case Kind::mixture:
      return components_.size() == 1 && components_.front().model->is_product();
    default:
      return false;
  }
}

void ProbabilityModel::validate(const std::vector<PlayerSpace>& players) const {
  switch (kind_) {
    case Kind::uniform:
      return;
    case Kind::product: {
      if (distributions_.size() != players.size()) {
        throw ValidationError("product model has " + std::to_string(distributions_.size()) +
                              " distributions for " + std::to_string(players.size()) + " players");
      }
      for (std::size_t p = 0; p < players.size(); ++p) {
        const auto& dist = distributions_[p];
        if (dist.size() != players[p].actions.size()) {
          throw ValidationError("product model distribution for player '" + players[p].id + "' has " +
                                std::to_string(dist.size()) + " entries, expected " +
                                std::to_string(players[p].actions.size()));
        }
        Rational sum = 0;
        for (const auto& v : dist) {
          if (sgn(v) < 0) throw ValidationError("negative probability for player '" + players[p].id + "'");
          sum += v;
        }
        if (sum != 1) {
          throw ValidationError("product model distribution for player '" + players[p].id + "' sums to " +
                                sum_text(sum) + ", expected 1");
        }
      }
      return;
    }
    case Kind::homogeneity:
      for (const auto& p : players) {
        if (p.actions.size() != 2) {
          throw ValidationError("homogeneity model requires binary players; player '" + p.id + "' has " +
                                std::to_string(p.actions.size()) + " actions");
        }
      }
      return;
    case Kind::explicit_table: {
      const ConfigurationSpace space(radices_of(players));
      Rational sum = 0;
      for (const auto& [config, mass] : table_) {
        space.index_of(config.actions);  // throws on an invalid key
        if (sgn(mass) < 0) throw ValidationError("negative mass in explicit-table model");
        sum += mass;
      }
      if (sum != 1) throw ValidationError("explicit-table model masses sum to " + sum_text(sum) + ", expected 1");
      return;
    }
    case Kind::mixture: {
      if (components_.empty()) throw ValidationError("mixture model needs at least one component");
      Rational sum = 0;
      for (const auto& c : components_) {
        if (sgn(c.weight) < 0) throw ValidationError("negative mixture weight");
        if (!c.model) throw ValidationError("mixture component without a model");
        c.model->validate(players);
        sum += c.weight;
      }
      if (sum != 1) throw ValidationError("mixture weights sum to " + sum_text(sum) + ", expected 1");
      return;
    }
  }
}

Rational ProbabilityModel::mass(const std::vector<PlayerSpace>& players,
                                std::span<const std::size_t> actions) const {
  switch (kind_) {
    case Kind::uniform: {
      mpz_class den = 1;
      for (const auto& p : players) den *= static_cast<unsigned long>(p.actions.size());
      return Rational(mpz_class(1), den);
    }
    case Kind::product: {
      Rational m = 1;
      for (std::size_t p = 0; p < actions.size(); ++p) m *= distributions_[p][actions[p]];
      return m;
    }
    case Kind::homogeneity: {
      std::size_t yes = 0;
      for (auto a : actions) yes += (a == 1);
      return homogeneity_mass_closed_form(actions.size(), yes);
    }
    case Kind::explicit_table: {
      const auto it = table_.find(Configuration{std::vector<std::size_t>(actions.begin(), actions.end())});
      return it == table_.end() ? Rational(0) : it->second;
    }
    case Kind::mixture: {
      Rational m = 0;
      for (const auto& c : components_) m += c.weight * c.model->mass(players, actions);
      return m;
    }
  }
  return 0;
}

std::vector<Rational> ProbabilityModel::action_marginal(const std::vector<PlayerSpace>& players,
                                                        std::size_t player) const {
  const std::size_t k = players.at(player).actions.size();
  switch (kind_) {
    case Kind::uniform:
      return std::vector<Rational>(k, Rational(1, static_cast<unsigned long>(k)));
    case Kind::product:
      return distributions_.at(player);
    case Kind::homogeneity:
      // ∫ p dp = ∫ (1-p) dp = 1/2
      return std::vector<Rational>(k, Rational(1, 2));
    case Kind::explicit_table: {
      std::vector<Rational> out(k, Rational(0));
      for (const auto& [config, mass] : table_) out[config.actions[player]] += mass;
      return out;
    }
    case Kind::mixture: {
      std::vector<Rational> out(k, Rational(0));
      for (const auto& c : components_) {
        const auto part = c.model->action_marginal(players, player);
        for (std::size_t a = 0; a < k; ++a) out[a] += c.weight * part[a];
      }
      return out;
    }
  }
  return {};
}

std::string ProbabilityModel::label() const {
  switch (kind_) {
    case Kind::mixture: {
      std::string s = "mixture[";
      for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += ", ";
        s += to_fraction_string(components_[i].weight) + "*" + components_[i].model->label();
      }
      return s + "]";
    }
    default:
      return to_string(kind_);
  }
}

bool ProbabilityModel::operator==(const ProbabilityModel& other) const {
  if (kind_ != other.kind_ || distributions_ != other.distributions_ || table_ != other.table_ ||
      components_.size() != other.components_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].weight != other.components_[i].weight || !(*components_[i].model == *other.components_[i].model)) {
      return false;
    }
  }
  return true;
}

Rational homogeneity_mass_closed_form(std::size_t n, std::size_t k) {
  if (k > n) throw ValidationError("yes-count " + std::to_string(k) + " exceeds player count " + std::to_string(n));
  return factorial(k) * factorial(n - k) / factorial(n + 1);
}

ReducedMass marginalize(const ProbabilityModel& model, const std::vector<PlayerSpace>& players,
                        std::size_t excluded) {
  if (excluded >= players.size()) {
    throw ValidationError("player index " + std::to_string(excluded) + " out of range");
  }
  auto radices = radices_of(players);
  const ConfigurationSpace full(radices);
  radices.erase(radices.begin() + static_cast<std::ptrdiff_t>(excluded));
  ReducedMass out;
  out.excluded = excluded;
  out.space = ConfigurationSpace(std::move(radices));
  out.mass.assign(out.space.size(), Rational(0));

  std::vector<std::size_t> actions(players.size(), 0);
  std::vector<std::size_t> reduced(players.size() - 1);
  do {
    for (std::size_t p = 0, q = 0; p < actions.size(); ++p) {
      if (p != excluded) reduced[q++] = actions[p];
    }
    out.mass[out.space.index_of(reduced)] += model.mass(players, actions);
  } while (full.next(actions));
  return out;
}

}  // namespace vpow
