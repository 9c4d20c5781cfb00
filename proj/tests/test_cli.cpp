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


#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "vpow/cli.hpp"
#include "vpow/report.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = vpow::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze reports exact values") {
  const auto r = run({"analyze", fixture::corpus("committee"), "--format", "json"});
  REQUIRE(r.code == vpow::kExitOk);
  CHECK(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["game"]["path"] == "exact");
  CHECK(j["players"][0]["indices"]["banzhaf"]["normalized"]["fraction"] == "7/11");
  CHECK(j["players"][0]["criticality"]["TC^delta"]["direct"]["fraction"] == "7/8");
  CHECK(j.contains("version"));
  CHECK(j.contains("model"));
}

TEST_CASE("banzhaf column is 7:1:1:1:1") {
  const auto r = run({"oracle", fixture::corpus("committee"), "--index", "banzhaf", "--format", "json"});
  REQUIRE(r.code == vpow::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> values;
  for (const auto& p : j["players"]) values.push_back(p["value"]["fraction"]);
  CHECK(values == std::vector<std::string>{"7/8", "1/8", "1/8", "1/8", "1/8"});
}

TEST_CASE("table output") {
  const auto r = run({"probabilities", fixture::corpus("committee"), "--player", "A"});
  REQUIRE(r.code == vpow::kExitOk);
  CHECK(r.out.find("total power") != std::string::npos);
  CHECK(r.out.find("93.75% - 6.25% = 87.5%") != std::string::npos);
}

TEST_CASE("minimum winning events of the dictator game") {
  const auto r = run({"mwe", fixture::corpus("dictator"), "--format", "json"});
  REQUIRE(r.code == vpow::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(!j["events"].empty());
  for (const auto& e : j["events"]) CHECK(e["supporters"] == nlohmann::json::array({"A"}));
}

TEST_CASE("every corpus game passes check-identities") {
  for (const auto& entry : std::filesystem::directory_iterator(std::string(VPOW_DATA_DIR) + "/games")) {
    CAPTURE(entry.path().string());
    const auto r = run({"check-identities", entry.path().string()});
    CHECK(r.code == vpow::kExitOk);
    CHECK(r.err.empty());
  }
}

TEST_CASE("identity failures are detected") {
  std::vector<vpow::IdentityCheck> checks(2);
  checks[0].status = vpow::CheckStatus::pass;
  checks[1].status = vpow::CheckStatus::skipped;
  CHECK(vpow::all_passed(checks));
  checks[1].status = vpow::CheckStatus::fail;
  CHECK_FALSE(vpow::all_passed(checks));
}

TEST_CASE("monte-carlo command") {
  const auto r = run({"mc", fixture::corpus("committee"), "--player", "A", "--samples", "20000", "--seed", "5",
                      "--format", "json"});
  REQUIRE(r.code == vpow::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["game"]["path"] == "monte-carlo");
  CHECK(j["estimate"]["samples"] == 20000);
  CHECK(j["estimate"]["seed"] == 5);
  const double point = j["estimate"]["point"];
  const double se = j["estimate"]["standard_error"];
  CHECK(std::abs(point - 0.875) < 4 * se);
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "/nonexistent.json"}).code == vpow::kExitValidation);
  CHECK(run({"frobnicate"}).code == vpow::kExitValidation);
  CHECK(run({"analyze", fixture::corpus("committee"), "--outcome", "draw"}).code == vpow::kExitValidation);
  CHECK(run({"analyze", fixture::corpus("committee"), "--cap", "10"}).code == vpow::kExitValidation);
  CHECK(run({"mc", fixture::corpus("committee"), "--samples", "10"}).code == vpow::kExitValidation);
  CHECK(run({"mwe", fixture::corpus("parity3")}).code == vpow::kExitNotApplicable);
  CHECK(run({"oracle", fixture::corpus("constant"), "--index", "coleman"}).code == vpow::kExitNotApplicable);
  CHECK(run({"oracle", fixture::corpus("abstention"), "--index", "shapley-shubik"}).code == vpow::kExitNotApplicable);
  CHECK(run({"--help"}).code == vpow::kExitOk);
}

TEST_CASE("diagnostics go to the error stream only") {
  const auto r = run({"analyze", "/nonexistent.json"});
  CHECK(r.out.empty());
  CHECK(r.err.find("/nonexistent.json") != std::string::npos);
}
