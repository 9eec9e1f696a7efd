// Copyright 2026 The fslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end for the experiment harness.
//
//   fslab <experiment> [--config PATH] [--seed U64] [--trials INT] [--out PATH]
//                      [--k INT] [--eps X] [--r INT] [--n INT] [--N INT] ...
//   fslab spectrum TABLE_FILE

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "fslab/boolfn.hpp"
#include "fslab/common.hpp"
#include "fslab/fourier.hpp"
#include "fslab/harness.hpp"

namespace {

// Settings accepted on the command line, in the order they are applied
// after the config file.
const std::pair<const char*, const char*> kSettings[] = {
    {"seed", "master seed"},
    {"trials", "number of independent trials"},
    {"out", "CSV path; the summary goes to <out>.summary.json"},
    {"k", "junta size"},
    {"eps", "distance parameter"},
    {"r", "address bits of the hard instances"},
    {"n", "ambient variable count"},
    {"N", "FS draws per transcript"},
    {"c", "scenario distinguisher constant"},
    {"C", "learner example cap constant"},
    {"delta", "failure probability of the reported interval"},
    {"fixture", "input family"},
    {"threads", "worker threads"},
};

struct ExperimentCommand {
  fslab::ExperimentKind kind;
  CLI::App* app = nullptr;
  std::string config_path;
  std::map<std::string, std::string> values;
};

int RunSpectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "fslab: cannot open '" << path << "'\n";
    return fslab::kExitConfigError;
  }
  const fslab::TruthTable f = fslab::ReadTable(in);
  fslab::DumpSpectrum(std::cout, fslab::Wht(f));
  return fslab::kExitOk;
}

const char* Describe(fslab::ExperimentKind kind) {
  switch (kind) {
    case fslab::ExperimentKind::kTestJunta: return "Run the FS junta tester on a fixture";
    case fslab::ExperimentKind::kLearnJunta: return "Run the hybrid FS + examples junta learner";
    case fslab::ExperimentKind::kLbCollision: return "Parity-collision distinguisher on hard instances";
    case fslab::ExperimentKind::kLbTv: return "TV lower-bound estimate between transcript features";
    case fslab::ExperimentKind::kScenario: return "Scenario I vs II distinguisher";
    case fslab::ExperimentKind::kFsDist: return "Chi-square check of the FS draw distribution";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-sampling junta laboratory"};
  app.require_subcommand(1);

  std::vector<ExperimentCommand> commands;
  commands.reserve(6);
  for (auto kind : {fslab::ExperimentKind::kTestJunta, fslab::ExperimentKind::kLearnJunta,
                    fslab::ExperimentKind::kLbCollision, fslab::ExperimentKind::kLbTv,
                    fslab::ExperimentKind::kScenario, fslab::ExperimentKind::kFsDist}) {
    auto& cmd = commands.emplace_back();
    cmd.kind = kind;
    cmd.app = app.add_subcommand(std::string(fslab::ToString(kind)), Describe(kind));
    cmd.app->add_option("--config", cmd.config_path, "key = value config file");
    for (const auto& [key, help] : kSettings) {
      cmd.app->add_option(std::string("--") + key, cmd.values[key], help);
    }
  }

  std::string table_path;
  auto* spectrum = app.add_subcommand("spectrum", "Dump the integer spectrum of a truth table file");
  spectrum->add_option("table", table_path, "truth table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? fslab::kExitOk : fslab::kExitConfigError;
  }

  try {
    if (spectrum->parsed()) return RunSpectrum(table_path);
    for (auto& cmd : commands) {
      if (!cmd.app->parsed()) continue;
      fslab::ExperimentConfig cfg;
      if (!cmd.config_path.empty()) fslab::LoadConfigFile(cfg, cmd.config_path);
      cfg.kind = cmd.kind;
      for (const auto& [key, help] : kSettings) {
        if (cmd.app->get_option(std::string("--") + key)->count() > 0) {
          fslab::ApplySetting(cfg, key, cmd.values[key]);
        }
      }
      const auto result = fslab::RunExperiment(cfg);
      fslab::WriteResult(cfg, result, std::cout, std::cerr);
      return fslab::kExitOk;
    }
  } catch (const fslab::ConfigError& e) {
    std::cerr << "fslab: config error: " << e.what() << '\n';
    return fslab::kExitConfigError;
  } catch (const fslab::BudgetExceeded& e) {
    std::cerr << "fslab: budget exceeded: " << e.what() << '\n';
    return fslab::kExitBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fslab: invalid input: " << e.what() << '\n';
    return fslab::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "fslab: " << e.what() << '\n';
    return 1;
  }
  return fslab::kExitOk;
}
