// Copyright 2026 The opencoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "opencoh/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"opencoh: Lindblad spectra, dynamics and asymptotic-coherence checks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a job described by a YAML config");
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int threads = 1;
  run->add_option("config", config_path, "Job config file")->required();
  run->add_option("--out", out_dir, std::string("Output directory (default: $") + opencoh::kOutputEnv +
                                        " or ./opencoh-out)");
  auto* seed_opt = run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--threads", threads, "Worker threads for scan jobs")->check(CLI::PositiveNumber);

  auto* recipes = app.add_subcommand("recipes", "Bundled figure configs");
  recipes->require_subcommand(1);
  auto* list = recipes->add_subcommand("list", "List recipes");
  auto* emit = recipes->add_subcommand("emit", "Print a recipe config to standard output");
  std::string recipe_name;
  emit->add_option("name", recipe_name, "Recipe name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      opencoh::RunOptions opts;
      if (!out_dir.empty()) opts.out_dir = out_dir;
      if (*seed_opt) opts.seed = seed;
      opts.threads = threads;
      const opencoh::JobConfig cfg = opencoh::load_config(config_path);
      const opencoh::RunManifest m = opencoh::run_job(cfg, opts);
      std::cerr << m.job_name << ": wrote " << m.files.size() << " file(s) to " << m.directory.string() << "\n";
      if (m.exit_code == 2) std::cerr << m.job_name << ": verification failed, see report.json\n";
      return m.exit_code;
    }
    if (*list) {
      for (const auto& r : opencoh::figure_recipes()) {
        std::printf("%-6s %s%s\n", r.name.c_str(), r.summary.c_str(), r.config.optional ? " [optional]" : "");
      }
      return 0;
    }
    if (*emit) {
      std::fputs(opencoh::serialize_config(opencoh::find_recipe(recipe_name).config).c_str(), stdout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
