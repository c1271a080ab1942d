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

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "opencoh/io.hpp"
#include "opencoh/jobs.hpp"

namespace opencoh {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::path(::testing::TempDir()) / ("opencoh-" + name);
  fs::remove_all(p);
  return p;
}

const ProducedFile* find_file(const RunManifest& m, const std::string& filename) {
  for (const auto& f : m.files) {
    if (f.path.filename() == filename) return &f;
  }
  return nullptr;
}

TEST(Config, RecipeRoundTrip) {
  for (const Recipe& r : figure_recipes()) {
    const std::string text = serialize_config(r.config);
    const JobConfig parsed = parse_config(text);
    EXPECT_EQ(parsed, r.config) << r.name;
    EXPECT_EQ(serialize_config(parsed), text) << r.name;
  }
  EXPECT_THROW(find_recipe("fig9"), ConfigError);
}

TEST(Config, RejectsUnknownKeysAndVersions) {
  const std::string good = serialize_config(find_recipe("fig1a").config);
  EXPECT_THROW(parse_config(good + "bogus: 1\n"), ConfigError);
  std::string v2 = good;
  v2.replace(v2.find("version: 1"), 10, "version: 2");
  EXPECT_THROW(parse_config(v2), ConfigError);
  EXPECT_THROW(parse_config(good.substr(good.find('\n') + 1)), ConfigError);
  // A settings block for another job kind is an error too.
  EXPECT_THROW(parse_config(good + "evolve:\n  dt: 0.1\n"), ConfigError);
}

TEST(Config, RingTooSmall) {
  std::string text = serialize_config(find_recipe("fig1a").config);
  text.replace(text.find("n: 4"), 4, "n: 2");
  try {
    parse_config(text);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 3"), std::string::npos) << e.what();
  }
}

TEST(RunJob, SpectrumRecipe) {
  const fs::path out = scratch_dir("spectrum");
  const RunManifest m = run_job(find_recipe("fig1a").config, {.out_dir = out, .seed = std::nullopt});
  EXPECT_EQ(m.exit_code, 0);
  EXPECT_EQ(m.directory, out / "fig1a");
  const ProducedFile* csv = find_file(m, "eigenvalues.csv");
  ASSERT_NE(csv, nullptr);
  EXPECT_TRUE(fs::exists(m.directory / "manifest.json"));
  const std::string text = io::read_file(m.directory / csv->path);
  EXPECT_EQ(io::content_digest(text), csv->sha256);
  std::istringstream is(text);
  std::string line;
  int oscillating = 0;
  while (std::getline(is, line)) {
    if (line.find(",oscillating,") == std::string::npos) continue;
    ++oscillating;
    const double im = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(std::abs(im), 8.0, 1e-6);
  }
  EXPECT_EQ(oscillating, 4);
}

TEST(RunJob, DarkStateJobOnXxzRing) {
  JobConfig cfg = find_recipe("fig1a").config;
  cfg.job = JobKind::kTheorem1;
  cfg.name = "t1";
  const RunManifest m = run_job(cfg, {.out_dir = scratch_dir("theorem1"), .seed = std::nullopt});
  EXPECT_EQ(m.exit_code, 0);
  EXPECT_NE(find_file(m, "report.json"), nullptr);
}

TEST(RunJob, SeedOverrideIsRecorded) {
  JobConfig cfg = find_recipe("fig2a").config;
  cfg.evolve.t_final = 1.0;
  cfg.evolve.stationary_tol.reset();
  const RunManifest m = run_job(cfg, {.out_dir = scratch_dir("seed"), .seed = 7});
  EXPECT_EQ(m.seed, 7u);
  EXPECT_EQ(m.exit_code, 0);
}

TEST(Io, DigestIgnoresCommentLines) {
  EXPECT_EQ(io::content_digest("# generated 2026-01-01\na,b\n1,2\n"), io::content_digest("# other\na,b\n1,2\n"));
  EXPECT_NE(io::content_digest("a,b\n1,2\n"), io::content_digest("a,b\n1,3\n"));
  EXPECT_EQ(io::content_digest(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Io, AtomicWriteReplacesFile) {
  const fs::path dir = scratch_dir("io");
  const fs::path p = dir / "nested" / "file.txt";
  io::atomic_write(p, "first");
  io::atomic_write(p, "second");
  EXPECT_EQ(io::read_file(p), "second");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(p.parent_path())) ++entries;
  EXPECT_EQ(entries, 1u);
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

}  // namespace
}  // namespace opencoh
