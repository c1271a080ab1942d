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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opencoh/certificates.hpp"
#include "opencoh/hilbert.hpp"
#include "opencoh/models.hpp"
#include "opencoh/spectral.hpp"

namespace opencoh {

/// Invalid or inconsistent job configuration (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class JobKind { kSpectrum, kEvolve, kTheorem1, kTheorem3, kCorollary1, kMultiblock, kStationary, kScan };
std::string to_string(JobKind k);
JobKind parse_job_kind(const std::string& s);

enum class ModelKind { kXxz, kHubbard };

struct ModelConfig {
  ModelKind kind = ModelKind::kXxz;
  XxzRingParams xxz;
  HubbardChainParams hubbard;
  bool operator==(const ModelConfig&) const;
};

/// How a density matrix is prepared for a job.
struct StateSpec {
  // canonical | maximally-mixed | sector | grand-canonical | random | all-down | dark-superposition
  std::string kind = "canonical";
  std::array<double, 3> betas{0.0, 0.0, 0.0};  // grand-canonical
  int sector = 0;                              // sector: particle number N
  int dark_n = 0;                              // dark-superposition: |φ_n⟩ + e^{iα}|φ_m⟩
  int dark_m = 1;
  double alpha = 0.0;
  bool operator==(const StateSpec&) const = default;
};

struct OperatorSpec {
  std::string name = "eta_plus";  // eta_plus | eta_minus | s_plus | s_minus | identity | file
  std::string file;               // coordinate file, relative to the config's directory
  bool operator==(const OperatorSpec&) const = default;
};

struct SpectrumSettings {
  std::string mode = "full";  // full | targeted
  VectorRetention vectors = VectorRetention::kAuto;
  double rel_zero = 1e-8;
  double rel_re = 1e-8;
  std::vector<Complex> shifts;  // targeted
  int nev = 16;
  int krylov_dim = 48;
  int max_restarts = 60;
  double tol = 1e-10;
  bool split_blocks = true;
  bool operator==(const SpectrumSettings&) const = default;
};

struct EvolveSettings {
  double t_final = 200.0;
  double dt = 0.05;
  double rel_tol = 1e-9;
  StateSpec initial{.kind = "random"};
  LocalOp observable = LocalOp::kSx;
  int observable_site = 2;
  /// When set, the final state is compared with the canonical stationary
  /// state and the job fails (exit 2) if the distance exceeds this value.
  std::optional<double> stationary_tol;
  bool operator==(const EvolveSettings&) const = default;
};

struct Theorem1Settings {
  double tol = 1e-8;
  bool theorem2 = true;  // also check oscillating modes and search for invariant subspaces (d <= 16)
  InvarianceSet invariance = InvarianceSet::kJumpsAndEffective;
  int trials = 32;
  bool operator==(const Theorem1Settings&) const = default;
};

struct Theorem3Settings {
  OperatorSpec op;
  StateSpec state;
  double tol = 1e-8;
  bool operator==(const Theorem3Settings&) const = default;
};

struct Corollary1Settings {
  OperatorSpec op;
  StateSpec state;
  int max_power = 2;
  double premise_tol = 1e-10;
  double mode_tol = 1e-9;
  bool operator==(const Corollary1Settings&) const = default;
};

struct MultiblockSettings {
  OperatorSpec op;
  StateSpec state;
  int max_power = 1;
  double tol = 1e-8;
  bool operator==(const MultiblockSettings&) const = default;
};

struct StationarySettings {
  double tol = 1e-9;
  std::vector<std::array<double, 3>> betas;  // grand-canonical family to verify (Hubbard only)
  double gc_tol = 1e-8;
  bool operator==(const StationarySettings&) const = default;
};

struct ScanSettings {
  std::vector<int> ns{3, 4, 5, 6};
  double delta = 2.0;
  double gamma = 1.0;
  bool operator==(const ScanSettings&) const = default;
};

/// One job. Only the settings block matching `job` is read and written.
struct JobConfig {
  int version = 1;
  JobKind job = JobKind::kSpectrum;
  std::string name;  // output subdirectory; defaults to the job kind
  std::string description;
  bool optional = false;  // informational: too heavy for routine runs
  std::uint64_t seed = 42;
  std::optional<std::string> output_dir;
  ModelConfig model;
  SpectrumSettings spectrum;
  EvolveSettings evolve;
  Theorem1Settings theorem1;
  Theorem3Settings theorem3;
  Corollary1Settings corollary1;
  MultiblockSettings multiblock;
  StationarySettings stationary;
  ScanSettings scan;
  /// Directory that relative file references resolve against.
  std::filesystem::path base_dir;

  std::string job_name() const { return name.empty() ? to_string(job) : name; }
  bool operator==(const JobConfig&) const;
};

/// Parses a version-1 YAML job file. Unknown keys, a missing or wrong
/// version, and invalid values raise ConfigError.
JobConfig parse_config(const std::string& yaml_text, const std::filesystem::path& base_dir = {});
JobConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const JobConfig& cfg);

struct RunOptions {
  std::optional<std::filesystem::path> out_dir;  // overrides the config and the environment
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

struct ProducedFile {
  std::filesystem::path path;
  std::string sha256;
};

struct RunManifest {
  std::string job_name;
  std::filesystem::path directory;
  std::vector<ProducedFile> files;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  int exit_code = 0;  // 0 success, 2 verification failure
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputEnv = "OPENCOH_OUT";

/// Runs the job and writes <out>/<job-name>/... plus manifest.json. Returns
/// exit code 0 or 2 in the manifest; configuration and runtime problems
/// propagate as exceptions (exit code 1 at the command line).
RunManifest run_job(const JobConfig& cfg, const RunOptions& opts = {});

struct Recipe {
  std::string name;
  std::string summary;
  JobConfig config;
};

/// Bundled figure configurations: fig1a, fig1b, fig1c (optional), fig2a, fig2b.
std::vector<Recipe> figure_recipes();
const Recipe& find_recipe(const std::string& name);

/// Builds the model operators for a config.
struct BuiltModel {
  SparseOperator hamiltonian;
  LindbladSet jumps;
  std::optional<SymmetrySet> symmetries;
};
BuiltModel build_model(const ModelConfig& m);

}  // namespace opencoh
