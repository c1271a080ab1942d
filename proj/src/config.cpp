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
#include <charconv>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "opencoh/io.hpp"
#include "opencoh/jobs.hpp"

namespace opencoh {

namespace {

constexpr std::pair<JobKind, const char*> kJobNames[] = {
    {JobKind::kSpectrum, "spectrum"},
    {JobKind::kEvolve, "evolve"},
    {JobKind::kTheorem1, "verify-theorem1"},
    {JobKind::kTheorem3, "verify-theorem3"},
    {JobKind::kCorollary1, "verify-corollary1"},
    {JobKind::kMultiblock, "verify-multiblock"},
    {JobKind::kStationary, "stationary"},
    {JobKind::kScan, "scan"},
};

// Settings block key for each job kind.
const char* section_key(JobKind k) {
  switch (k) {
    case JobKind::kSpectrum: return "spectrum";
    case JobKind::kEvolve: return "evolve";
    case JobKind::kTheorem1: return "theorem1";
    case JobKind::kTheorem3: return "theorem3";
    case JobKind::kCorollary1: return "corollary1";
    case JobKind::kMultiblock: return "multiblock";
    case JobKind::kStationary: return "stationary";
    case JobKind::kScan: return "scan";
  }
  return "";
}

void check_keys(const YAML::Node& node, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!node.IsMap()) throw ConfigError(where + ": expected a mapping");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!ok.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
T get(const YAML::Node& node, const char* key, const std::string& where, T fallback) {
  const YAML::Node v = node[key];
  if (!v) return fallback;
  try {
    return v.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(where + "." + key + ": invalid value");
  }
}

double positive(double v, const std::string& what) {
  if (!(v > 0.0)) throw ConfigError(what + " must be positive");
  return v;
}

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
  return s + "]";
}

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string quoted(const std::string& s) {
  YAML::Emitter e;
  e << YAML::DoubleQuoted << s;
  return e.c_str();
}

const char* vectors_name(VectorRetention v) {
  switch (v) {
    case VectorRetention::kAuto: return "auto";
    case VectorRetention::kAlways: return "always";
    case VectorRetention::kNever: return "never";
  }
  return "auto";
}

VectorRetention parse_vectors(const std::string& s) {
  if (s == "auto") return VectorRetention::kAuto;
  if (s == "always") return VectorRetention::kAlways;
  if (s == "never") return VectorRetention::kNever;
  throw ConfigError("spectrum.vectors: expected auto, always or never");
}

const char* local_op_name(LocalOp op) {
  switch (op) {
    case LocalOp::kSx: return "sx";
    case LocalOp::kSy: return "sy";
    case LocalOp::kSz: return "sz";
    case LocalOp::kSp: return "sp";
    case LocalOp::kSm: return "sm";
    case LocalOp::kIdentity: return "id";
  }
  return "id";
}

const char* dephasing_name(DephasingKind k) {
  switch (k) {
    case DephasingKind::kNone: return "none";
    case DephasingKind::kSpin: return "spin";
    case DephasingKind::kCharge: return "charge";
  }
  return "none";
}

ModelConfig parse_model(const YAML::Node& n) {
  if (!n) throw ConfigError("model: missing");
  const std::string where = "model";
  ModelConfig m;
  const auto kind = get<std::string>(n, "kind", where, "");
  if (kind == "xxz") {
    check_keys(n, {"kind", "n", "delta", "loss_sites", "gammas", "nnn_zz"}, where);
    m.kind = ModelKind::kXxz;
    m.xxz.n = get<int>(n, "n", where, m.xxz.n);
    m.xxz.delta = get<double>(n, "delta", where, m.xxz.delta);
    m.xxz.loss_sites = get<std::vector<int>>(n, "loss_sites", where, {});
    m.xxz.gammas = get<std::vector<double>>(n, "gammas", where, {});
    m.xxz.nnn_zz = get<double>(n, "nnn_zz", where, 0.0);
  } else if (kind == "hubbard") {
    check_keys(n, {"kind", "l_sites", "tau", "u", "mu", "epsilon", "dephasing", "doublon_drive"}, where);
    m.kind = ModelKind::kHubbard;
    auto& h = m.hubbard;
    h.l_sites = get<int>(n, "l_sites", where, h.l_sites);
    h.tau = get<double>(n, "tau", where, h.tau);
    h.u = get<double>(n, "u", where, h.u);
    h.mu = get<double>(n, "mu", where, h.mu);
    h.epsilon = get<std::vector<double>>(n, "epsilon", where, {});
    if (const YAML::Node d = n["dephasing"]) {
      check_keys(d, {"kind", "gammas"}, "model.dephasing");
      const auto dk = get<std::string>(d, "kind", "model.dephasing", "none");
      if (dk == "none") {
        h.dephasing_kind = DephasingKind::kNone;
      } else if (dk == "spin") {
        h.dephasing_kind = DephasingKind::kSpin;
      } else if (dk == "charge") {
        h.dephasing_kind = DephasingKind::kCharge;
      } else {
        throw ConfigError("model.dephasing.kind: expected none, spin or charge");
      }
      h.dephasing_gammas = get<std::vector<double>>(d, "gammas", "model.dephasing", {});
    }
    if (const YAML::Node d = n["doublon_drive"]) {
      const auto g = get<std::vector<double>>(n, "doublon_drive", where, {});
      if (g.size() != 2) throw ConfigError("model.doublon_drive: expected [gamma1, gamma2]");
      h.doublon_drive = std::make_pair(g[0], g[1]);
    }
  } else {
    throw ConfigError("model.kind: expected xxz or hubbard");
  }
  try {
    if (m.kind == ModelKind::kXxz) {
      validate(m.xxz);
    } else {
      validate(m.hubbard);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  return m;
}

StateSpec parse_state(const YAML::Node& n, const std::string& where, StateSpec s) {
  if (!n) return s;
  check_keys(n, {"kind", "betas", "sector", "n", "m", "alpha"}, where);
  s.kind = get<std::string>(n, "kind", where, s.kind);
  static const std::set<std::string> kinds = {"canonical", "maximally-mixed", "sector", "grand-canonical",
                                              "random", "all-down", "dark-superposition"};
  if (!kinds.count(s.kind)) throw ConfigError(where + ".kind: unknown state kind '" + s.kind + "'");
  if (n["betas"]) {
    const auto b = get<std::vector<double>>(n, "betas", where, {});
    if (b.size() != 3) throw ConfigError(where + ".betas: expected three values");
    s.betas = {b[0], b[1], b[2]};
  }
  s.sector = get<int>(n, "sector", where, s.sector);
  s.dark_n = get<int>(n, "n", where, s.dark_n);
  s.dark_m = get<int>(n, "m", where, s.dark_m);
  s.alpha = get<double>(n, "alpha", where, s.alpha);
  return s;
}

OperatorSpec parse_operator(const YAML::Node& n, const std::string& where, const std::filesystem::path& base) {
  OperatorSpec op;
  if (!n) return op;
  check_keys(n, {"name", "file"}, where);
  op.name = get<std::string>(n, "name", where, op.name);
  static const std::set<std::string> names = {"eta_plus", "eta_minus", "s_plus", "s_minus", "identity", "file"};
  if (!names.count(op.name)) throw ConfigError(where + ".name: unknown operator '" + op.name + "'");
  op.file = get<std::string>(n, "file", where, "");
  if (op.name == "file") {
    if (op.file.empty()) throw ConfigError(where + ".file: required for name 'file'");
    if (!std::filesystem::exists(base / op.file)) {
      throw ConfigError(where + ".file: '" + (base / op.file).string() + "' does not exist");
    }
  }
  return op;
}

void emit_state(std::ostringstream& os, const char* key, const StateSpec& s, const char* indent) {
  os << indent << key << ":\n";
  os << indent << "  kind: " << s.kind << "\n";
  if (s.kind == "grand-canonical") {
    os << indent << "  betas: " << list(std::vector<double>(s.betas.begin(), s.betas.end())) << "\n";
  }
  if (s.kind == "sector") os << indent << "  sector: " << s.sector << "\n";
  if (s.kind == "dark-superposition") {
    os << indent << "  n: " << s.dark_n << "\n" << indent << "  m: " << s.dark_m << "\n";
    os << indent << "  alpha: " << num(s.alpha) << "\n";
  }
}

void emit_operator(std::ostringstream& os, const OperatorSpec& op) {
  os << "  operator:\n    name: " << op.name << "\n";
  if (!op.file.empty()) os << "    file: " << quoted(op.file) << "\n";
}

}  // namespace

std::string to_string(JobKind k) {
  for (const auto& [kind, name] : kJobNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

JobKind parse_job_kind(const std::string& s) {
  for (const auto& [kind, name] : kJobNames) {
    if (s == name) return kind;
  }
  throw ConfigError("job: unknown job kind '" + s + "'");
}

bool ModelConfig::operator==(const ModelConfig& o) const {
  if (kind != o.kind) return false;
  return kind == ModelKind::kXxz ? xxz == o.xxz : hubbard == o.hubbard;
}

bool JobConfig::operator==(const JobConfig& o) const {
  return version == o.version && job == o.job && name == o.name && description == o.description &&
         optional == o.optional && seed == o.seed && output_dir == o.output_dir && model == o.model &&
         spectrum == o.spectrum && evolve == o.evolve && theorem1 == o.theorem1 && theorem3 == o.theorem3 &&
         corollary1 == o.corollary1 && multiblock == o.multiblock && stationary == o.stationary && scan == o.scan;
}

JobConfig parse_config(const std::string& yaml_text, const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config is not valid YAML: ") + e.what());
  }
  if (!root || !root.IsMap()) throw ConfigError("config: expected a mapping at top level");
  JobConfig cfg;
  cfg.base_dir = base_dir;
  if (!root["version"]) throw ConfigError("version: missing (expected 1)");
  cfg.version = get<int>(root, "version", "config", 0);
  if (cfg.version != 1) throw ConfigError("version: unsupported schema version " + std::to_string(cfg.version));
  if (!root["job"]) throw ConfigError("job: missing");
  cfg.job = parse_job_kind(get<std::string>(root, "job", "config", ""));
  const std::string sec = section_key(cfg.job);
  const bool needs_model = cfg.job != JobKind::kScan;
  std::vector<const char*> allowed{"version", "job", "name", "description", "optional", "seed", "output_dir"};
  if (needs_model) allowed.push_back("model");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key == sec) continue;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
      throw ConfigError("config: unknown or misplaced key '" + key + "' for job " + to_string(cfg.job));
    }
  }
  cfg.name = get<std::string>(root, "name", "config", "");
  if (cfg.name.find('/') != std::string::npos || cfg.name == "." || cfg.name == "..") {
    throw ConfigError("name: must be a plain directory name");
  }
  cfg.description = get<std::string>(root, "description", "config", "");
  cfg.optional = get<bool>(root, "optional", "config", false);
  cfg.seed = get<std::uint64_t>(root, "seed", "config", 42);
  if (root["output_dir"]) cfg.output_dir = get<std::string>(root, "output_dir", "config", "");
  if (needs_model) cfg.model = parse_model(root["model"]);

  const YAML::Node s = root[sec];
  const std::string w = sec;
  const YAML::Node empty(YAML::NodeType::Map);
  const YAML::Node& n = s ? s : empty;
  switch (cfg.job) {
    case JobKind::kSpectrum: {
      check_keys(n, {"mode", "vectors", "rel_zero", "rel_re", "shifts", "nev", "krylov_dim", "max_restarts", "tol",
                     "split_blocks"},
                 w);
      auto& p = cfg.spectrum;
      p.mode = get<std::string>(n, "mode", w, p.mode);
      if (p.mode != "full" && p.mode != "targeted") throw ConfigError("spectrum.mode: expected full or targeted");
      p.vectors = parse_vectors(get<std::string>(n, "vectors", w, "auto"));
      p.rel_zero = positive(get<double>(n, "rel_zero", w, p.rel_zero), "spectrum.rel_zero");
      p.rel_re = positive(get<double>(n, "rel_re", w, p.rel_re), "spectrum.rel_re");
      for (const auto& z : get<std::vector<std::vector<double>>>(n, "shifts", w, {})) {
        if (z.size() != 2) throw ConfigError("spectrum.shifts: each shift is [re, im]");
        p.shifts.emplace_back(z[0], z[1]);
      }
      p.nev = get<int>(n, "nev", w, p.nev);
      p.krylov_dim = get<int>(n, "krylov_dim", w, p.krylov_dim);
      p.max_restarts = get<int>(n, "max_restarts", w, p.max_restarts);
      p.tol = positive(get<double>(n, "tol", w, p.tol), "spectrum.tol");
      p.split_blocks = get<bool>(n, "split_blocks", w, p.split_blocks);
      if (p.mode == "targeted" && p.shifts.empty()) throw ConfigError("spectrum.shifts: required in targeted mode");
      if (p.nev < 1 || p.krylov_dim < p.nev + 2) throw ConfigError("spectrum: need nev >= 1 and krylov_dim >= nev + 2");
      break;
    }
    case JobKind::kEvolve: {
      check_keys(n, {"t_final", "dt", "rel_tol", "initial", "observable", "stationary_tol"}, w);
      auto& p = cfg.evolve;
      p.t_final = positive(get<double>(n, "t_final", w, p.t_final), "evolve.t_final");
      p.dt = positive(get<double>(n, "dt", w, p.dt), "evolve.dt");
      p.rel_tol = positive(get<double>(n, "rel_tol", w, p.rel_tol), "evolve.rel_tol");
      p.initial = parse_state(n["initial"], "evolve.initial", p.initial);
      if (const YAML::Node o = n["observable"]) {
        check_keys(o, {"op", "site"}, "evolve.observable");
        try {
          p.observable = parse_local_op(get<std::string>(o, "op", "evolve.observable", "sx"));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(std::string("evolve.observable.op: ") + e.what());
        }
        p.observable_site = get<int>(o, "site", "evolve.observable", p.observable_site);
      }
      if (n["stationary_tol"]) {
        p.stationary_tol = positive(get<double>(n, "stationary_tol", w, 0.0), "evolve.stationary_tol");
      }
      break;
    }
    case JobKind::kTheorem1: {
      check_keys(n, {"tol", "theorem2", "invariance", "trials"}, w);
      auto& p = cfg.theorem1;
      p.tol = positive(get<double>(n, "tol", w, p.tol), "theorem1.tol");
      p.theorem2 = get<bool>(n, "theorem2", w, p.theorem2);
      const auto inv = get<std::string>(n, "invariance", w, "jumps-and-effective");
      if (inv == "jumps-only") {
        p.invariance = InvarianceSet::kJumpsOnly;
      } else if (inv == "jumps-and-effective") {
        p.invariance = InvarianceSet::kJumpsAndEffective;
      } else {
        throw ConfigError("theorem1.invariance: expected jumps-only or jumps-and-effective");
      }
      p.trials = get<int>(n, "trials", w, p.trials);
      if (p.trials < 0) throw ConfigError("theorem1.trials: must be non-negative");
      break;
    }
    case JobKind::kTheorem3: {
      check_keys(n, {"operator", "state", "tol"}, w);
      auto& p = cfg.theorem3;
      p.op = parse_operator(n["operator"], "theorem3.operator", base_dir);
      p.state = parse_state(n["state"], "theorem3.state", p.state);
      p.tol = positive(get<double>(n, "tol", w, p.tol), "theorem3.tol");
      break;
    }
    case JobKind::kCorollary1: {
      check_keys(n, {"operator", "state", "max_power", "premise_tol", "mode_tol"}, w);
      auto& p = cfg.corollary1;
      p.op = parse_operator(n["operator"], "corollary1.operator", base_dir);
      p.state = parse_state(n["state"], "corollary1.state", p.state);
      p.max_power = get<int>(n, "max_power", w, p.max_power);
      if (p.max_power < 0) throw ConfigError("corollary1.max_power: must be non-negative");
      p.premise_tol = positive(get<double>(n, "premise_tol", w, p.premise_tol), "corollary1.premise_tol");
      p.mode_tol = positive(get<double>(n, "mode_tol", w, p.mode_tol), "corollary1.mode_tol");
      break;
    }
    case JobKind::kMultiblock: {
      check_keys(n, {"operator", "state", "max_power", "tol"}, w);
      auto& p = cfg.multiblock;
      p.op = parse_operator(n["operator"], "multiblock.operator", base_dir);
      p.state = parse_state(n["state"], "multiblock.state", p.state);
      p.max_power = get<int>(n, "max_power", w, p.max_power);
      if (p.max_power < 0) throw ConfigError("multiblock.max_power: must be non-negative");
      p.tol = positive(get<double>(n, "tol", w, p.tol), "multiblock.tol");
      break;
    }
    case JobKind::kStationary: {
      check_keys(n, {"tol", "betas", "gc_tol"}, w);
      auto& p = cfg.stationary;
      p.tol = positive(get<double>(n, "tol", w, p.tol), "stationary.tol");
      for (const auto& b : get<std::vector<std::vector<double>>>(n, "betas", w, {})) {
        if (b.size() != 3) throw ConfigError("stationary.betas: each entry is [beta0, beta1, beta2]");
        p.betas.push_back({b[0], b[1], b[2]});
      }
      p.gc_tol = positive(get<double>(n, "gc_tol", w, p.gc_tol), "stationary.gc_tol");
      break;
    }
    case JobKind::kScan: {
      check_keys(n, {"ns", "delta", "gamma"}, w);
      auto& p = cfg.scan;
      p.ns = get<std::vector<int>>(n, "ns", w, p.ns);
      p.delta = get<double>(n, "delta", w, p.delta);
      p.gamma = get<double>(n, "gamma", w, p.gamma);
      break;
    }
  }
  return cfg;
}

JobConfig load_config(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("config file '" + path.string() + "' does not exist");
  return parse_config(io::read_file(path), path.parent_path());
}

std::string serialize_config(const JobConfig& cfg) {
  std::ostringstream os;
  os << "version: " << cfg.version << "\n";
  os << "job: " << to_string(cfg.job) << "\n";
  if (!cfg.name.empty()) os << "name: " << quoted(cfg.name) << "\n";
  if (!cfg.description.empty()) os << "description: " << quoted(cfg.description) << "\n";
  if (cfg.optional) os << "optional: true\n";
  os << "seed: " << cfg.seed << "\n";
  if (cfg.output_dir) os << "output_dir: " << quoted(*cfg.output_dir) << "\n";
  if (cfg.job != JobKind::kScan) {
    os << "model:\n";
    if (cfg.model.kind == ModelKind::kXxz) {
      const auto& x = cfg.model.xxz;
      os << "  kind: xxz\n  n: " << x.n << "\n  delta: " << num(x.delta) << "\n";
      os << "  loss_sites: " << list(x.loss_sites) << "\n  gammas: " << list(x.gammas) << "\n";
      if (x.nnn_zz != 0.0) os << "  nnn_zz: " << num(x.nnn_zz) << "\n";
    } else {
      const auto& h = cfg.model.hubbard;
      os << "  kind: hubbard\n  l_sites: " << h.l_sites << "\n  tau: " << num(h.tau) << "\n  u: " << num(h.u)
         << "\n  mu: " << num(h.mu) << "\n";
      if (!h.epsilon.empty()) os << "  epsilon: " << list(h.epsilon) << "\n";
      if (h.dephasing_kind != DephasingKind::kNone || !h.dephasing_gammas.empty()) {
        os << "  dephasing:\n    kind: " << dephasing_name(h.dephasing_kind) << "\n    gammas: "
           << list(h.dephasing_gammas) << "\n";
      }
      if (h.doublon_drive) {
        os << "  doublon_drive: " << list(std::vector<double>{h.doublon_drive->first, h.doublon_drive->second})
           << "\n";
      }
    }
  }
  os << section_key(cfg.job) << ":\n";
  switch (cfg.job) {
    case JobKind::kSpectrum: {
      const auto& p = cfg.spectrum;
      os << "  mode: " << p.mode << "\n  vectors: " << vectors_name(p.vectors) << "\n";
      os << "  rel_zero: " << num(p.rel_zero) << "\n  rel_re: " << num(p.rel_re) << "\n";
      if (p.mode == "targeted") {
        os << "  shifts: [";
        for (std::size_t i = 0; i < p.shifts.size(); ++i) {
          os << (i ? ", " : "") << "[" << num(p.shifts[i].real()) << ", " << num(p.shifts[i].imag()) << "]";
        }
        os << "]\n  nev: " << p.nev << "\n  krylov_dim: " << p.krylov_dim << "\n  max_restarts: " << p.max_restarts
           << "\n  tol: " << num(p.tol) << "\n  split_blocks: " << (p.split_blocks ? "true" : "false") << "\n";
      }
      break;
    }
    case JobKind::kEvolve: {
      const auto& p = cfg.evolve;
      os << "  t_final: " << num(p.t_final) << "\n  dt: " << num(p.dt) << "\n  rel_tol: " << num(p.rel_tol) << "\n";
      emit_state(os, "initial", p.initial, "  ");
      os << "  observable:\n    op: " << local_op_name(p.observable) << "\n    site: " << p.observable_site << "\n";
      if (p.stationary_tol) os << "  stationary_tol: " << num(*p.stationary_tol) << "\n";
      break;
    }
    case JobKind::kTheorem1: {
      const auto& p = cfg.theorem1;
      os << "  tol: " << num(p.tol) << "\n  theorem2: " << (p.theorem2 ? "true" : "false") << "\n  invariance: "
         << (p.invariance == InvarianceSet::kJumpsOnly ? "jumps-only" : "jumps-and-effective")
         << "\n  trials: " << p.trials << "\n";
      break;
    }
    case JobKind::kTheorem3: {
      const auto& p = cfg.theorem3;
      emit_operator(os, p.op);
      emit_state(os, "state", p.state, "  ");
      os << "  tol: " << num(p.tol) << "\n";
      break;
    }
    case JobKind::kCorollary1: {
      const auto& p = cfg.corollary1;
      emit_operator(os, p.op);
      emit_state(os, "state", p.state, "  ");
      os << "  max_power: " << p.max_power << "\n  premise_tol: " << num(p.premise_tol)
         << "\n  mode_tol: " << num(p.mode_tol) << "\n";
      break;
    }
    case JobKind::kMultiblock: {
      const auto& p = cfg.multiblock;
      emit_operator(os, p.op);
      emit_state(os, "state", p.state, "  ");
      os << "  max_power: " << p.max_power << "\n  tol: " << num(p.tol) << "\n";
      break;
    }
    case JobKind::kStationary: {
      const auto& p = cfg.stationary;
      os << "  tol: " << num(p.tol) << "\n";
      if (!p.betas.empty()) {
        os << "  betas:\n";
        for (const auto& b : p.betas) os << "    - " << list(std::vector<double>(b.begin(), b.end())) << "\n";
      }
      os << "  gc_tol: " << num(p.gc_tol) << "\n";
      break;
    }
    case JobKind::kScan: {
      const auto& p = cfg.scan;
      os << "  ns: " << list(p.ns) << "\n  delta: " << num(p.delta) << "\n  gamma: " << num(p.gamma) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace opencoh
