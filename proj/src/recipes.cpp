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

#include <stdexcept>

#include "opencoh/jobs.hpp"

namespace opencoh {

namespace {

JobConfig xxz_job(JobKind kind, const std::string& name, int n, double delta, std::vector<int> losses) {
  JobConfig c;
  c.job = kind;
  c.name = name;
  c.seed = 42;
  c.model.kind = ModelKind::kXxz;
  c.model.xxz.n = n;
  c.model.xxz.delta = delta;
  c.model.xxz.gammas.assign(losses.size(), 1.0);
  c.model.xxz.loss_sites = std::move(losses);
  return c;
}

std::vector<Recipe> make_recipes() {
  std::vector<Recipe> out;

  JobConfig a = xxz_job(JobKind::kSpectrum, "fig1a", 4, 2.0, {1});
  a.description = "Liouvillian spectrum, XXZ ring n=4, delta=2, loss on site 1";
  out.push_back({"fig1a", a.description, a});

  JobConfig b = xxz_job(JobKind::kSpectrum, "fig1b", 6, 2.0, {1});
  b.description = "Liouvillian spectrum, XXZ ring n=6, delta=2, loss on site 1 (dense 4096 x 4096)";
  out.push_back({"fig1b", b.description, b});

  JobConfig c = xxz_job(JobKind::kSpectrum, "fig1c", 8, 2.0, {1});
  c.description = "Eigenvalues near the imaginary axis, XXZ ring n=8 (shift-invert, several GB of memory)";
  c.optional = true;
  c.spectrum.mode = "targeted";
  for (int w = 0; w <= 16; w += 2) c.spectrum.shifts.emplace_back(0.0, static_cast<double>(w));
  out.push_back({"fig1c", c.description, c});

  JobConfig d = xxz_job(JobKind::kEvolve, "fig2a", 4, 1.1, {1, 2});
  d.description = "Dynamics of <sx_2>, XXZ ring n=4, delta=1.1, losses on sites 1 and 2";
  d.evolve.stationary_tol = 1e-4;
  out.push_back({"fig2a", d.description, d});

  JobConfig e = xxz_job(JobKind::kEvolve, "fig2b", 4, 1.1, {1});
  e.description = "Dynamics of <sx_2>, XXZ ring n=4, delta=1.1, loss on site 1";
  out.push_back({"fig2b", e.description, e});
  return out;
}

}  // namespace

std::vector<Recipe> figure_recipes() {
  static const std::vector<Recipe> recipes = make_recipes();
  return recipes;
}

const Recipe& find_recipe(const std::string& name) {
  static const std::vector<Recipe> recipes = make_recipes();
  for (const auto& r : recipes) {
    if (r.name == name) return r;
  }
  throw ConfigError("unknown recipe '" + name + "'");
}

}  // namespace opencoh
