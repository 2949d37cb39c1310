// SPDX-License-Identifier: Apache-2.0
//
// starmimo - STAR-RIS assisted MIMO weighted sum rate optimization
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef STARMIMO_TEST_HELPERS_HPP
#define STARMIMO_TEST_HELPERS_HPP

#include "starmimo/channel.hpp"
#include "starmimo/model.hpp"
#include "starmimo/types.hpp"
#include "starmimo/wmmse.hpp"

#include <cstdint>
#include <cstring>

namespace starmimo::test {

inline CMat random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMat m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = rng.complex_gaussian();
  return m;
}

inline CMat random_hpd(Eigen::Index n, Rng& rng, double ridge = 0.1) {
  CMat g = random_complex(n, n, rng);
  CMat a = g * g.adjoint() + ridge * CMat::Identity(n, n);
  return 0.5 * (a + a.adjoint().eval());
}

inline CMat random_psd(Eigen::Index n, Rng& rng) {
  CMat g = random_complex(n, n, rng);
  CMat a = g * g.adjoint();
  return 0.5 * (a + a.adjoint().eval());
}

inline CMat random_unitary(Eigen::Index n, Rng& rng) {
  Eigen::HouseholderQR<CMat> qr(random_complex(n, n, rng));
  CMat q = qr.householderQ();
  return q;
}

inline std::uint64_t fnv1a(const void* data, std::size_t bytes,
                           std::uint64_t h = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t hash_matrix(const CMat& m, std::uint64_t h = 1469598103934665603ull) {
  return fnv1a(m.data(), sizeof(cxd) * static_cast<std::size_t>(m.size()), h);
}

inline std::uint64_t hash_channels(const ChannelSet& c) {
  return hash_matrix(c.h_r, hash_matrix(c.h_t, hash_matrix(c.f)));
}

/// Default desk-scale system used across the unit tests.
inline SystemSpec desk_spec(int m = 8) {
  SystemSpec s;
  s.m_elements = m;
  return s;
}

inline ChannelSet desk_channels(const SystemSpec& spec, std::uint64_t seed) {
  Rng rng = Rng::for_trial(seed, 0);
  ScenarioGeometry base;
  ScenarioGeometry g = sample_user_positions(base, rng);
  FadingParams fading;
  fading.noise_power = spec.noise_power;
  AntennaCounts counts{spec.n_tx, spec.n_user_t, spec.n_user_r,
                       spec.m_elements};
  return build_scenario(g, fading, counts, rng);
}

/// Feasible random precoders on the power sphere scaled to use the budget.
inline PrecoderSet random_precoders(const SystemSpec& spec, Rng& rng,
                                    double budget_fraction = 1.0) {
  PrecoderSet w;
  w.w_t = random_complex(spec.n_tx, spec.n_streams_t, rng);
  w.w_r = random_complex(spec.n_tx, spec.n_streams_r, rng);
  double total = w.w_t.squaredNorm() + w.w_r.squaredNorm();
  double scale = std::sqrt(budget_fraction * spec.power_budget / total);
  w.w_t *= scale;
  w.w_r *= scale;
  return w;
}

inline StarConfig random_es_config(Eigen::Index m, Rng& rng) {
  StarConfig star;
  star.protocol = Protocol::ES;
  star.amp_t.resize(m);
  star.amp_r.resize(m);
  star.phase_t.resize(m);
  star.phase_r.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    double alpha = rng.uniform();
    star.amp_t[i] = std::sqrt(alpha);
    star.amp_r[i] = std::sqrt(1.0 - alpha);
    star.phase_t[i] = rng.uniform() * 2.0 * 3.14159265358979323846;
    star.phase_r[i] = rng.uniform() * 2.0 * 3.14159265358979323846;
  }
  return star;
}

}  // namespace starmimo::test

#endif
