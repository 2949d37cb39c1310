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

#ifndef STARMIMO_CHANNEL_HPP
#define STARMIMO_CHANNEL_HPP

#include "starmimo/types.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace starmimo {

/// Deterministic random stream. Wraps the (fully specified) mt19937_64
/// engine with a hand-rolled Box-Muller transform so that Gaussian draws
/// are bit-identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one Monte-Carlo trial.
  static Rng for_trial(std::uint64_t base_seed, std::uint64_t trial);

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal N(0, 1).
  double gaussian();

  /// Circularly-symmetric complex Gaussian CN(0, 1): unit total variance.
  cxd complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

using Vec3 = Eigen::Vector3d;

struct ScenarioGeometry {
  Vec3 tx_position{0.0, 0.0, 10.0};
  Vec3 ris_position{0.0, 30.0, 10.0};
  std::array<Vec3, 2> user_positions{};  // [0] = T user, [1] = R user
  double half_circle_radius = 5.0;       // meters
  double user_height = 2.0;              // meters

  const Vec3& user(Side side) const {
    return user_positions[side == Side::T ? 0 : 1];
  }
};

struct FadingParams {
  double rician_k = 3.1622776601683795;  // linear (5 dB default)
  double pathloss_exponent = 2.2;        // beta, RIS-related links
  double pathloss_ref_gain = 1e-3;       // PL_0 at d_0 = 1 m
  double noise_power = 1e-11;            // watts (config carrier)
};

/// The triple of propagation matrices.
struct ChannelSet {
  CMat f;    // Tx -> RIS, M x N
  CMat h_t;  // RIS -> T user, N_t x M
  CMat h_r;  // RIS -> R user, N_r x M

  const CMat& h(Side side) const { return side == Side::T ? h_t : h_r; }
};

struct AntennaCounts {
  int n_tx = 4;
  int n_user_t = 4;
  int n_user_r = 4;
  int m_elements = 8;
};

/// Distance-power law PL_0 * (d / d_0)^(-beta) with d_0 = 1 m.
double path_loss(double distance_m, const FadingParams& params);

/// Uniform linear array response with half-wavelength spacing:
/// entry k is exp(j*pi*k*sin(angle)), k = 0..n-1.
CVec steering_vector(Eigen::Index n_elements, double angle_rad);

/// Rician sample sqrt(k/(k+1)) * a*b^H + sqrt(1/(k+1)) * G with G iid
/// CN(0,1). Draw order is column-major and fixed.
CMat sample_rician(Eigen::Index rows, Eigen::Index cols,
                   const CVec& lhs_steering, const CVec& rhs_steering,
                   double k, Rng& rng);

/// Draws all three channels of the scenario. Angles are azimuths of the
/// horizontal link direction relative to the y axis (arrays lie along x),
/// and each matrix is scaled by sqrt(path_loss) of its link distance.
ChannelSet build_scenario(const ScenarioGeometry& geometry,
                          const FadingParams& params,
                          const AntennaCounts& counts, Rng& rng);

/// Places the two users on their half-circles, azimuth uniform per trial.
/// T user behind the surface (away from the Tx side), R user in front.
ScenarioGeometry sample_user_positions(const ScenarioGeometry& base,
                                       Rng& rng);

}  // namespace starmimo

#endif
