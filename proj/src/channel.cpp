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

#include "starmimo/channel.hpp"

#include <algorithm>
#include <cmath>

namespace starmimo {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t base_seed, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(base_seed) ^ splitmix64(trial + 1)));
}

double Rng::uniform() {
  // 53 random bits -> [0, 1)
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on (0,1] x [0,1)
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * kPi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

cxd Rng::complex_gaussian() {
  double re = gaussian();
  double im = gaussian();
  return cxd(re, im) * (1.0 / std::sqrt(2.0));
}

double path_loss(double distance_m, const FadingParams& params) {
  if (!(distance_m > 0.0)) {
    throw DomainError("path_loss: distance must be positive");
  }
  if (!(params.pathloss_exponent > 0.0) || !(params.pathloss_ref_gain > 0.0)) {
    throw DomainError("path_loss: invalid fading parameters");
  }
  return params.pathloss_ref_gain *
         std::pow(distance_m, -params.pathloss_exponent);
}

CVec steering_vector(Eigen::Index n_elements, double angle_rad) {
  if (n_elements < 1) {
    throw DomainError("steering_vector: need at least one element");
  }
  CVec a(n_elements);
  double step = kPi * std::sin(angle_rad);
  for (Eigen::Index k = 0; k < n_elements; ++k) {
    a[k] = std::polar(1.0, step * static_cast<double>(k));
  }
  return a;
}

CMat sample_rician(Eigen::Index rows, Eigen::Index cols,
                   const CVec& lhs_steering, const CVec& rhs_steering,
                   double k, Rng& rng) {
  if (lhs_steering.size() != rows || rhs_steering.size() != cols) {
    throw DomainError("sample_rician: steering vector length mismatch");
  }
  if (k < 0.0) {
    throw DomainError("sample_rician: Rician factor must be nonnegative");
  }
  double los_scale = std::sqrt(k / (k + 1.0));
  double nlos_scale = std::sqrt(1.0 / (k + 1.0));
  CMat m = los_scale * (lhs_steering * rhs_steering.adjoint());
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      m(r, c) += nlos_scale * rng.complex_gaussian();
    }
  }
  return m;
}

namespace {

// Azimuth of the horizontal projection of (to - from), measured from
// broadside. Arrays are ULAs along the x axis, so the inter-element
// phase progression depends on the x component of the unit direction.
double link_azimuth(const Vec3& from, const Vec3& to) {
  double dx = to.x() - from.x();
  double dy = to.y() - from.y();
  double h = std::hypot(dx, dy);
  if (h <= 0.0) return 0.0;  // vertical link: broadside
  double s = std::clamp(dx / h, -1.0, 1.0);
  return std::asin(s);
}

}  // namespace

ChannelSet build_scenario(const ScenarioGeometry& geometry,
                          const FadingParams& params,
                          const AntennaCounts& counts, Rng& rng) {
  if (counts.n_tx < 1 || counts.n_user_t < 1 || counts.n_user_r < 1 ||
      counts.m_elements < 1) {
    throw DomainError("build_scenario: antenna counts must be positive");
  }
  const Vec3& tx = geometry.tx_position;
  const Vec3& ris = geometry.ris_position;
  double d_f = (ris - tx).norm();
  double d_t = (geometry.user(Side::T) - ris).norm();
  double d_r = (geometry.user(Side::R) - ris).norm();
  if (!(d_f > 0.0) || !(d_t > 0.0) || !(d_r > 0.0)) {
    throw DomainError("build_scenario: node distances must be positive");
  }
  // Half-space check: the incident (reflection) side is the Tx side of
  // the surface plane; the transmission side is the opposite one.
  Vec3 incident = tx - ris;
  double side_t = incident.dot(geometry.user(Side::T) - ris);
  double side_r = incident.dot(geometry.user(Side::R) - ris);
  if (!(side_t < 0.0) || !(side_r > 0.0)) {
    throw DomainError(
        "build_scenario: T user must be behind the surface and R user in "
        "front of it");
  }

  ChannelSet set;
  // Tx -> RIS: arrival steering at the RIS, departure steering at the Tx.
  {
    CVec a = steering_vector(counts.m_elements, link_azimuth(ris, tx));
    CVec b = steering_vector(counts.n_tx, link_azimuth(tx, ris));
    set.f = std::sqrt(path_loss(d_f, params)) *
            sample_rician(counts.m_elements, counts.n_tx, a, b,
                          params.rician_k, rng);
  }
  // RIS -> user links.
  {
    CVec a = steering_vector(counts.n_user_t,
                             link_azimuth(geometry.user(Side::T), ris));
    CVec b = steering_vector(counts.m_elements,
                             link_azimuth(ris, geometry.user(Side::T)));
    set.h_t = std::sqrt(path_loss(d_t, params)) *
              sample_rician(counts.n_user_t, counts.m_elements, a, b,
                            params.rician_k, rng);
  }
  {
    CVec a = steering_vector(counts.n_user_r,
                             link_azimuth(geometry.user(Side::R), ris));
    CVec b = steering_vector(counts.m_elements,
                             link_azimuth(ris, geometry.user(Side::R)));
    set.h_r = std::sqrt(path_loss(d_r, params)) *
              sample_rician(counts.n_user_r, counts.m_elements, a, b,
                            params.rician_k, rng);
  }
  return set;
}

ScenarioGeometry sample_user_positions(const ScenarioGeometry& base,
                                       Rng& rng) {
  ScenarioGeometry g = base;
  const Vec3& ris = g.ris_position;
  // Unit vector from the surface toward the Tx (reflection side),
  // projected onto the horizontal plane.
  Vec3 toward_tx = g.tx_position - ris;
  toward_tx.z() = 0.0;
  double n = toward_tx.norm();
  if (n <= 0.0) {
    throw DomainError("sample_user_positions: Tx above the RIS");
  }
  toward_tx /= n;
  Vec3 lateral(-toward_tx.y(), toward_tx.x(), 0.0);

  auto place = [&](double azimuth, double sign) {
    // azimuth in (-pi/2, pi/2) within the half-circle; sign selects the
    // half-space (+1 reflection side, -1 transmission side).
    Vec3 dir = sign * std::cos(azimuth) * toward_tx + std::sin(azimuth) * lateral;
    Vec3 p = ris + g.half_circle_radius * dir;
    p.z() = g.user_height;
    return p;
  };

  double az_t = (rng.uniform() - 0.5) * kPi;
  double az_r = (rng.uniform() - 0.5) * kPi;
  g.user_positions[0] = place(az_t, -1.0);  // T user: transmission side
  g.user_positions[1] = place(az_r, +1.0);  // R user: reflection side
  return g;
}

}  // namespace starmimo
