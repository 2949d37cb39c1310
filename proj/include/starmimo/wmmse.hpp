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

#ifndef STARMIMO_WMMSE_HPP
#define STARMIMO_WMMSE_HPP

#include "starmimo/types.hpp"

#include <array>

namespace starmimo {

/// Linear decoders U_l, weight matrices V_l and the surrogate constants
/// d_l for the two users (index 0 = T side, 1 = R side).
struct WmmseState {
  std::array<CMat, 2> u;
  std::array<CMat, 2> v;
  std::array<double, 2> d{0.0, 0.0};

  const CMat& decoder(Side s) const { return u[s == Side::T ? 0 : 1]; }
  const CMat& weight(Side s) const { return v[s == Side::T ? 0 : 1]; }
};

/// Error covariance of the linear estimate U^H y against the sent symbols:
/// (U^H H W - I)(.)^H + U^H H Wint Wint^H H^H U + noise * U^H U.
/// Pass an empty interferer for interference-free links.
CMat mse_matrix(const CMat& h_bar, const CMat& w, const CMat& w_interference,
                const CMat& u, double noise_power);

/// MMSE receiver (H W W^H H^H + C)^-1 H W for a given interference-plus-
/// noise covariance C.
CMat optimal_decoder(const CMat& h_bar, const CMat& w, const CMat& c);

/// Interference-plus-noise covariance H Wint Wint^H H^H + noise * I.
CMat noise_covariance(const CMat& h_bar, const CMat& w_interference,
                      double noise_power);

/// Hermitian-symmetrized inverse of a positive definite MSE matrix.
/// Throws NumericError when the condition estimate exceeds 1e12.
CMat optimal_weight(const CMat& e_star);

/// sum_l weights[l] * (log2 det V_l - Tr(V_l E_l) + d_l).
double surrogate(const WmmseState& state, const std::array<CMat, 2>& e,
                 const std::array<double, 2>& weights);

}  // namespace starmimo

#endif
