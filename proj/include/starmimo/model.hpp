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

#ifndef STARMIMO_MODEL_HPP
#define STARMIMO_MODEL_HPP

#include "starmimo/channel.hpp"
#include "starmimo/types.hpp"

namespace starmimo {

/// H_l * Diag(amp .* exp(j*phase)) * F for the requested side.
CMat effective_channel(const CMat& h_user, const StarConfig& star, Side side,
                       const CMat& f);

/// log2 det(I + H W W^H H^H C^-1) with C = H Wint Wint^H H^H + noise*I.
/// Pass an empty interferer matrix for interference-free links.
double rate_unicast(const CMat& h_bar_signal, const CMat& h_bar_interference,
                    const CMat& w_signal, const CMat& w_interference,
                    double noise_power);

/// tau * log2 det(I + H W W^H H^H / noise).
double rate_ts(const CMat& h_bar, const CMat& w, double noise_power,
               double tau);

/// Weighted sum rate for the protocol/traffic combination carried by the
/// inputs. Throws DomainError listing the first violated invariant if the
/// configuration fails validation.
double wsr(const SystemSpec& spec, const ChannelSet& channels,
           const PrecoderSet& precoders, const StarConfig& star);

/// Per-user rates in the same convention as wsr (TS rates include tau).
std::array<double, 2> per_user_rates(const SystemSpec& spec,
                                     const ChannelSet& channels,
                                     const PrecoderSet& precoders,
                                     const StarConfig& star);

/// Protocol invariants of a surface configuration; empty means feasible.
std::vector<Violation> validate(const StarConfig& star,
                                const SystemSpec& spec);

/// Power-budget invariant of a precoder set (tau-weighted for TS).
std::vector<Violation> validate(const PrecoderSet& precoders,
                                const StarConfig& star,
                                const SystemSpec& spec);

/// log2 det of a Hermitian positive definite matrix via Cholesky.
double log2_det_hermitian_pd(const CMat& a);

/// Wrap an angle into [0, 2*pi).
double wrap_phase(double radians);

}  // namespace starmimo

#endif
