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

#ifndef STARMIMO_PRECODER_HPP
#define STARMIMO_PRECODER_HPP

#include "starmimo/channel.hpp"
#include "starmimo/types.hpp"
#include "starmimo/wmmse.hpp"

#include <vector>

namespace starmimo {

/// min sum_k tau_k (Tr(W_k^H A_k W_k) - 2 Re Tr(B_k W_k))
/// s.t. sum_k tau_k Tr(W_k W_k^H) <= power_budget.
/// ES/MS unicast uses one shared A for both users (tau = 1); TS uses
/// per-user A_l with time weights; broadcast uses a single entry.
struct QuadraticPrecoderProblem {
  std::vector<CMat> a;           // Hermitian PSD, N x N, one per user
  std::vector<CMat> b;           // Nd_k x N
  std::vector<double> tau;       // 1 outside TS
  double power_budget = 1.0;
};

struct PrecoderSolution {
  std::vector<CMat> w;
  double lambda = 0.0;           // dual variable of the power constraint
  double power = 0.0;            // tau-weighted transmit power at solution
};

/// Builds the subproblem from the current decoders/weights. For broadcast
/// (non-TS) traffic the result has a single entry with summed A and B.
QuadraticPrecoderProblem assemble_precoder(const SystemSpec& spec,
                                           const ChannelSet& channels,
                                           const StarConfig& star,
                                           const WmmseState& state);

/// Lagrange dual solve with bisection on the power multiplier.
PrecoderSolution solve_dual(const QuadraticPrecoderProblem& problem);

/// tau-weighted power of the dual iterate at a given multiplier; exposed
/// for the KKT test oracles.
double dual_power(const QuadraticPrecoderProblem& problem, double lambda);

}  // namespace starmimo

#endif
