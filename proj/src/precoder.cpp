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

#include "starmimo/precoder.hpp"

#include "starmimo/model.hpp"

#include <cmath>

namespace starmimo {

QuadraticPrecoderProblem assemble_precoder(const SystemSpec& spec,
                                           const ChannelSet& channels,
                                           const StarConfig& star,
                                           const WmmseState& state) {
  QuadraticPrecoderProblem p;
  p.power_budget = spec.power_budget;
  const std::array<Side, 2> sides{Side::T, Side::R};

  auto user_a = [&](Side side) -> CMat {
    CMat h_bar = effective_channel(channels.h(side), star, side, channels.f);
    const CMat& u = state.decoder(side);
    const CMat& v = state.weight(side);
    CMat uh = u.adjoint() * h_bar;  // Nd x N
    CMat a = spec.weight(side) * (uh.adjoint() * v * uh);
    return 0.5 * (a + a.adjoint().eval());
  };
  auto user_b = [&](Side side) -> CMat {
    CMat h_bar = effective_channel(channels.h(side), star, side, channels.f);
    return spec.weight(side) *
           (state.weight(side) * state.decoder(side).adjoint() * h_bar);
  };

  if (star.protocol == Protocol::TS) {
    for (Side side : sides) {
      p.a.push_back(user_a(side));
      p.b.push_back(user_b(side));
      p.tau.push_back(star.tau(side));
    }
  } else if (spec.traffic == Traffic::Broadcast) {
    CMat a = user_a(Side::T) + user_a(Side::R);
    CMat b = user_b(Side::T) + user_b(Side::R);
    p.a.push_back(0.5 * (a + a.adjoint().eval()));
    p.b.push_back(b);
    p.tau.push_back(1.0);
  } else {
    CMat shared = user_a(Side::T) + user_a(Side::R);
    shared = 0.5 * (shared + shared.adjoint().eval());
    for (Side side : sides) {
      p.a.push_back(shared);
      p.b.push_back(user_b(side));
      p.tau.push_back(1.0);
    }
  }
  return p;
}

namespace {

struct EigUser {
  RVec eigenvalues;
  CMat q;        // eigenvectors
  CMat b_tilde;  // Q^H B^H, N x Nd
  double tau = 1.0;
  bool active = true;
};

double power_of(const std::vector<EigUser>& users, double lambda) {
  double acc = 0.0;
  for (const auto& u : users) {
    if (!u.active) continue;
    double p = 0.0;
    for (Eigen::Index i = 0; i < u.eigenvalues.size(); ++i) {
      double denom = u.eigenvalues[i] + lambda;
      p += u.b_tilde.row(i).squaredNorm() / (denom * denom);
    }
    acc += u.tau * p;
  }
  return acc;
}

}  // namespace

double dual_power(const QuadraticPrecoderProblem& problem, double lambda) {
  std::vector<EigUser> users;
  for (std::size_t k = 0; k < problem.a.size(); ++k) {
    if (problem.tau[k] <= 0.0) continue;
    EigUser u;
    Eigen::SelfAdjointEigenSolver<CMat> eig(problem.a[k]);
    u.eigenvalues = eig.eigenvalues();
    u.q = eig.eigenvectors();
    u.b_tilde = u.q.adjoint() * problem.b[k].adjoint();
    u.tau = problem.tau[k];
    users.push_back(std::move(u));
  }
  return power_of(users, lambda);
}

PrecoderSolution solve_dual(const QuadraticPrecoderProblem& problem) {
  const std::size_t n_users = problem.a.size();
  if (problem.b.size() != n_users || problem.tau.size() != n_users) {
    throw DomainError("solve_dual: inconsistent problem arrays");
  }
  if (!(problem.power_budget > 0.0)) {
    throw DomainError("solve_dual: power budget must be positive");
  }

  std::vector<EigUser> users(n_users);
  double max_eig = 0.0;
  for (std::size_t k = 0; k < n_users; ++k) {
    EigUser& u = users[k];
    u.tau = problem.tau[k];
    if (u.tau <= 0.0) {
      u.active = false;  // zero time share carries no signal
      continue;
    }
    if (problem.a[k].rows() != problem.a[k].cols() ||
        problem.b[k].cols() != problem.a[k].rows()) {
      throw DomainError("solve_dual: A/B dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<CMat> eig(problem.a[k]);
    if (eig.info() != Eigen::Success) {
      throw NumericError("solve_dual: eigendecomposition failed");
    }
    u.eigenvalues = eig.eigenvalues().cwiseMax(0.0);
    u.q = eig.eigenvectors();
    u.b_tilde = u.q.adjoint() * problem.b[k].adjoint();
    max_eig = std::max(max_eig, u.eigenvalues.size() > 0
                                    ? u.eigenvalues.maxCoeff()
                                    : 0.0);
  }

  auto build = [&](double lambda, bool pinv) {
    PrecoderSolution sol;
    sol.lambda = lambda;
    sol.w.resize(n_users);
    double cut = std::max(max_eig, 1.0) * 1e-12;
    for (std::size_t k = 0; k < n_users; ++k) {
      const EigUser& u = users[k];
      if (!u.active) {
        sol.w[k] = CMat::Zero(problem.a[k].rows(), problem.b[k].rows());
        continue;
      }
      CMat scaled = u.b_tilde;
      for (Eigen::Index i = 0; i < u.eigenvalues.size(); ++i) {
        double denom = u.eigenvalues[i] + lambda;
        if (pinv && denom <= cut) {
          scaled.row(i).setZero();
        } else {
          scaled.row(i) /= denom;
        }
      }
      sol.w[k] = u.q * scaled;
      sol.power += u.tau * sol.w[k].squaredNorm();
    }
    return sol;
  };

  // lambda = 0: admissible only if B^H has no component in null(A); the
  // objective is otherwise unbounded below and the constraint is active.
  double cut = std::max(max_eig, 1.0) * 1e-12;
  bool null_component = false;
  double b_norm2 = 0.0;
  for (const auto& u : users) {
    if (!u.active) continue;
    b_norm2 += u.b_tilde.squaredNorm();
  }
  for (const auto& u : users) {
    if (!u.active) continue;
    for (Eigen::Index i = 0; i < u.eigenvalues.size(); ++i) {
      if (u.eigenvalues[i] <= cut &&
          u.b_tilde.row(i).squaredNorm() > 1e-20 * std::max(b_norm2, 1e-300)) {
        null_component = true;
      }
    }
  }
  if (!null_component) {
    PrecoderSolution sol = build(0.0, true);
    if (sol.power <= problem.power_budget * (1.0 + kFeasTol)) {
      return sol;
    }
  }

  // Bracket: double from 1e-12 until the power drops below budget.
  double hi = 1e-12;
  int doublings = 0;
  while (power_of(users, hi) > problem.power_budget && doublings < 60) {
    hi *= 2.0;
    ++doublings;
  }
  if (doublings >= 60) {
    throw NumericError("solve_dual: bisection bracket not found");
  }
  double lo = hi == 1e-12 ? 0.0 : hi / 2.0;
  double lambda = hi;
  for (int it = 0; it < 200; ++it) {
    lambda = 0.5 * (lo + hi);
    double p = power_of(users, lambda);
    double gap = (p - problem.power_budget) / problem.power_budget;
    if (std::abs(gap) <= 1e-8) break;
    if (p > problem.power_budget) {
      lo = lambda;
    } else {
      hi = lambda;
    }
  }
  // Final iterate from the upper end so the budget holds.
  double p_mid = power_of(users, lambda);
  if (p_mid > problem.power_budget * (1.0 + 1e-10)) lambda = hi;
  return build(lambda, false);
}

}  // namespace starmimo
