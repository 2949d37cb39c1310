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

#include "starmimo/wmmse.hpp"

#include "starmimo/model.hpp"

#include <cmath>

namespace starmimo {

CMat mse_matrix(const CMat& h_bar, const CMat& w, const CMat& w_interference,
                const CMat& u, double noise_power) {
  if (h_bar.cols() != w.rows() || u.rows() != h_bar.rows()) {
    throw DomainError("mse_matrix: dimension mismatch");
  }
  Eigen::Index nd = w.cols();
  if (u.cols() != nd) {
    throw DomainError("mse_matrix: decoder column count mismatch");
  }
  CMat uhw = u.adjoint() * (h_bar * w) - CMat::Identity(nd, nd);
  CMat e = uhw * uhw.adjoint();
  if (w_interference.size() > 0) {
    CMat uhwi = u.adjoint() * (h_bar * w_interference);
    e += uhwi * uhwi.adjoint();
  }
  e += noise_power * (u.adjoint() * u);
  return 0.5 * (e + e.adjoint().eval());
}

CMat noise_covariance(const CMat& h_bar, const CMat& w_interference,
                      double noise_power) {
  Eigen::Index n = h_bar.rows();
  CMat c = noise_power * CMat::Identity(n, n);
  if (w_interference.size() > 0) {
    CMat hw = h_bar * w_interference;
    c += hw * hw.adjoint();
  }
  return 0.5 * (c + c.adjoint().eval());
}

CMat optimal_decoder(const CMat& h_bar, const CMat& w, const CMat& c) {
  if (h_bar.cols() != w.rows() || c.rows() != h_bar.rows() ||
      c.rows() != c.cols()) {
    throw DomainError("optimal_decoder: dimension mismatch");
  }
  CMat hw = h_bar * w;
  CMat total = c + hw * hw.adjoint();
  Eigen::LLT<CMat> llt(0.5 * (total + total.adjoint().eval()));
  if (llt.info() != Eigen::Success) {
    throw NumericError("optimal_decoder: covariance not positive definite");
  }
  return llt.solve(hw);
}

CMat optimal_weight(const CMat& e_star) {
  if (e_star.rows() != e_star.cols()) {
    throw DomainError("optimal_weight: matrix must be square");
  }
  CMat sym = 0.5 * (e_star + e_star.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<CMat> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw NumericError("optimal_weight: eigendecomposition failed");
  }
  double lo = eig.eigenvalues().minCoeff();
  double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > 1e12) {
    throw NumericError("optimal_weight: MSE matrix singular or ill-conditioned");
  }
  CMat v = eig.eigenvectors() *
           eig.eigenvalues().cwiseInverse().asDiagonal() *
           eig.eigenvectors().adjoint();
  return 0.5 * (v + v.adjoint().eval());
}

double surrogate(const WmmseState& state, const std::array<CMat, 2>& e,
                 const std::array<double, 2>& weights) {
  double acc = 0.0;
  for (int l = 0; l < 2; ++l) {
    if (weights[l] == 0.0 && state.v[l].size() == 0) continue;
    acc += weights[l] * (log2_det_hermitian_pd(state.v[l]) -
                         std::real((state.v[l] * e[l]).trace()) + state.d[l]);
  }
  return acc;
}

}  // namespace starmimo
