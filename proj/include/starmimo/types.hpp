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

#ifndef STARMIMO_TYPES_HPP
#define STARMIMO_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace starmimo {

using cxd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Domain errors: inconsistent dimensions, invalid parameter ranges.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric errors: failed factorizations, lost positive definiteness,
/// bracket failures.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solver errors from the conic subproblem layer.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Protocol { ES, MS, TS };

enum class Traffic { Unicast, Broadcast };

/// Which side of the surface a quantity belongs to.
enum class Side { T, R };

std::string to_string(Protocol p);
std::string to_string(Traffic t);

/// Per-element surface coefficients. Amplitudes are stored as the
/// square roots sqrt(alpha); energy constraints act on alpha = amp^2.
struct StarConfig {
  Protocol protocol = Protocol::ES;
  RVec amp_t;    // sqrt(alpha_m^t), length M
  RVec amp_r;    // sqrt(alpha_m^r), length M
  RVec phase_t;  // radians in [0, 2*pi), length M
  RVec phase_r;
  double tau_t = 0.5;  // TS only
  double tau_r = 0.5;

  Eigen::Index elements() const { return amp_t.size(); }

  /// Diagonal of Phi_l as a complex vector: amp .* exp(j*phase).
  CVec coefficients(Side side) const;

  double tau(Side side) const { return side == Side::T ? tau_t : tau_r; }

  /// Uniform starting point: alpha split 1/2 each side (ES/MS) or unit
  /// amplitudes (TS), all phases zero.
  static StarConfig uniform(Protocol protocol, Eigen::Index m);
};

/// Per-user transmit precoding matrices (N x Nd_l). For broadcast
/// traffic both entries hold the same shared matrix.
struct PrecoderSet {
  CMat w_t;
  CMat w_r;

  const CMat& of(Side side) const { return side == Side::T ? w_t : w_r; }
  CMat& of(Side side) { return side == Side::T ? w_t : w_r; }
};

struct SystemSpec {
  int n_tx = 4;        // N
  int n_user_t = 4;    // N_t
  int n_user_r = 4;    // N_r
  int n_streams_t = 2; // N_{d_t}
  int n_streams_r = 2; // N_{d_r}
  int m_elements = 8;  // M
  double weight_t = 0.5;
  double weight_r = 0.5;
  double power_budget = 1.0;    // watts
  double noise_power = 1e-11;   // watts
  Traffic traffic = Traffic::Unicast;

  int n_user(Side side) const { return side == Side::T ? n_user_t : n_user_r; }
  int n_streams(Side side) const {
    return side == Side::T ? n_streams_t : n_streams_r;
  }
  double weight(Side side) const {
    return side == Side::T ? weight_t : weight_r;
  }
};

/// A named constraint violation; empty list means feasible.
struct Violation {
  std::string name;
  std::string detail;
  double magnitude = 0.0;
};

constexpr double kFeasTol = 1e-8;      // energy / power / tau feasibility
constexpr double kBinaryTol = 1e-3;    // MS binarity at acceptance
constexpr double kUnitModTol = 1e-12;  // TS amplitude deviation from 1

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) {
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

}  // namespace starmimo

#endif
