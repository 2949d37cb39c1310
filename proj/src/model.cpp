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

#include "starmimo/model.hpp"

#include <cmath>
#include <sstream>

namespace starmimo {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2e = 1.4426950408889634074;  // 1/ln(2)
}  // namespace

std::string to_string(Protocol p) {
  switch (p) {
    case Protocol::ES: return "es";
    case Protocol::MS: return "ms";
    case Protocol::TS: return "ts";
  }
  return "?";
}

std::string to_string(Traffic t) {
  return t == Traffic::Unicast ? "unicast" : "broadcast";
}

CVec StarConfig::coefficients(Side side) const {
  const RVec& amp = side == Side::T ? amp_t : amp_r;
  const RVec& phase = side == Side::T ? phase_t : phase_r;
  CVec c(amp.size());
  for (Eigen::Index m = 0; m < amp.size(); ++m) {
    c[m] = std::polar(amp[m], phase[m]);
  }
  return c;
}

StarConfig StarConfig::uniform(Protocol protocol, Eigen::Index m) {
  StarConfig star;
  star.protocol = protocol;
  double amp = protocol == Protocol::TS ? 1.0 : std::sqrt(0.5);
  star.amp_t = RVec::Constant(m, amp);
  star.amp_r = RVec::Constant(m, amp);
  star.phase_t = RVec::Zero(m);
  star.phase_r = RVec::Zero(m);
  star.tau_t = 0.5;
  star.tau_r = 0.5;
  return star;
}

double wrap_phase(double radians) {
  double p = std::fmod(radians, 2.0 * kPi);
  if (p < 0.0) p += 2.0 * kPi;
  if (p >= 2.0 * kPi) p = 0.0;
  return p;
}

double log2_det_hermitian_pd(const CMat& a) {
  Eigen::LLT<CMat> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NumericError("log2_det_hermitian_pd: matrix is not positive definite");
  }
  double acc = 0.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    acc += std::log(std::real(l(i, i)));
  }
  return 2.0 * acc * kLog2e;
}

CMat effective_channel(const CMat& h_user, const StarConfig& star, Side side,
                       const CMat& f) {
  if (h_user.cols() != star.elements() || f.rows() != star.elements()) {
    throw DomainError("effective_channel: element count mismatch");
  }
  CVec coeff = star.coefficients(side);
  return h_user * coeff.asDiagonal() * f;
}

double rate_unicast(const CMat& h_bar_signal, const CMat& h_bar_interference,
                    const CMat& w_signal, const CMat& w_interference,
                    double noise_power) {
  if (!(noise_power > 0.0)) {
    throw DomainError("rate_unicast: noise power must be positive");
  }
  Eigen::Index n_rx = h_bar_signal.rows();
  if (h_bar_signal.cols() != w_signal.rows()) {
    throw DomainError("rate_unicast: signal dimensions mismatch");
  }
  CMat c = noise_power * CMat::Identity(n_rx, n_rx);
  if (w_interference.size() > 0) {
    if (h_bar_interference.rows() != n_rx ||
        h_bar_interference.cols() != w_interference.rows()) {
      throw DomainError("rate_unicast: interference dimensions mismatch");
    }
    CMat hw = h_bar_interference * w_interference;
    c += hw * hw.adjoint();
  }
  CMat hw = h_bar_signal * w_signal;
  CMat s = c + hw * hw.adjoint();
  // log2 det(I + S_sig C^-1) = log2 det(C + S_sig) - log2 det(C)
  return log2_det_hermitian_pd(s) - log2_det_hermitian_pd(c);
}

double rate_ts(const CMat& h_bar, const CMat& w, double noise_power,
               double tau) {
  if (tau < 0.0 || tau > 1.0) {
    throw DomainError("rate_ts: tau must lie in [0, 1]");
  }
  if (tau == 0.0) return 0.0;
  return tau * rate_unicast(h_bar, CMat(), w, CMat(), noise_power);
}

std::array<double, 2> per_user_rates(const SystemSpec& spec,
                                     const ChannelSet& channels,
                                     const PrecoderSet& precoders,
                                     const StarConfig& star) {
  CMat h_bar_t = effective_channel(channels.h_t, star, Side::T, channels.f);
  CMat h_bar_r = effective_channel(channels.h_r, star, Side::R, channels.f);
  std::array<double, 2> rates{0.0, 0.0};
  if (star.protocol == Protocol::TS) {
    rates[0] = rate_ts(h_bar_t, precoders.w_t, spec.noise_power, star.tau_t);
    rates[1] = rate_ts(h_bar_r, precoders.w_r, spec.noise_power, star.tau_r);
  } else if (spec.traffic == Traffic::Broadcast) {
    // Shared stream: each user decodes the common precoder without
    // inter-user interference.
    rates[0] = rate_unicast(h_bar_t, CMat(), precoders.w_t, CMat(),
                            spec.noise_power);
    rates[1] = rate_unicast(h_bar_r, CMat(), precoders.w_r, CMat(),
                            spec.noise_power);
  } else {
    rates[0] = rate_unicast(h_bar_t, h_bar_t, precoders.w_t, precoders.w_r,
                            spec.noise_power);
    rates[1] = rate_unicast(h_bar_r, h_bar_r, precoders.w_r, precoders.w_t,
                            spec.noise_power);
  }
  return rates;
}

double wsr(const SystemSpec& spec, const ChannelSet& channels,
           const PrecoderSet& precoders, const StarConfig& star) {
  auto star_violations = validate(star, spec);
  if (!star_violations.empty()) {
    std::ostringstream os;
    os << "wsr: infeasible configuration:";
    for (const auto& v : star_violations) os << " [" << v.name << "] " << v.detail;
    throw DomainError(os.str());
  }
  auto power_violations = validate(precoders, star, spec);
  if (!power_violations.empty()) {
    std::ostringstream os;
    os << "wsr: infeasible precoders:";
    for (const auto& v : power_violations) os << " [" << v.name << "] " << v.detail;
    throw DomainError(os.str());
  }
  auto rates = per_user_rates(spec, channels, precoders, star);
  return spec.weight_t * rates[0] + spec.weight_r * rates[1];
}

namespace {

void push(std::vector<Violation>& out, const std::string& name,
          const std::string& detail, double magnitude) {
  out.push_back(Violation{name, detail, magnitude});
}

}  // namespace

std::vector<Violation> validate(const StarConfig& star,
                                const SystemSpec& spec) {
  std::vector<Violation> out;
  Eigen::Index m = star.amp_t.size();
  if (star.amp_r.size() != m || star.phase_t.size() != m ||
      star.phase_r.size() != m) {
    push(out, "shape", "amplitude/phase vectors have inconsistent lengths", 0);
    return out;
  }
  if (m != spec.m_elements) {
    push(out, "shape", "element count differs from system spec", 0);
    return out;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (double ph : {star.phase_t[i], star.phase_r[i]}) {
      if (!(ph >= 0.0) || !(ph < 2.0 * kPi)) {
        push(out, "phase_range", "phase outside [0, 2*pi)", ph);
      }
    }
  }
  if (star.protocol == Protocol::TS) {
    for (Eigen::Index i = 0; i < m; ++i) {
      double dev = std::max(std::abs(star.amp_t[i] - 1.0),
                            std::abs(star.amp_r[i] - 1.0));
      if (dev > kUnitModTol) {
        push(out, "unit_modulus", "TS amplitude deviates from 1", dev);
      }
    }
    if (star.tau_t < -kFeasTol || star.tau_t > 1.0 + kFeasTol ||
        star.tau_r < -kFeasTol || star.tau_r > 1.0 + kFeasTol) {
      push(out, "tau_range", "time fraction outside [0, 1]", 0);
    }
    double gap = std::abs(star.tau_t + star.tau_r - 1.0);
    if (gap > kFeasTol) {
      push(out, "tau_sum", "tau_t + tau_r differs from 1", gap);
    }
  } else {
    for (Eigen::Index i = 0; i < m; ++i) {
      double at = star.amp_t[i] * star.amp_t[i];
      double ar = star.amp_r[i] * star.amp_r[i];
      if (at < -kFeasTol || at > 1.0 + kFeasTol || ar < -kFeasTol ||
          ar > 1.0 + kFeasTol) {
        push(out, "alpha_range", "alpha outside [0, 1]", std::max(at, ar));
      }
      double gap = std::abs(at + ar - 1.0);
      if (gap > kFeasTol) {
        push(out, "energy_relationship", "alpha_t + alpha_r differs from 1",
             gap);
      }
      if (star.protocol == Protocol::MS) {
        double bin = std::min({std::abs(at), std::abs(at - 1.0)});
        if (bin > kBinaryTol) {
          push(out, "ms_binarity", "alpha not within binary tolerance", bin);
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const PrecoderSet& precoders,
                                const StarConfig& star,
                                const SystemSpec& spec) {
  std::vector<Violation> out;
  double power = 0.0;
  if (star.protocol == Protocol::TS) {
    power = star.tau_t * precoders.w_t.squaredNorm() +
            star.tau_r * precoders.w_r.squaredNorm();
  } else if (spec.traffic == Traffic::Broadcast) {
    // Shared precoder stored on both sides; count it once.
    power = precoders.w_t.squaredNorm();
  } else {
    power = precoders.w_t.squaredNorm() + precoders.w_r.squaredNorm();
  }
  if (power > spec.power_budget * (1.0 + kFeasTol)) {
    push(out, "power_budget", "transmit power exceeds budget",
         power - spec.power_budget);
  }
  return out;
}

}  // namespace starmimo
