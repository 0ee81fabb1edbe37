#include "nvread/readout.hpp"

#include "nvread/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nvread::readout {

using kinetics::RateParams;
using kinetics::StateVector;

ReadoutResult readout_stats(const RateParams& params, double t_read) {
  const auto [n0, n1] = kinetics::expected_photon_pair(params, t_read);
  ReadoutResult r;
  r.n0 = n0;
  r.n1 = n1;
  r.delta_mean = n0 - n1;
  r.delta_var = n0 + n1;
  r.snr = snr(n0, n1);
  r.contrast = n0 > 0.0 ? (n0 - n1) / n0 : 0.0;
  return r;
}

double snr(double n0, double n1) {
  if (!(n0 >= 0.0) || !(n1 >= 0.0)) {
    throw std::invalid_argument("expected counts must be >= 0");
  }
  const double total = n0 + n1;
  if (total == 0.0) return 0.0;
  return (n0 - n1) / std::sqrt(total);
}

SpinFractionEstimate mle_estimate(std::int64_t total_counts, std::int64_t m,
                                  double n0, double n1) {
  if (m < 1) {
    throw std::invalid_argument("repetition count m must be >= 1");
  }
  if (!(n0 >= 0.0) || !(n1 >= 0.0)) {
    throw std::invalid_argument("expected counts must be >= 0");
  }
  if (n0 == n1) {
    throw DegenerateError("n0 == n1: spin states are indistinguishable");
  }
  const double mean_per_shot = static_cast<double>(total_counts) / static_cast<double>(m);
  const double raw = (mean_per_shot - n1) / (n0 - n1);
  SpinFractionEstimate est;
  est.r_hat = std::clamp(raw, 0.0, 1.0);
  est.m = m;
  const double lambda = std::max(est.r_hat * n0 + (1.0 - est.r_hat) * n1, 0.0);
  est.std_error = std::sqrt(lambda / static_cast<double>(m)) / std::abs(n0 - n1);
  return est;
}

double init_polarization(const RateParams& params, double pump_duration,
                         double wait_duration) {
  if (!(pump_duration >= 0.0) || !(wait_duration >= 0.0)) {
    throw std::invalid_argument("pump/wait durations must be >= 0");
  }
  StateVector state = StateVector::mixed_ground();
  if (pump_duration > 0.0) {
    state = kinetics::propagate(kinetics::build_generator(params), state, pump_duration);
  }
  if (wait_duration > 0.0) {
    RateParams dark = params;
    dark.k_e = 0.0;
    state = kinetics::propagate(kinetics::build_generator(dark), state, wait_duration);
  }
  return state.p_g0 / (state.p_g0 + state.p_g1);
}

kinetics::RateParams with_default_pump(kinetics::RateParams params) {
  params.k_e = kDefaultPumpExcitationFactor * params.k_f0;
  return params;
}

}  // namespace nvread::readout
