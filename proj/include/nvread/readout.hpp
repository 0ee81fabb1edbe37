#pragma once

#include "nvread/kinetics.hpp"

#include <cstdint>

namespace nvread::readout {

/// Photon-count statistics of one readout window. The counts from the two
/// spin preparations are Poisson, so their difference is Skellam with mean
/// n0 - n1 and variance n0 + n1.
struct ReadoutResult {
  double n0 = 0.0;          ///< expected photons from |g,0>
  double n1 = 0.0;          ///< expected photons from |g,+-1>
  double delta_mean = 0.0;  ///< n0 - n1
  double delta_var = 0.0;   ///< n0 + n1
  double snr = 0.0;         ///< (n0 - n1) / sqrt(n0 + n1); 0 when n0 + n1 == 0
  double contrast = 0.0;    ///< (n0 - n1) / n0; 0 when n0 == 0
};

ReadoutResult readout_stats(const kinetics::RateParams& params, double t_read);

/// Skellam SNR of two expected counts. Defined as 0 for n0 == n1 == 0 so
/// sweeps through T = 0 stay total. Negative inputs throw.
double snr(double n0, double n1);

/// Maximum-likelihood estimate of the ground-state m_s=0 fraction r from the
/// total photon count of m repeated single-shot readouts.
struct SpinFractionEstimate {
  double r_hat = 0.0;      ///< clamped to [0, 1]
  double std_error = 0.0;  ///< sqrt(lambda(r_hat)/m) / |n0 - n1|
  std::int64_t m = 0;      ///< number of repetitions
};

/// Poisson model: each shot has mean r*n0 + (1-r)*n1, so the likelihood is
/// stationary at r_hat = (total/m - n1)/(n0 - n1). Throws DegenerateError
/// when n0 == n1 (the spin states are indistinguishable).
SpinFractionEstimate mle_estimate(std::int64_t total_counts, std::int64_t m,
                                  double n0, double n1);

/// Fraction of ground population in m_s=0 after optical pumping from the
/// fully mixed ground state (1/3, 2/3) and a laser-off settling period.
/// The pump rate is params.k_e; the wait propagates with k_e = 0 (which also
/// switches off any optically driven mixing excitation).
double init_polarization(const kinetics::RateParams& params, double pump_duration,
                         double wait_duration);

/// Documented default initialization protocol: a strongly saturating pump at
/// k_e = 10 * k_f0 for 5 SL, then 10 SL of settling (over ten singlet
/// lifetimes, so the shelf is fully drained).
inline constexpr double kDefaultPumpDuration = 5.0;
inline constexpr double kDefaultWaitDuration = 10.0;
inline constexpr double kDefaultPumpExcitationFactor = 10.0;

/// params with the default protocol's pump rate k_e = 10 * k_f0 applied.
kinetics::RateParams with_default_pump(kinetics::RateParams params);

}  // namespace nvread::readout
