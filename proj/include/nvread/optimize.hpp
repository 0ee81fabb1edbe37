#pragma once

#include "nvread/errors.hpp"
#include "nvread/kinetics.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nvread::optimize {

/// Optimizer output: named argument values at the optimum, the objective
/// value, and convergence metadata. `converged` implies the final bracket
/// width (stored in `tolerance`) is at or below the requested tolerance.
struct Optimum {
  std::map<std::string, double> args;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
  double tolerance = 0.0;
};

/// Scalar maximum found by a coarse grid scan followed by golden-section
/// refinement of the bracket around the best grid point.
struct ScalarMaximum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
  double width = 0.0;  ///< achieved bracket width
};

/// Maximizes f over [lo, hi]. The grid guards against secondary lobes; ties
/// on the grid break toward the smallest x. A flat objective (grid max equals
/// grid min) is reported with converged = false. Non-finite objective values
/// throw NumericalError.
ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, double tol, int grid_points = 256);

/// Maximizes the readout SNR over the pulse duration T in (0, t_max].
/// Grid scan (>= 200 points) plus golden-section refinement to tol.
Optimum optimal_t(const kinetics::RateParams& params, double t_max = 8.0,
                  double tol = 1e-4);

/// Joint maximization over (PF, T): outer golden-section on PF around a
/// coarse PF grid, inner optimal-T search per PF. Collapsed ranges degrade
/// gracefully to the corresponding scalar searches.
Optimum optimal_pf_t(const kinetics::RateParams& params,
                     std::pair<double, double> pf_range,
                     std::pair<double, double> t_range, double tol_pf = 1e-3,
                     double tol_t = 1e-4);

/// One rung of the excitation ladder K_e = 2^j * k_f.
struct SaturationRung {
  double k_e = 0.0;
  double t_opt = 0.0;
  double snr = 0.0;
};

/// Ladder data plus Richardson extrapolation (in 1/K_e, over the last three
/// rungs) of both the maximal SNR and the optimal T.
struct SaturationResult {
  std::vector<SaturationRung> rungs;
  double snr_limit = 0.0;
  double t_limit = 0.0;
  int evaluations = 0;
  double achieved_rel_change = 0.0;
};

/// Thrown when the ladder is exhausted before successive maxima settle;
/// carries the rungs computed so far.
class LadderExhausted : public ConvergenceError {
 public:
  LadderExhausted(const std::string& what, std::vector<SaturationRung> partial)
      : ConvergenceError(what), rungs(std::move(partial)) {}
  std::vector<SaturationRung> rungs;
};

inline constexpr int kLadderMaxRungs = 14;

SaturationResult saturation_ladder(const kinetics::RateParams& params, double pf,
                                   double rel_tol = 1e-4, double t_max = 8.0,
                                   double tol_t = 1e-4);

/// K_e -> infinity limit of max_T SNR at the given Purcell factor, as an
/// Optimum. args: PF, T (asymptotic optimal duration), K_e_final (last rung),
/// snr_at_2kf (first rung, the K_e = 2*K_f saturation heuristic).
Optimum saturated_snr(const kinetics::RateParams& params, double pf,
                      double rel_tol = 1e-4);

}  // namespace nvread::optimize
