#include "nvread/optimize.hpp"

#include "nvread/readout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nvread::optimize {

using kinetics::RateParams;

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

double checked_eval(const std::function<double(double)>& f, double x, int& evals) {
  const double v = f(x);
  ++evals;
  if (!std::isfinite(v)) {
    throw NumericalError("objective is non-finite at x = " + std::to_string(x));
  }
  return v;
}

}  // namespace

ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lo,
                              double hi, double tol, int grid_points) {
  if (!(hi >= lo)) throw std::invalid_argument("empty search interval");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");

  ScalarMaximum best;
  if (hi == lo) {
    best.x = lo;
    best.value = checked_eval(f, lo, best.evaluations);
    best.converged = true;
    return best;
  }

  grid_points = std::max(grid_points, 2);
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  const auto grid_x = [&](int i) {
    return (i == grid_points - 1) ? hi : lo + step * i;
  };
  int i_best = 0;
  double v_best = -std::numeric_limits<double>::infinity();
  double v_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double v = checked_eval(f, grid_x(i), best.evaluations);
    if (v > v_best) {  // strict: ties break toward the smallest x
      v_best = v;
      i_best = i;
    }
    v_min = std::min(v_min, v);
  }

  best.x = grid_x(i_best);
  best.value = v_best;
  if (v_best - v_min <= 1e-14 * std::max(1.0, std::abs(v_best))) {
    // Flat objective: nothing to bracket.
    best.converged = false;
    best.width = hi - lo;
    return best;
  }

  double a = grid_x(std::max(i_best - 1, 0));
  double b = grid_x(std::min(i_best + 1, grid_points - 1));

  // Golden-section on [a, b]; unimodal after bracketing the grid maximum.
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = checked_eval(f, x1, best.evaluations);
  double f2 = checked_eval(f, x2, best.evaluations);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = checked_eval(f, x2, best.evaluations);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = checked_eval(f, x1, best.evaluations);
    }
  }
  best.x = f1 > f2 ? x1 : x2;
  best.value = std::max(f1, f2);
  if (v_best > best.value) {  // grid point can still win at the bracket edge
    best.x = lo + step * i_best;
    best.value = v_best;
  }
  best.width = b - a;
  best.converged = best.width <= tol;
  return best;
}

Optimum optimal_t(const RateParams& params, double t_max, double tol) {
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
  params.validate();
  const auto objective = [&params](double t) {
    return readout::readout_stats(params, t).snr;
  };
  // Grid over (0, t_max]: the lower edge starts one step in, T = 0 is trivial.
  const int n = 256;
  const ScalarMaximum m =
      maximize_scalar(objective, t_max / n, t_max, tol, n);
  Optimum opt;
  opt.args["T"] = m.x;
  opt.value = m.value;
  opt.evaluations = m.evaluations;
  opt.converged = m.converged;
  opt.tolerance = m.width;
  return opt;
}

Optimum optimal_pf_t(const RateParams& params, std::pair<double, double> pf_range,
                     std::pair<double, double> t_range, double tol_pf,
                     double tol_t) {
  if (!(pf_range.second >= pf_range.first) || !(t_range.second >= t_range.first)) {
    throw std::invalid_argument("optimization ranges must be nonempty");
  }
  params.validate();

  int total_evals = 0;
  // Inner search over T for a fixed Purcell factor.
  const auto inner = [&](double pf) -> ScalarMaximum {
    RateParams p = params;
    p.pf = pf;
    const auto objective = [&p](double t) { return readout::readout_stats(p, t).snr; };
    if (t_range.first == t_range.second) {
      ScalarMaximum m;
      m.x = t_range.first;
      m.value = objective(m.x);
      m.evaluations = 1;
      m.converged = true;
      return m;
    }
    const double lo = std::max(t_range.first, t_range.second / 256);
    return maximize_scalar(objective, lo, t_range.second, tol_t, 200);
  };

  if (pf_range.first == pf_range.second) {
    const ScalarMaximum m = inner(pf_range.first);
    Optimum opt;
    opt.args["PF"] = pf_range.first;
    opt.args["T"] = m.x;
    opt.value = m.value;
    opt.evaluations = m.evaluations;
    opt.converged = m.converged;
    opt.tolerance = m.width;
    return opt;
  }

  double t_at_best = t_range.first;
  const auto outer_objective = [&](double pf) {
    const ScalarMaximum m = inner(pf);
    total_evals += m.evaluations;
    t_at_best = m.x;
    return m.value;
  };
  const ScalarMaximum outer = maximize_scalar(outer_objective, pf_range.first,
                                              pf_range.second, tol_pf, 64);
  // Re-evaluate at the winning PF so the reported T matches it.
  const ScalarMaximum at_best = inner(outer.x);
  total_evals += at_best.evaluations;

  Optimum opt;
  opt.args["PF"] = outer.x;
  opt.args["T"] = at_best.x;
  opt.value = at_best.value;
  opt.evaluations = total_evals + outer.evaluations;
  opt.converged = outer.converged && at_best.converged;
  opt.tolerance = outer.width;
  return opt;
}

SaturationResult saturation_ladder(const RateParams& params, double pf,
                                   double rel_tol, double t_max, double tol_t) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be > 0");
  RateParams p = params;
  p.pf = pf;
  p.validate();
  const double k_f = p.radiative_decay();

  SaturationResult res;
  bool settled = false;
  for (int j = 1; j <= kLadderMaxRungs; ++j) {
    p.k_e = std::ldexp(k_f, j);  // 2^j * k_f
    const auto objective = [&p](double t) { return readout::readout_stats(p, t).snr; };
    const ScalarMaximum m =
        maximize_scalar(objective, t_max / 256, t_max, tol_t, 256);
    res.evaluations += m.evaluations;
    res.rungs.push_back({p.k_e, m.x, m.value});
    if (j >= 2) {
      const auto& prev = res.rungs[res.rungs.size() - 2];
      res.achieved_rel_change = std::abs(m.value - prev.snr) /
                                std::max(std::abs(m.value), 1e-300);
      if (res.achieved_rel_change < rel_tol && res.rungs.size() >= 3) {
        settled = true;
        break;
      }
    }
  }
  if (!settled) {
    throw LadderExhausted("excitation ladder exhausted after " +
                              std::to_string(kLadderMaxRungs) +
                              " rungs without settling",
                          res.rungs);
  }

  // Richardson in 1/K_e over the last three rungs; K_e doubles per rung, so
  // first order is 2*M_j - M_{j-1} and the second level removes the 1/K_e^2
  // term.
  const auto extrapolate = [](double m1, double m2, double m3) {
    const double r1a = 2.0 * m2 - m1;
    const double r1b = 2.0 * m3 - m2;
    return (4.0 * r1b - r1a) / 3.0;
  };
  const std::size_t n = res.rungs.size();
  res.snr_limit = extrapolate(res.rungs[n - 3].snr, res.rungs[n - 2].snr,
                              res.rungs[n - 1].snr);
  res.t_limit = extrapolate(res.rungs[n - 3].t_opt, res.rungs[n - 2].t_opt,
                            res.rungs[n - 1].t_opt);
  return res;
}

Optimum saturated_snr(const RateParams& params, double pf, double rel_tol) {
  const SaturationResult res = saturation_ladder(params, pf, rel_tol);
  Optimum opt;
  opt.args["PF"] = pf;
  opt.args["T"] = res.t_limit;
  opt.args["K_e_final"] = res.rungs.back().k_e;
  opt.args["snr_at_2kf"] = res.rungs.front().snr;
  opt.value = res.snr_limit;
  opt.evaluations = res.evaluations;
  opt.converged = true;
  opt.tolerance = res.achieved_rel_change;
  return opt;
}

}  // namespace nvread::optimize
