#pragma once

#include <Eigen/Dense>

#include <variant>

namespace nvread::kinetics {

// All rates are expressed in units of 1/SL and all durations in SL, where
// SL is the lifetime of the metastable singlet state (about 300 ns).

/// Constant phonon-driven spin mixing between the excited-state sublevels,
/// unaffected by the optical rates.
struct NonRadiativeMixing {
  double k_m = 0.0;
};

/// Optically activated spin mixing: cross-spin excitation at k_me = alpha*k_e
/// and cross-spin radiative decay at k_mf = alpha*k_f. Both channels scale
/// with the pump rate and the Purcell factor respectively, and the cross-spin
/// decays emit photons.
struct RadiativeMixing {
  double alpha = 0.0;
};

using MixingModel = std::variant<NonRadiativeMixing, RadiativeMixing>;

/// Typical NV rates in 1/SL units.
inline constexpr double kTypicalKf0 = 300.0 / 13.0;               // ~23.0769
inline constexpr double kTypicalKs = 300.0 / 7.8 - 300.0 / 13.0;  // ~15.3846
inline constexpr double kTypicalK0 = 1.0;
inline constexpr double kTypicalKmFraction = 0.0404;  // k_m = 0.0404 * k_f0
inline constexpr double kTypicalAlpha = 0.02;         // radiative mixing fraction

/// Transition rates of the five-level optical model.
///
/// Levels: |g,0>, |g,+-1>, |e,0>, |e,+-1> and the singlet shelf. The +-1
/// sublevels are lumped into a single level of degeneracy two.
struct RateParams {
  double k_e = kTypicalKf0;   ///< spin-preserving excitation rate (532 nm pump)
  double k_f0 = kTypicalKf0;  ///< unmodified radiative decay rate
  double pf = 1.0;            ///< Purcell factor; effective k_f = pf * k_f0
  double k_s = kTypicalKs;    ///< |e,+-1> -> singlet intersystem crossing
  double k_0 = kTypicalK0;    ///< singlet -> |g,0>
  MixingModel mixing = NonRadiativeMixing{kTypicalKmFraction * kTypicalKf0};

  /// Purcell-enhanced radiative decay rate pf * k_f0.
  double radiative_decay() const { return pf * k_f0; }

  bool is_radiative_mixing() const {
    return std::holds_alternative<RadiativeMixing>(mixing);
  }

  /// Throws std::invalid_argument if any rate is negative or pf <= 0.
  void validate() const;

  static RateParams typical();
  static RateParams typical_radiative(double alpha = kTypicalAlpha);
};

/// Occupation probabilities of the five levels. Valid states are
/// componentwise in [0,1] and sum to one, within 1e-9.
struct StateVector {
  double p_g0 = 0.0;
  double p_g1 = 0.0;
  double p_e0 = 0.0;
  double p_e1 = 0.0;
  double p_s = 0.0;

  static StateVector ground_ms0() { return {1.0, 0.0, 0.0, 0.0, 0.0}; }
  static StateVector ground_ms1() { return {0.0, 1.0, 0.0, 0.0, 0.0}; }
  /// Fully mixed ground manifold: 1/3 in m_s=0, 2/3 in the lumped +-1 level.
  static StateVector mixed_ground() { return {1.0 / 3.0, 2.0 / 3.0, 0.0, 0.0, 0.0}; }

  double sum() const { return p_g0 + p_g1 + p_e0 + p_e1 + p_s; }

  Eigen::Matrix<double, 5, 1> to_vector() const;
  static StateVector from_vector(const Eigen::Matrix<double, 5, 1>& v);

  bool is_valid(double tol = 1e-9) const;
};

/// Which spin projection the readout starts from (pure ground state).
enum class InitialSpin { ms0, ms1 };

/// Constant-coefficient rate generator dP/dt = A*P plus the radiative
/// emission weights w, so the instantaneous photon flux is w . P.
///
/// Conservation convention: each diagonal entry is the negated ascending-order
/// sum of its column's off-diagonal entries, so column_defect() is exactly
/// zero for every column of a freshly built generator.
struct GeneratorMatrix {
  Eigen::Matrix<double, 5, 5> rates = Eigen::Matrix<double, 5, 5>::Zero();
  Eigen::Matrix<double, 5, 1> emission = Eigen::Matrix<double, 5, 1>::Zero();

  /// Off-diagonal entries of column j summed in ascending row order, plus the
  /// diagonal. Zero (exactly) means the column conserves probability.
  double column_defect(int j) const;

  /// 6x6 block matrix [[A, 0], [w, 0]]; the sixth component integrates the
  /// cumulative expected photon count alongside the populations.
  Eigen::Matrix<double, 6, 6> augmented() const;
};

/// Builds the generator for the given mixing model. The non-radiative model
/// carries the 2:1 degeneracy asymmetry of the lumped +-1 level (e0 -> e1 at
/// 2*k_m, e1 -> e0 at k_m); the radiative model applies the same 2:1 weights
/// to its cross-spin excitation and decay channels.
GeneratorMatrix build_generator(const RateParams& params);

/// Exact propagation exp(A*t) * init via the matrix exponential.
/// Throws std::invalid_argument for t < 0 or an invalid initial state.
StateVector propagate(const GeneratorMatrix& gen, const StateVector& init, double t);

/// Expected number of photons emitted during a readout window of t_read,
/// starting from the pure ground state of the given spin. Computed from one
/// exponential of the augmented 6x6 matrix; collection efficiency is one.
double expected_photons(const RateParams& params, InitialSpin initial_spin,
                        double t_read);

/// Both spin channels from a single matrix exponential: returns {n0, n1}.
std::pair<double, double> expected_photon_pair(const RateParams& params,
                                               double t_read);

}  // namespace nvread::kinetics
