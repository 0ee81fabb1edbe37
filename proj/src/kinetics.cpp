#include "nvread/kinetics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <string>

namespace nvread::kinetics {

namespace {

void require_nonnegative(double value, const char* name) {
  if (!(value >= 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be >= 0, got " +
                                std::to_string(value));
  }
}

// Indices into the population vector.
enum Level { g0 = 0, g1 = 1, e0 = 2, e1 = 3, s = 4 };

struct Builder {
  Eigen::Matrix<double, 5, 5> a = Eigen::Matrix<double, 5, 5>::Zero();

  void transition(int from, int to, double rate) { a(to, from) += rate; }

  // Diagonal = negated ascending-order sum of the column's off-diagonal
  // entries; column_defect() then telescopes to exactly zero.
  GeneratorMatrix finish(const Eigen::Matrix<double, 5, 1>& emission) {
    for (int j = 0; j < 5; ++j) {
      double out = 0.0;
      for (int i = 0; i < 5; ++i) {
        if (i != j) out += a(i, j);
      }
      a(j, j) = -out;
    }
    return GeneratorMatrix{a, emission};
  }
};

}  // namespace

void RateParams::validate() const {
  require_nonnegative(k_e, "k_e");
  require_nonnegative(k_f0, "k_f0");
  require_nonnegative(k_s, "k_s");
  require_nonnegative(k_0, "k_0");
  if (!(pf > 0.0)) {
    throw std::invalid_argument("pf must be > 0, got " + std::to_string(pf));
  }
  if (const auto* nr = std::get_if<NonRadiativeMixing>(&mixing)) {
    require_nonnegative(nr->k_m, "k_m");
  } else {
    require_nonnegative(std::get<RadiativeMixing>(mixing).alpha, "alpha");
  }
}

RateParams RateParams::typical() { return RateParams{}; }

RateParams RateParams::typical_radiative(double alpha) {
  RateParams p;
  p.mixing = RadiativeMixing{alpha};
  return p;
}

Eigen::Matrix<double, 5, 1> StateVector::to_vector() const {
  Eigen::Matrix<double, 5, 1> v;
  v << p_g0, p_g1, p_e0, p_e1, p_s;
  return v;
}

StateVector StateVector::from_vector(const Eigen::Matrix<double, 5, 1>& v) {
  return {v[0], v[1], v[2], v[3], v[4]};
}

bool StateVector::is_valid(double tol) const {
  const double components[] = {p_g0, p_g1, p_e0, p_e1, p_s};
  for (double c : components) {
    if (!std::isfinite(c) || c < -tol || c > 1.0 + tol) return false;
  }
  return std::abs(sum() - 1.0) <= tol;
}

double GeneratorMatrix::column_defect(int j) const {
  double out = 0.0;
  for (int i = 0; i < 5; ++i) {
    if (i != j) out += rates(i, j);
  }
  return out + rates(j, j);
}

Eigen::Matrix<double, 6, 6> GeneratorMatrix::augmented() const {
  Eigen::Matrix<double, 6, 6> b = Eigen::Matrix<double, 6, 6>::Zero();
  b.topLeftCorner<5, 5>() = rates;
  b.row(5).head<5>() = emission.transpose();
  return b;
}

GeneratorMatrix build_generator(const RateParams& params) {
  params.validate();
  const double k_e = params.k_e;
  const double k_f = params.radiative_decay();
  const double k_s_rate = params.k_s;
  const double k_0 = params.k_0;

  Builder b;
  // Spin-preserving optical cycle and the singlet shelf, common to both
  // mixing models.
  b.transition(g0, e0, k_e);
  b.transition(g1, e1, k_e);
  b.transition(e0, g0, k_f);
  b.transition(e1, g1, k_f);
  b.transition(e1, s, k_s_rate);
  b.transition(s, g0, k_0);

  Eigen::Matrix<double, 5, 1> emission = Eigen::Matrix<double, 5, 1>::Zero();
  emission[e0] = k_f;
  emission[e1] = k_f;

  if (const auto* nr = std::get_if<NonRadiativeMixing>(&params.mixing)) {
    // Phononic mixing inside the excited manifold, 2:1 by degeneracy.
    b.transition(e0, e1, 2.0 * nr->k_m);
    b.transition(e1, e0, nr->k_m);
  } else {
    const double alpha = std::get<RadiativeMixing>(params.mixing).alpha;
    const double k_me = alpha * k_e;
    const double k_mf = alpha * k_f;
    b.transition(g0, e1, 2.0 * k_me);
    b.transition(g1, e0, k_me);
    b.transition(e0, g1, 2.0 * k_mf);
    b.transition(e1, g0, k_mf);
    // Cross-spin decays are radiative and contribute to the collected flux.
    emission[e0] += 2.0 * k_mf;
    emission[e1] += k_mf;
  }
  return b.finish(emission);
}

StateVector propagate(const GeneratorMatrix& gen, const StateVector& init, double t) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("propagation time must be >= 0, got " +
                                std::to_string(t));
  }
  if (!init.is_valid()) {
    throw std::invalid_argument("initial state violates StateVector invariants");
  }
  if (t == 0.0) return init;
  const Eigen::Matrix<double, 5, 5> u = (gen.rates * t).exp();
  return StateVector::from_vector(u * init.to_vector());
}

double expected_photons(const RateParams& params, InitialSpin initial_spin,
                        double t_read) {
  const auto [n0, n1] = expected_photon_pair(params, t_read);
  return initial_spin == InitialSpin::ms0 ? n0 : n1;
}

std::pair<double, double> expected_photon_pair(const RateParams& params,
                                               double t_read) {
  if (!(t_read >= 0.0)) {
    throw std::invalid_argument("t_read must be >= 0, got " +
                                std::to_string(t_read));
  }
  if (t_read == 0.0) return {0.0, 0.0};
  const GeneratorMatrix gen = build_generator(params);
  const Eigen::Matrix<double, 6, 6> u = (gen.augmented() * t_read).exp();
  // Columns g0 and g1 of the counting row are the expected photon numbers for
  // the two pure ground-state preparations.
  return {u(5, 0), u(5, 1)};
}

}  // namespace nvread::kinetics
