#pragma once

// State-space sweep: classify every sampled qubit by both protocols,
// confirm the zero sets coincide with the consistent ensemble, and emit
// Bloch trajectory data for the ensemble and its orthogonal complements.

#include <numbers>
#include <vector>

#include "nogo/locc.hpp"
#include "nogo/qubit.hpp"
#include "nogo/signalling.hpp"

namespace nogo {

// (theta, phi, chi) chart: a = cos(theta/2) e^{i chi},
// b = sin(theta/2) e^{i (chi + phi)}. The global phase chi is swept
// explicitly because the machine's branch action is phase-sensitive inside
// superpositions. theta samples cell midpoints so the poles (where the
// LOCC resource degenerates) are never hit; phi and chi sample uniformly
// from 0 inclusive.
struct SweepGrid {
  int n_theta = 2;
  int n_phi = 2;
  int n_chi = 1;

  SweepGrid(int nt, int np, int nc) : n_theta(nt), n_phi(np), n_chi(nc) {
    if (n_theta < 2 || n_phi < 2 || n_chi < 1)
      throw std::invalid_argument("SweepGrid: resolutions too small");
    if (static_cast<long long>(n_theta) * n_phi * n_chi > 10'000'000)
      throw std::invalid_argument("SweepGrid: more than 1e7 points");
  }

  long long points() const { return static_cast<long long>(n_theta) * n_phi * n_chi; }

  double theta(int i) const { return std::numbers::pi * (i + 0.5) / n_theta; }
  double phi(int j) const { return 2.0 * std::numbers::pi * j / n_phi; }
  double chi(int k) const { return 2.0 * std::numbers::pi * k / n_chi; }

  QubitSpec state(int i, int j, int k) const {
    const double t = theta(i), p = phi(j), c = chi(k);
    return QubitSpec(std::polar(std::cos(t / 2.0), c), std::polar(std::sin(t / 2.0), c + p));
  }
};

struct ClassificationRecord {
  double theta = 0.0, phi = 0.0, chi = 0.0;
  BlochVector bloch;
  double signalling_distance = 0.0;
  double entropy_after = 0.0;
  double constraint_residual = 0.0;
  bool in_ensemble = false;
};

// One record per grid point, theta-major, then phi, then chi.
inline std::vector<ClassificationRecord> sweep(const SweepGrid& grid,
                                               double tol = kViolationTol) {
  std::vector<ClassificationRecord> out;
  out.reserve(static_cast<size_t>(grid.points()));
  for (int i = 0; i < grid.n_theta; ++i)
    for (int j = 0; j < grid.n_phi; ++j)
      for (int k = 0; k < grid.n_chi; ++k) {
        const QubitSpec psi = grid.state(i, j, k);
        ClassificationRecord r;
        r.theta = grid.theta(i);
        r.phi = grid.phi(j);
        r.chi = grid.chi(k);
        r.bloch = bloch_coordinates(psi);
        r.signalling_distance = signalling_verdict(psi, tol).distance;
        r.entropy_after = locc_verdict(psi, tol).entropy_after;
        r.constraint_residual = constraint_residual(psi);
        r.in_ensemble = in_ensemble(psi, tol);
        out.push_back(r);
      }
  return out;
}

enum class TrajectoryKind { Ensemble, Complement };

struct TrajectoryRow {
  double beta = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
};

// Bloch curve of the consistent ensemble (or its complements) sampled
// uniformly over beta in [-1, 1], positive alpha branch first.
inline std::vector<TrajectoryRow> trajectory(int points, TrajectoryKind which) {
  if (points < 2) throw std::invalid_argument("trajectory: need at least 2 points");
  std::vector<TrajectoryRow> rows;
  rows.reserve(static_cast<size_t>(points) * 2);
  for (int sign : {+1, -1}) {
    for (int i = 0; i < points; ++i) {
      const double beta = -1.0 + 2.0 * i / (points - 1);
      QubitSpec q = ensemble_state(EnsembleParam(beta, sign));
      if (which == TrajectoryKind::Complement) q = orthogonal_complement(q);
      const BlochVector bl = bloch_coordinates(q);
      rows.push_back({beta, bl.x, bl.y, bl.z});
    }
  }
  return rows;
}

// Projects a near-consistent state onto the ensemble: beta_b -> 0, the two
// real parts -> their mean, then renormalize. Only defined inside the
// basin constraint_residual < basin.
inline QubitSpec zero_set_refine(const QubitSpec& seed, double basin = 0.1) {
  if (constraint_residual(seed) >= basin)
    throw std::domain_error("zero_set_refine: seed outside basin");
  const double alpha = 0.5 * (seed.alpha_a() + seed.alpha_b());
  return QubitSpec(Complex(alpha, seed.beta_a()), Complex(alpha, 0.0));
}

}  // namespace nogo
