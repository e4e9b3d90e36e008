#pragma once

// No-superluminal-signalling protocol: Alice (dim 4) and Bob (qubit) share
// (1/2)(|0>|0> + |1>|psi> + |2>|1> + |3>|psibar>). Bob applies the
// hypothetical Hadamard machine without communicating; if Alice's reduced
// density matrix changes, the machine signals. It stays fixed exactly on
// the consistent ensemble.

#include "nogo/linalg.hpp"
#include "nogo/qubit.hpp"

namespace nogo {

struct SignallingVerdict {
  DensityMatrix rho_before;
  DensityMatrix rho_after;
  double distance = 0.0;
  double residual_alpha = 0.0;  // alpha_a - alpha_b
  double residual_beta = 0.0;   // beta_b
  bool signalling = false;
  bool spectra_equal = false;
};

inline FormalState build_signalling_resource(const QubitSpec& psi) {
  const Complex half(0.5);
  std::vector<FormalTerm> terms;
  terms.push_back({half, {BranchLabel::basis(0, 4), BranchLabel::zero()}});
  terms.push_back({half, {BranchLabel::basis(1, 4), BranchLabel::psi()}});
  terms.push_back({half, {BranchLabel::basis(2, 4), BranchLabel::one()}});
  terms.push_back({half, {BranchLabel::basis(3, 4), BranchLabel::psi_bar()}});
  return FormalState(psi, std::move(terms));
}

inline FormalState apply_machine_bob(const FormalState& resource) {
  return apply_machine(resource, 1);
}

// Alice's reduced density matrix before Bob's operation.
inline DensityMatrix rdm_before(const QubitSpec& psi) {
  return partial_trace(concretize(build_signalling_resource(psi)), {0});
}

// Alice's reduced density matrix after Bob applies the machine.
inline DensityMatrix rdm_after(const QubitSpec& psi) {
  return partial_trace(concretize(apply_machine_bob(build_signalling_resource(psi))), {0});
}

inline SignallingVerdict signalling_verdict(const QubitSpec& psi, double tol = kViolationTol) {
  DensityMatrix before = rdm_before(psi);
  DensityMatrix after = rdm_after(psi);
  const double dist = trace_distance(before, after);

  const Spectrum sb = hermitian_eigenvalues(before);
  const Spectrum sa = hermitian_eigenvalues(after);
  bool spectra_equal = true;
  for (size_t i = 0; i < sb.values.size(); ++i)
    if (std::abs(sb.values[i] - sa.values[i]) > kEigTol) spectra_equal = false;

  SignallingVerdict v{std::move(before), std::move(after), dist,
                      psi.alpha_a() - psi.alpha_b(), psi.beta_b(),
                      dist > tol, spectra_equal};
  return v;
}

}  // namespace nogo
