#pragma once

// LOCC entanglement-monotonicity protocol: Alice holds one qubit, Bob two.
// The resource |0>_A (|01> - |10>)/sqrt 2 + |1>_A (|0 psi> - |psi 0>)/sqrt 2
// (renormalized) is a product state in the A:B cut, so Alice's entropy is
// zero. Bob applies the Hadamard machine on his second qubit; any entropy
// created on Alice's side breaks monotonicity. Zero entropy survives
// exactly on the consistent ensemble.

#include "nogo/linalg.hpp"
#include "nogo/qubit.hpp"

namespace nogo {

struct LoccVerdict {
  bool degenerate = false;
  double entropy_before = 0.0;  // bits
  double entropy_after = 0.0;   // bits
  double normalization = 0.0;   // N
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double constraint_residual = 0.0;  // beta_b^2 + (3/4)(alpha_a - alpha_b)^2
  bool violation = false;
};

// The antisymmetric branch |0 psi> - |psi 0> collapses to b (|01> - |10>),
// so the resource no longer encodes psi when b = 0.
inline bool locc_resource_degenerate(const QubitSpec& psi) {
  return std::abs(psi.b()) <= kGenericTol;
}

inline FormalState build_locc_resource(const QubitSpec& psi) {
  // Branch coefficients give the renormalized resource: the two A-branches
  // carry squared weights 1 and |b|^2 after the antisymmetric cancellation.
  const double c = 1.0 / std::sqrt(2.0 * (1.0 + std::norm(psi.b())));
  std::vector<FormalTerm> terms;
  terms.push_back({Complex(c), {BranchLabel::zero(), BranchLabel::zero(), BranchLabel::one()}});
  terms.push_back({Complex(-c), {BranchLabel::zero(), BranchLabel::one(), BranchLabel::zero()}});
  terms.push_back({Complex(c), {BranchLabel::one(), BranchLabel::zero(), BranchLabel::psi()}});
  terms.push_back({Complex(-c), {BranchLabel::one(), BranchLabel::psi(), BranchLabel::zero()}});
  return FormalState(psi, std::move(terms));
}

inline FormalState apply_machine_b2(const FormalState& resource) {
  return apply_machine(resource, 2);
}

// Alice's reduced state before Bob's operation: rank-1 projector onto
// (|0> + b|1>)/sqrt(1 + |b|^2), spectrum {1, 0}.
inline DensityMatrix rdm_before_locc(const QubitSpec& psi) {
  if (locc_resource_degenerate(psi))
    throw std::domain_error("rdm_before_locc: degenerate resource (b = 0)");
  return partial_trace(concretize(build_locc_resource(psi)), {0});
}

// Alice's reduced state after Bob applies the machine on B2. The machine is
// not norm-preserving off the ensemble, so the concretized state is
// renormalized.
inline DensityMatrix rdm_after_locc(const QubitSpec& psi) {
  return partial_trace(concretize(apply_machine_b2(build_locc_resource(psi))), {0});
}

// N = 1 + alpha_a^2 + alpha_b^2 + beta_b^2 - alpha_a alpha_b, the
// normalization scalar of the post-machine state.
inline double normalization_scalar(const QubitSpec& psi) {
  const double aa = psi.alpha_a(), ab = psi.alpha_b(), bb = psi.beta_b();
  return 1.0 + aa * aa + ab * ab + bb * bb - aa * ab;
}

// lambda_pm = 1/2 +- sqrt((N-2)^2 + (alpha_a + alpha_b)^2) / (2N).
inline std::pair<double, double> closed_form_eigenvalues(const QubitSpec& psi) {
  const double n = normalization_scalar(psi);
  if (n <= kEigTol)
    throw std::domain_error("closed_form_eigenvalues: degenerate normalization");
  const double s = psi.alpha_a() + psi.alpha_b();
  const double root = std::sqrt((n - 2.0) * (n - 2.0) + s * s);
  return {0.5 + root / (2.0 * n), 0.5 - root / (2.0 * n)};
}

// beta_b^2 + (3/4)(alpha_a - alpha_b)^2; zero within tolerance exactly on
// the consistent ensemble.
inline double constraint_residual(const QubitSpec& psi) {
  const double da = psi.alpha_a() - psi.alpha_b();
  return psi.beta_b() * psi.beta_b() + 0.75 * da * da;
}

inline LoccVerdict locc_verdict(const QubitSpec& psi, double tol = kViolationTol) {
  LoccVerdict v;
  if (locc_resource_degenerate(psi)) {
    v.degenerate = true;
    v.constraint_residual = constraint_residual(psi);
    return v;
  }
  v.entropy_before = von_neumann_entropy(rdm_before_locc(psi));
  const DensityMatrix after = rdm_after_locc(psi);
  v.entropy_after = von_neumann_entropy(after);
  v.normalization = normalization_scalar(psi);
  std::tie(v.lambda_plus, v.lambda_minus) = closed_form_eigenvalues(psi);
  v.constraint_residual = constraint_residual(psi);
  v.violation = v.entropy_after > tol;

  // Internal consistency of the constraint derivation: lambda_plus = 1 is
  // equivalent to (alpha_a + alpha_b)^2 = 4(N - 1). With
  // r = 4(N-1) - (alpha_a + alpha_b)^2 and the root from the closed form,
  // (1 - lambda_plus) * 2N * (N + root) must equal r.
  {
    const double n = v.normalization;
    const double s = psi.alpha_a() + psi.alpha_b();
    const double root = std::sqrt((n - 2.0) * (n - 2.0) + s * s);
    const double r = 4.0 * (n - 1.0) - s * s;
    if (std::abs((1.0 - v.lambda_plus) * 2.0 * n * (n + root) - r) > 1e-9)
      throw std::logic_error("locc_verdict: eigenvalue/constraint identity violated");
  }
  return v;
}

}  // namespace nogo
