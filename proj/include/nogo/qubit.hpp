#pragma once

// The arbitrary qubit a|0> + b|1>, its orthogonal complement, the linear
// Hadamard matrix, the hypothetical universal Hadamard machine as a branch
// map over the four labels {|0>, |1>, |psi>, |psibar>}, and the
// one-parameter ensemble (alpha + i beta)|0> + alpha|1> with
// 2 alpha^2 + beta^2 = 1 on which the machine is consistent.

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "nogo/linalg.hpp"

namespace nogo {

inline constexpr double kGenericTol = 1e-12;

// Normalized qubit (a, b) with real/imaginary component views. States with
// a = 0 or b = 0 are admitted but reported as non-generic.
class QubitSpec {
 public:
  QubitSpec(Complex a, Complex b) : a_(a), b_(b) {
    require_finite(a_, "QubitSpec");
    require_finite(b_, "QubitSpec");
    const double n2 = std::norm(a_) + std::norm(b_);
    if (n2 <= 0.0) throw std::invalid_argument("QubitSpec: zero vector");
    if (std::abs(n2 - 1.0) > kNormTol) {
      const double inv = 1.0 / std::sqrt(n2);
      a_ *= inv;
      b_ *= inv;
    }
  }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  double alpha_a() const { return a_.real(); }
  double beta_a() const { return a_.imag(); }
  double alpha_b() const { return b_.real(); }
  double beta_b() const { return b_.imag(); }
  bool generic() const { return std::abs(a_) > kGenericTol && std::abs(b_) > kGenericTol; }

 private:
  Complex a_, b_;
};

// |psibar> = b*|0> - a*|1>, orthogonal to |psi>.
inline QubitSpec orthogonal_complement(const QubitSpec& q) {
  return QubitSpec(std::conj(q.b()), -std::conj(q.a()));
}

inline Complex inner_product(const QubitSpec& x, const QubitSpec& y) {
  return std::conj(x.a()) * y.a() + std::conj(x.b()) * y.b();
}

// (1/sqrt 2) [[1, 1], [1, -1]], row-major. Involutory and unitary.
inline std::array<Complex, 4> hadamard_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  return {Complex(s), Complex(s), Complex(s), Complex(-s)};
}

// Symbolic basis/branch label for one subsystem. Zero and One are the
// qubit computational basis; Basis covers higher-dimensional registers;
// Psi/PsiBar refer to the governing QubitSpec of the enclosing state.
struct BranchLabel {
  enum class Kind { Basis, Psi, PsiBar };

  Kind kind = Kind::Basis;
  int index = 0;
  int dim = 2;

  static BranchLabel zero() { return {Kind::Basis, 0, 2}; }
  static BranchLabel one() { return {Kind::Basis, 1, 2}; }
  static BranchLabel basis(int index, int dim) { return {Kind::Basis, index, dim}; }
  static BranchLabel psi() { return {Kind::Psi, 0, 2}; }
  static BranchLabel psi_bar() { return {Kind::PsiBar, 0, 2}; }
};

struct FormalTerm {
  Complex coeff;
  std::vector<BranchLabel> labels;
};

// Coefficient-weighted sum of labeled product branches, all governed by a
// single QubitSpec.
class FormalState {
 public:
  FormalState(QubitSpec psi, std::vector<FormalTerm> terms)
      : psi_(psi), terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("FormalState: no terms");
    const size_t n = terms_.front().labels.size();
    for (const FormalTerm& t : terms_) {
      require_finite(t.coeff, "FormalState");
      if (t.labels.size() != n)
        throw std::invalid_argument("FormalState: inconsistent subsystem count");
      for (size_t k = 0; k < n; ++k)
        if (t.labels[k].dim != terms_.front().labels[k].dim)
          throw std::invalid_argument("FormalState: inconsistent subsystem dims");
    }
  }

  const QubitSpec& spec() const { return psi_; }
  const std::vector<FormalTerm>& terms() const { return terms_; }
  int subsystems() const { return static_cast<int>(terms_.front().labels.size()); }
  int dim(int k) const { return terms_.front().labels.at(k).dim; }

 private:
  QubitSpec psi_;
  std::vector<FormalTerm> terms_;
};

namespace detail {

inline std::vector<Complex> label_amplitudes(const BranchLabel& l, const QubitSpec& psi) {
  switch (l.kind) {
    case BranchLabel::Kind::Psi:
      return {psi.a(), psi.b()};
    case BranchLabel::Kind::PsiBar:
      return {std::conj(psi.b()), -std::conj(psi.a())};
    case BranchLabel::Kind::Basis: {
      if (l.index < 0 || l.index >= l.dim)
        throw std::invalid_argument("BranchLabel: basis index out of range");
      std::vector<Complex> v(l.dim, Complex(0.0));
      v[l.index] = 1.0;
      return v;
    }
  }
  throw std::invalid_argument("BranchLabel: unknown kind");
}

}  // namespace detail

// Evaluates branch labels to amplitudes and sums the terms. The resulting
// StateVector renormalizes only if the formal norm deviates beyond kNormTol
// and records that it did (see StateVector::was_renormalized).
inline StateVector concretize(const FormalState& f) {
  const int m = f.subsystems();
  std::vector<int> dims(m);
  long long total = 1;
  for (int k = 0; k < m; ++k) {
    dims[k] = f.dim(k);
    total *= dims[k];
  }
  std::vector<Complex> amps(static_cast<size_t>(total), Complex(0.0));
  for (const FormalTerm& t : f.terms()) {
    std::vector<Complex> branch{t.coeff};
    for (int k = 0; k < m; ++k) {
      const std::vector<Complex> sub = detail::label_amplitudes(t.labels[k], f.spec());
      std::vector<Complex> next(branch.size() * sub.size());
      for (size_t i = 0; i < branch.size(); ++i)
        for (size_t j = 0; j < sub.size(); ++j) next[i * sub.size() + j] = branch[i] * sub[j];
      branch = std::move(next);
    }
    for (size_t i = 0; i < amps.size(); ++i) amps[i] += branch[i];
  }
  return StateVector(std::move(amps), std::move(dims));
}

// Defined action of the hypothetical machine on one label. The machine's
// domain is exactly the four labels; there is no extension to arbitrary
// numeric states.
inline StateVector desired_action(const BranchLabel& label, const QubitSpec& psi) {
  if (label.kind == BranchLabel::Kind::Basis && label.dim != 2)
    throw std::invalid_argument("desired_action: machine domain is qubit labels only");
  const QubitSpec bar = orthogonal_complement(psi);
  const double s = 1.0 / std::sqrt(2.0);
  switch (label.kind) {
    case BranchLabel::Kind::Basis:
      return label.index == 0 ? StateVector({Complex(s), Complex(s)}, {2})
                              : StateVector({Complex(s), Complex(-s)}, {2});
    case BranchLabel::Kind::Psi:
      return StateVector({s * (psi.a() + bar.a()), s * (psi.b() + bar.b())}, {2});
    case BranchLabel::Kind::PsiBar:
      return StateVector({s * (psi.a() - bar.a()), s * (psi.b() - bar.b())}, {2});
  }
  throw std::invalid_argument("desired_action: unknown label");
}

// Machine action kept symbolic: each label splits into two labels with a
// 1/sqrt 2 weight and a sign.
inline FormalState apply_machine(const FormalState& f, int subsystem) {
  if (subsystem < 0 || subsystem >= f.subsystems())
    throw std::invalid_argument("apply_machine: subsystem index out of range");
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<FormalTerm> out;
  out.reserve(f.terms().size() * 2);
  for (const FormalTerm& t : f.terms()) {
    const BranchLabel& l = t.labels[subsystem];
    if (l.dim != 2)
      throw std::invalid_argument("apply_machine: machine domain is qubit labels only");
    BranchLabel first, second;
    double sign = 1.0;
    switch (l.kind) {
      case BranchLabel::Kind::Basis:
        first = BranchLabel::zero();
        second = BranchLabel::one();
        sign = (l.index == 0) ? 1.0 : -1.0;
        break;
      case BranchLabel::Kind::Psi:
        first = BranchLabel::psi();
        second = BranchLabel::psi_bar();
        break;
      case BranchLabel::Kind::PsiBar:
        first = BranchLabel::psi();
        second = BranchLabel::psi_bar();
        sign = -1.0;
        break;
    }
    FormalTerm t1 = t;
    t1.coeff = t.coeff * s;
    t1.labels[subsystem] = first;
    FormalTerm t2 = t;
    t2.coeff = t.coeff * s * sign;
    t2.labels[subsystem] = second;
    out.push_back(std::move(t1));
    out.push_back(std::move(t2));
  }
  return FormalState(f.spec(), std::move(out));
}

// Euclidean distance between the linear gate's output H|psi> and the
// machine's defined output (|psi> + |psibar>)/sqrt 2. Raw vectors, not
// rays: the machine acts inside superpositions where relative phase is
// physical. Zero exactly on the consistent ensemble.
inline double universality_defect(const QubitSpec& psi) {
  const auto h = hadamard_matrix();
  const Complex g0 = h[0] * psi.a() + h[1] * psi.b();
  const Complex g1 = h[2] * psi.a() + h[3] * psi.b();
  const StateVector want = desired_action(BranchLabel::psi(), psi);
  return std::sqrt(std::norm(g0 - want.amplitude(0)) + std::norm(g1 - want.amplitude(1)));
}

// Diagnostic variant that quotients out the global phase.
inline double universality_defect_up_to_phase(const QubitSpec& psi) {
  const auto h = hadamard_matrix();
  const Complex g0 = h[0] * psi.a() + h[1] * psi.b();
  const Complex g1 = h[2] * psi.a() + h[3] * psi.b();
  const StateVector want = desired_action(BranchLabel::psi(), psi);
  const Complex ov = std::conj(g0) * want.amplitude(0) + std::conj(g1) * want.amplitude(1);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(ov)));
}

// Chart for the consistent ensemble: beta in [-1, 1], alpha =
// sign * sqrt((1 - beta^2) / 2), so 2 alpha^2 + beta^2 = 1 by construction.
struct EnsembleParam {
  double beta = 0.0;
  int sign = +1;

  EnsembleParam(double beta_, int sign_) : beta(beta_), sign(sign_ >= 0 ? +1 : -1) {
    if (!(std::abs(beta) <= 1.0)) throw std::invalid_argument("EnsembleParam: |beta| > 1");
  }

  double alpha() const { return sign * std::sqrt(std::max(0.0, (1.0 - beta * beta) / 2.0)); }
};

// (alpha + i beta)|0> + alpha|1>.
inline QubitSpec ensemble_state(const EnsembleParam& p) {
  const double alpha = p.alpha();
  return QubitSpec(Complex(alpha, p.beta), Complex(alpha, 0.0));
}

// Membership test for the consistent ensemble: b purely real and the two
// real parts equal.
inline bool in_ensemble(const QubitSpec& psi, double tol) {
  return std::abs(psi.beta_b()) <= tol && std::abs(psi.alpha_a() - psi.alpha_b()) <= tol;
}

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;
};

// x = 2 Re(a* b), y = 2 Im(a* b), z = |a|^2 - |b|^2.
inline BlochVector bloch_coordinates(const QubitSpec& psi) {
  const Complex ab = std::conj(psi.a()) * psi.b();
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(psi.a()) - std::norm(psi.b())};
}

}  // namespace nogo
