#pragma once

// Dense complex linear algebra for small Hilbert spaces (total dimension
// <= 16): normalized state vectors with a subsystem signature, density
// matrices, tensor products, partial trace, Hermitian spectra, trace
// distance and von Neumann entropy.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nogo {

using Complex = std::complex<double>;

// Tolerances. The underlying algebra is exact; these absorb only
// floating-point error.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kMatTol = 1e-12;
inline constexpr double kEigTol = 1e-10;

// Default threshold separating "verdict zero" from a genuine violation;
// the residuals are either exactly zero or bounded away from it.
inline constexpr double kViolationTol = 1e-9;

// The engine targets small composite systems.
inline constexpr int kMaxTotalDim = 16;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw std::invalid_argument(std::string(what) + ": non-finite component");
}

// Pure state of a composite system. dims lists the subsystem dimensions,
// subsystem 0 varying slowest in the amplitude index. The constructor
// renormalizes when the squared norm deviates from 1 beyond kNormTol and
// records that it did so.
class StateVector {
 public:
  StateVector(std::vector<Complex> amplitudes, std::vector<int> dims)
      : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("StateVector: empty dims");
    long long total = 1;
    for (int d : dims_) {
      if (d <= 0) throw std::invalid_argument("StateVector: nonpositive subsystem dim");
      total *= d;
    }
    if (total > kMaxTotalDim)
      throw std::invalid_argument("StateVector: total dimension exceeds engine limit");
    if (static_cast<long long>(amps_.size()) != total)
      throw std::invalid_argument("StateVector: amplitude count does not match dims");
    double n2 = 0.0;
    for (Complex z : amps_) {
      require_finite(z, "StateVector");
      n2 += std::norm(z);
    }
    if (n2 <= 0.0) throw std::invalid_argument("StateVector: zero vector");
    if (std::abs(n2 - 1.0) > kNormTol) {
      const double inv = 1.0 / std::sqrt(n2);
      for (Complex& z : amps_) z *= inv;
      renormalized_ = true;
    }
  }

  int size() const { return static_cast<int>(amps_.size()); }
  int subsystems() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const { return dims_.at(k); }
  const std::vector<int>& dims() const { return dims_; }
  Complex amplitude(int i) const { return amps_.at(i); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  bool was_renormalized() const { return renormalized_; }

 private:
  std::vector<Complex> amps_;
  std::vector<int> dims_;
  bool renormalized_ = false;
};

// Descending-sorted real eigenvalues.
struct Spectrum {
  std::vector<double> values;

  double min() const { return values.back(); }
  double max() const { return values.front(); }
  double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }
};

namespace detail {

inline void require_square(const std::vector<Complex>& e, int dim) {
  if (dim <= 0 || static_cast<long long>(e.size()) != static_cast<long long>(dim) * dim)
    throw std::invalid_argument("matrix: entry count does not match dim");
}

inline double hermiticity_defect(const std::vector<Complex>& e, int dim) {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      worst = std::max(worst, std::abs(e[i * dim + j] - std::conj(e[j * dim + i])));
  return worst;
}

inline double offdiag_frobenius(const std::vector<Complex>& e, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i != j) s += std::norm(e[i * dim + j]);
  return std::sqrt(s);
}

}  // namespace detail

// Eigenvalues of a 2x2 Hermitian matrix from the quadratic closed form.
inline Spectrum eigenvalues_2x2(const std::vector<Complex>& e) {
  detail::require_square(e, 2);
  const double m = 0.5 * (e[0].real() + e[3].real());
  const double d = 0.5 * (e[0].real() - e[3].real());
  const double r = std::sqrt(d * d + std::norm(e[1]));
  return Spectrum{{m + r, m - r}};
}

// Cyclic Jacobi sweeps for a complex Hermitian matrix. Stops when the
// off-diagonal Frobenius norm drops below 1e-13 or after 50 sweeps.
inline Spectrum jacobi_eigenvalues(std::vector<Complex> a, int dim) {
  detail::require_square(a, dim);
  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 50;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::offdiag_frobenius(a, dim) < kOffTol) break;
    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const Complex apq = a[p * dim + q];
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = apq / g;  // e^{i arg(apq)}
        const double app = a[p * dim + p].real();
        const double aqq = a[q * dim + q].real();
        // Real Jacobi rotation for [[app, g], [g, aqq]].
        // Eigenvector tangent of [[app, g], [g, aqq]]: smaller root of
        // t^2 - 2 tau t - 1 = 0.
        const double tau = (aqq - app) / (2.0 * g);
        const double t = -(tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Columns: col_p <- c*col_p + s*conj(phase)*col_q,
        //          col_q <- -s*col_p + c*conj(phase)*col_q.
        for (int i = 0; i < dim; ++i) {
          const Complex aip = a[i * dim + p];
          const Complex aiq = a[i * dim + q];
          a[i * dim + p] = c * aip + s * std::conj(phase) * aiq;
          a[i * dim + q] = -s * aip + c * std::conj(phase) * aiq;
        }
        // Rows with the conjugate transpose.
        for (int j = 0; j < dim; ++j) {
          const Complex apj = a[p * dim + j];
          const Complex aqj = a[q * dim + j];
          a[p * dim + j] = c * apj + s * phase * aqj;
          a[q * dim + j] = -s * apj + c * phase * aqj;
        }
      }
    }
  }
  std::vector<double> vals(dim);
  for (int i = 0; i < dim; ++i) vals[i] = a[i * dim + i].real();
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return Spectrum{std::move(vals)};
}

// Eigenvalues of a Hermitian matrix: closed form for dim 2, cyclic Jacobi
// rotations otherwise. Throws on non-Hermitian input beyond kMatTol.
inline Spectrum hermitian_eigenvalues(const std::vector<Complex>& entries, int dim) {
  detail::require_square(entries, dim);
  for (Complex z : entries) require_finite(z, "hermitian_eigenvalues");
  if (detail::hermiticity_defect(entries, dim) > kMatTol)
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian within tolerance");
  if (dim == 1) return Spectrum{{entries[0].real()}};
  if (dim == 2) return eigenvalues_2x2(entries);
  return jacobi_eigenvalues(entries, dim);
}

// Hermitian, unit-trace, positive-semidefinite matrix. All three
// invariants are checked on construction.
class DensityMatrix {
 public:
  DensityMatrix(int dim, std::vector<Complex> entries)
      : dim_(dim), e_(std::move(entries)) {
    detail::require_square(e_, dim_);
    for (Complex z : e_) require_finite(z, "DensityMatrix");
    if (detail::hermiticity_defect(e_, dim_) > kMatTol)
      throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    Complex tr = 0.0;
    for (int i = 0; i < dim_; ++i) tr += e_[i * dim_ + i];
    if (std::abs(tr - Complex(1.0)) > kMatTol)
      throw std::invalid_argument("DensityMatrix: trace differs from 1");
    if (hermitian_eigenvalues(e_, dim_).min() < -kEigTol)
      throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
  }

  int dim() const { return dim_; }
  Complex operator()(int i, int j) const { return e_.at(i * dim_ + j); }
  const std::vector<Complex>& entries() const { return e_; }

 private:
  int dim_;
  std::vector<Complex> e_;
};

inline Spectrum hermitian_eigenvalues(const DensityMatrix& m) {
  return hermitian_eigenvalues(m.entries(), m.dim());
}

// Kronecker product of two normalized states; subsystem signatures
// concatenate, lhs indices vary slowest.
inline StateVector tensor_product(const StateVector& lhs, const StateVector& rhs) {
  const long long total = static_cast<long long>(lhs.size()) * rhs.size();
  if (total > kMaxTotalDim)
    throw std::invalid_argument("tensor_product: total dimension exceeds engine limit");
  std::vector<Complex> amps(static_cast<size_t>(total));
  for (int i = 0; i < lhs.size(); ++i)
    for (int j = 0; j < rhs.size(); ++j)
      amps[static_cast<size_t>(i) * rhs.size() + j] = lhs.amplitude(i) * rhs.amplitude(j);
  std::vector<int> dims = lhs.dims();
  dims.insert(dims.end(), rhs.dims().begin(), rhs.dims().end());
  return StateVector(std::move(amps), std::move(dims));
}

// Reduced density matrix of the kept subsystems of a pure state.
inline DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep) {
  const int m = state.subsystems();
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<bool> kept(m, false);
  for (int k : keep) {
    if (k < 0 || k >= m) throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }
  std::vector<int> keep_idx, trace_idx;
  for (int k = 0; k < m; ++k) (kept[k] ? keep_idx : trace_idx).push_back(k);

  int keep_dim = 1, trace_dim = 1;
  for (int k : keep_idx) keep_dim *= state.dim(k);
  for (int k : trace_idx) trace_dim *= state.dim(k);

  // Strides of each subsystem in the flat amplitude index.
  std::vector<long long> stride(m, 1);
  for (int k = m - 2; k >= 0; --k) stride[k] = stride[k + 1] * state.dim(k + 1);

  auto compose = [&](int kv, int tv) {
    long long idx = 0;
    for (int p = static_cast<int>(keep_idx.size()) - 1; p >= 0; --p) {
      const int d = state.dim(keep_idx[p]);
      idx += static_cast<long long>(kv % d) * stride[keep_idx[p]];
      kv /= d;
    }
    for (int p = static_cast<int>(trace_idx.size()) - 1; p >= 0; --p) {
      const int d = state.dim(trace_idx[p]);
      idx += static_cast<long long>(tv % d) * stride[trace_idx[p]];
      tv /= d;
    }
    return idx;
  };

  std::vector<Complex> rho(static_cast<size_t>(keep_dim) * keep_dim, Complex(0.0));
  for (int i = 0; i < keep_dim; ++i)
    for (int j = 0; j < keep_dim; ++j) {
      Complex acc = 0.0;
      for (int t = 0; t < trace_dim; ++t)
        acc += state.amplitude(static_cast<int>(compose(i, t))) *
               std::conj(state.amplitude(static_cast<int>(compose(j, t))));
      rho[static_cast<size_t>(i) * keep_dim + j] = acc;
    }
  return DensityMatrix(keep_dim, std::move(rho));
}

// Half the sum of absolute eigenvalues of p - q.
inline double trace_distance(const DensityMatrix& p, const DensityMatrix& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  const int n = p.dim();
  std::vector<Complex> diff(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = p.entries()[i] - q.entries()[i];
  const Spectrum s = hermitian_eigenvalues(diff, n);
  double acc = 0.0;
  for (double v : s.values) acc += std::abs(v);
  return std::clamp(0.5 * acc, 0.0, 1.0);
}

// -sum lambda log2 lambda in bits, eigenvalues clamped into [0, 1] first so
// that -eps artifacts from the eigensolver cannot produce NaN.
inline double von_neumann_entropy(const DensityMatrix& p) {
  double h = 0.0;
  for (double v : hermitian_eigenvalues(p).values) {
    const double lam = std::clamp(v, 0.0, 1.0);
    if (lam > 0.0) h -= lam * std::log2(lam);
  }
  return std::max(h, 0.0);
}

}  // namespace nogo
