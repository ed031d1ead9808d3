#pragma once

// Complex-matrix foundation: density matrices, Kraus channels, POVMs and
// outcome probabilities p(j|i) = tr(E(rho_i) E_j).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace zecap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Absolute tolerances for the validation checks. All default to 1e-9.
struct Tolerances {
  double herm = 1e-9;   // max-abs entry of M - M^dagger
  double psd = 1e-9;    // min eigenvalue of (M + M^dagger)/2 must be >= -psd
  double trace = 1e-9;  // |tr M - 1|
  double tp = 1e-9;     // Frobenius norm of sum K^dagger K - I
  double povm = 1e-9;   // Frobenius norm of sum E_j - I
  double prob = 1e-9;   // probability range, normalization and imaginary leakage
};

/// Tag for constructors that skip validation. Only use on values that hold
/// the invariants by construction.
struct Unchecked {};

class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

  /// |psi><psi| for a vector normalized by the caller.
  static DensityMatrix pure(const ComplexVector& psi);
  /// |k><k| in dimension d.
  static DensityMatrix basis(std::size_t d, std::size_t k);
  static DensityMatrix maximally_mixed(std::size_t d);

 private:
  ComplexMatrix m_;
};

class QuantumChannel {
 public:
  QuantumChannel(std::size_t dim, std::vector<ComplexMatrix> kraus, Unchecked)
      : dim_(dim), kraus_(std::move(kraus)) {}

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  static QuantumChannel identity(std::size_t d);

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> kraus_;
};

class Povm {
 public:
  Povm(std::size_t dim, std::vector<ComplexMatrix> elements, Unchecked) : dim_(dim), elements_(std::move(elements)) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }
  const ComplexMatrix& operator[](std::size_t j) const { return elements_[j]; }

  /// Projectors onto the computational basis.
  static Povm computational(std::size_t d);
  /// Rank-1 projectors onto the columns of a unitary.
  static Povm from_unitary(const ComplexMatrix& u);

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> elements_;
};

/// Outcome distribution. Entries are clamped to [0, 1] on construction.
class ProbVector {
 public:
  /// Throws ValidationError if an entry leaves [-tol, 1 + tol] or the sum is
  /// off by more than tol.
  explicit ProbVector(std::vector<double> probs, double tol = 1e-9);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t j) const { return probs_[j]; }
  std::span<const double> values() const { return probs_; }

 private:
  std::vector<double> probs_;
};

DensityMatrix validate_state(const ComplexMatrix& m, const Tolerances& tol = {});
QuantumChannel validate_channel(std::vector<ComplexMatrix> kraus, const Tolerances& tol = {});
Povm validate_povm(std::vector<ComplexMatrix> elements, const Tolerances& tol = {});

/// Sum_m K_m rho K_m^dagger.
DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho);

/// Entry j is tr(E(rho) E_j).
ProbVector outcome_probabilities(const QuantumChannel& ch, const DensityMatrix& rho, const Povm& povm,
                                 const Tolerances& tol = {});

/// p_j = tr(sigma E_j) for an already transmitted state.
ProbVector measure(const DensityMatrix& sigma, const Povm& povm, const Tolerances& tol = {});

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Plain Kronecker product of two complex matrices.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Heisenberg-picture effect E^dagger(X) = sum_m K_m^dagger X K_m, so that
/// tr(E(rho) X) = tr(rho E^dagger(X)).
ComplexMatrix adjoint_apply(const QuantumChannel& ch, const ComplexMatrix& x);

/// Smallest eigenvalue of the Hermitian part (M + M^dagger)/2.
double min_hermitian_eigenvalue(const ComplexMatrix& m);

}  // namespace zecap
