#include "zecap/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zecap/errors.hpp"

namespace zecap {

namespace {

void require_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) throw NonFinite("matrix has NaN or Inf entries");
}

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected square");
}

double hermitian_deviation(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_psd_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  const double dev = hermitian_deviation(m);
  if (dev > tol.herm) throw NotHermitian(dev);
  const double lam = min_hermitian_eigenvalue(m);
  if (lam < -tol.psd) throw NotPsd(lam);
}

}  // namespace

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  const ComplexMatrix h = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) { return DensityMatrix(psi * psi.adjoint(), Unchecked{}); }

DensityMatrix DensityMatrix::basis(std::size_t d, std::size_t k) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(k, k) = 1.0;
  return DensityMatrix(std::move(m), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d), Unchecked{});
}

QuantumChannel QuantumChannel::identity(std::size_t d) {
  return QuantumChannel(d, {ComplexMatrix::Identity(d, d)}, Unchecked{});
}

Povm Povm::computational(std::size_t d) {
  std::vector<ComplexMatrix> elems;
  elems.reserve(d);
  for (std::size_t j = 0; j < d; ++j) elems.push_back(DensityMatrix::basis(d, j).matrix());
  return Povm(d, std::move(elems), Unchecked{});
}

Povm Povm::from_unitary(const ComplexMatrix& u) {
  const auto d = static_cast<std::size_t>(u.rows());
  std::vector<ComplexMatrix> elems;
  elems.reserve(d);
  for (Eigen::Index j = 0; j < u.cols(); ++j) elems.push_back(u.col(j) * u.col(j).adjoint());
  return Povm(d, std::move(elems), Unchecked{});
}

ProbVector::ProbVector(std::vector<double> probs, double tol) : probs_(std::move(probs)) {
  double sum = 0.0;
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    double& p = probs_[j];
    if (!std::isfinite(p) || p < -tol || p > 1.0 + tol)
      throw ValidationError("probability " + std::to_string(j) + " out of range: " + std::to_string(p));
    sum += p;
    p = std::clamp(p, 0.0, 1.0);
  }
  if (std::abs(sum - 1.0) > tol) throw ValidationError("probabilities sum to " + std::to_string(sum));
}

DensityMatrix validate_state(const ComplexMatrix& m, const Tolerances& tol) {
  require_square(m);
  require_finite(m);
  if (m.rows() == 0) throw DimensionMismatch("state has dimension 0");
  require_psd_hermitian(m, tol);
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > tol.trace || std::abs(tr.imag()) > tol.trace) throw TraceNotOne(tr.real());
  return DensityMatrix(m, Unchecked{});
}

QuantumChannel validate_channel(std::vector<ComplexMatrix> kraus, const Tolerances& tol) {
  if (kraus.empty()) throw DimensionMismatch("channel has no Kraus operators");
  const auto d = kraus.front().rows();
  if (d == 0) throw DimensionMismatch("channel has dimension 0");
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) {
    require_square(k);
    if (k.rows() != d) throw DimensionMismatch("Kraus operators have different dimensions");
    require_finite(k);
    sum.noalias() += k.adjoint() * k;
  }
  const double dev = (sum - ComplexMatrix::Identity(d, d)).norm();
  if (dev > tol.tp) throw NotTracePreserving(dev);
  return QuantumChannel(static_cast<std::size_t>(d), std::move(kraus), Unchecked{});
}

Povm validate_povm(std::vector<ComplexMatrix> elements, const Tolerances& tol) {
  if (elements.empty()) throw DimensionMismatch("POVM has no elements");
  const auto d = elements.front().rows();
  if (d == 0) throw DimensionMismatch("POVM has dimension 0");
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& e : elements) {
    require_square(e);
    if (e.rows() != d) throw DimensionMismatch("POVM elements have different dimensions");
    require_finite(e);
    require_psd_hermitian(e, tol);
    sum += e;
  }
  const double dev = (sum - ComplexMatrix::Identity(d, d)).norm();
  if (dev > tol.povm) throw PovmIncomplete(dev);
  return Povm(static_cast<std::size_t>(d), std::move(elements), Unchecked{});
}

DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) throw DimensionMismatch("channel and state dimensions differ");
  const auto d = static_cast<Eigen::Index>(ch.dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus()) out.noalias() += k * rho.matrix() * k.adjoint();
  return DensityMatrix(std::move(out), Unchecked{});
}

ProbVector measure(const DensityMatrix& sigma, const Povm& povm, const Tolerances& tol) {
  if (sigma.dim() != povm.dim()) throw DimensionMismatch("state and POVM dimensions differ");
  std::vector<double> probs;
  probs.reserve(povm.size());
  for (const auto& e : povm.elements()) {
    // tr(sigma E) without forming the product.
    const Complex p = (sigma.matrix().transpose().cwiseProduct(e)).sum();
    if (std::abs(p.imag()) >= tol.prob)
      throw ValidationError("outcome probability has imaginary part " + std::to_string(p.imag()));
    probs.push_back(p.real());
  }
  return ProbVector(std::move(probs), tol.prob);
}

ProbVector outcome_probabilities(const QuantumChannel& ch, const DensityMatrix& rho, const Povm& povm,
                                 const Tolerances& tol) {
  return measure(apply_channel(ch, rho), povm, tol);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()), Unchecked{});
}

ComplexMatrix adjoint_apply(const QuantumChannel& ch, const ComplexMatrix& x) {
  const auto d = static_cast<Eigen::Index>(ch.dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus()) out.noalias() += k.adjoint() * x * k;
  return out;
}

}  // namespace zecap
