#include "zecap/random.hpp"

#include <cmath>
#include <stdexcept>

namespace zecap {

namespace {

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = complex_gaussian(rng);
  return g;
}

}  // namespace

ComplexVector random_unit_vector(std::size_t d, Rng& rng) {
  ComplexVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows < cols) throw std::invalid_argument("isometry needs rows >= cols");
  const ComplexMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) { return random_isometry(d, d, rng); }

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return (g + g.adjoint()) * 0.5;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd& lam = es.eigenvalues();
  ComplexVector phases(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) phases(k) = std::polar(1.0, t * lam(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix random_unitary_step(std::size_t d, double step, Rng& rng) {
  ComplexMatrix h = random_hermitian(d, rng);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const double radius = es.eigenvalues().cwiseAbs().maxCoeff();
  if (radius > 0.0) h /= radius;
  return unitary_exp(h, step);
}

DensityMatrix random_pure_state(std::size_t d, Rng& rng) { return DensityMatrix::pure(random_unit_vector(d, rng)); }

DensityMatrix random_mixed_state(std::size_t d, std::size_t env, Rng& rng) {
  // Reshape a unit vector on C^d (x) C^env to a d x env matrix A; rho = A A^dagger.
  const ComplexVector psi = random_unit_vector(d * env, rng);
  ComplexMatrix a(d, env);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t e = 0; e < env; ++e) a(i, e) = psi(i * env + e);
  return DensityMatrix(a * a.adjoint(), Unchecked{});
}

QuantumChannel random_channel(std::size_t d, std::size_t kraus_count, Rng& rng) {
  const ComplexMatrix v = random_isometry(d * kraus_count, d, rng);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(kraus_count);
  for (std::size_t m = 0; m < kraus_count; ++m) kraus.push_back(v.middleRows(m * d, d));
  return QuantumChannel(d, std::move(kraus), Unchecked{});
}

Povm random_general_povm(std::size_t d, std::size_t outcomes, Rng& rng) {
  const ComplexMatrix v = random_isometry(outcomes, d, rng);
  std::vector<ComplexMatrix> elems;
  elems.reserve(outcomes);
  for (std::size_t j = 0; j < outcomes; ++j) {
    const ComplexMatrix row = v.row(j);
    elems.push_back(row.adjoint() * row);
  }
  return Povm(d, std::move(elems), Unchecked{});
}

}  // namespace zecap
