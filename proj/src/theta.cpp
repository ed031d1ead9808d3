#include "zecap/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "zecap/errors.hpp"

namespace zecap {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Standard form: min <C, X> s.t. <A_k, X> = b_k, X PSD, with C = -J and the
// constraint matrices scaled to unit Frobenius norm:
//   A_0 = I / sqrt(V),                  b_0 = 1 / sqrt(V)
//   A_e = (e_i e_j^T + e_j e_i^T) / sqrt(2),  b_e = 0   for every edge e = ij.
// The A_k are mutually orthogonal, so A A^* = I and the y-update is explicit.
class ThetaAdmm {
 public:
  ThetaAdmm(const Graph& g, const ThetaOptions& opts)
      : opts_(opts), n_(static_cast<Eigen::Index>(g.vertex_count())), edges_(g.edges()) {
    inv_sqrt_n_ = 1.0 / std::sqrt(static_cast<double>(n_));
    c_ = -MatrixXd::Ones(n_, n_);
    x_ = MatrixXd::Identity(n_, n_) / static_cast<double>(n_);
    s_ = MatrixXd::Zero(n_, n_);
    y_ = VectorXd::Zero(static_cast<Eigen::Index>(edges_.size()) + 1);
  }

  ThetaResult solve() {
    const double c_norm = c_.norm();
    double mu = 1.0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t it = 1; it <= opts_.max_iterations; ++it) {
      // y = -(mu (A(X) - b) + A(S - C))
      const VectorXd ax = apply_a(x_);
      const VectorXd asc = apply_a(s_ - c_);
      VectorXd b = VectorXd::Zero(y_.size());
      b(0) = inv_sqrt_n_;
      y_ = -(mu * (ax - b) + asc);

      // V = C - A^*(y) - mu X ; S = V_+ ; X = (S - V) / mu
      const MatrixXd v = c_ - apply_adjoint(y_) - mu * x_;
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(v);
      const VectorXd lam = es.eigenvalues().cwiseMax(0.0);
      s_ = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
      x_ = (s_ - v) / mu;

      const double pinf = (apply_a(x_) - b).norm() / (1.0 + b.norm());
      const double dinf = (apply_adjoint(y_) + s_ - c_).norm() / (1.0 + c_norm);

      if (it % 10 == 0 || (pinf < opts_.tol && dinf < opts_.tol)) {
        const double upper = dual_bound();
        const double lower = primal_bound();
        const double gap = upper - lower;
        best_gap = std::min(best_gap, gap);
        if (gap <= opts_.tol && pinf < opts_.tol && dinf < opts_.tol) {
          ThetaResult r;
          r.value = upper;
          r.upper = upper;
          r.lower = lower;
          r.gap = gap;
          r.iterations = it;
          return r;
        }
      }

      // Residual balancing on the penalty.
      if (it % 20 == 0) {
        if (pinf > 4.0 * dinf)
          mu = std::min(mu * 1.6, 1e6);
        else if (dinf > 4.0 * pinf)
          mu = std::max(mu / 1.6, 1e-6);
      }
    }
    throw NotConverged(opts_.max_iterations, best_gap);
  }

 private:
  VectorXd apply_a(const MatrixXd& m) const {
    VectorXd out(y_.size());
    out(0) = m.trace() * inv_sqrt_n_;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [i, j] = edges_[e];
      out(static_cast<Eigen::Index>(e) + 1) = (m(i, j) + m(j, i)) * M_SQRT1_2;
    }
    return out;
  }

  MatrixXd apply_adjoint(const VectorXd& y) const {
    MatrixXd out = MatrixXd::Identity(n_, n_) * (y(0) * inv_sqrt_n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [i, j] = edges_[e];
      const double w = y(static_cast<Eigen::Index>(e) + 1) * M_SQRT1_2;
      out(i, j) += w;
      out(j, i) += w;
    }
    return out;
  }

  // lambda_max(J + sum_e (y_e / sqrt 2) E_e) bounds theta from above for any y.
  double dual_bound() const {
    MatrixXd m = MatrixXd::Ones(n_, n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [i, j] = edges_[e];
      const double w = y_(static_cast<Eigen::Index>(e) + 1) * M_SQRT1_2;
      m(i, j) += w;
      m(j, i) += w;
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  }

  // Repairs X into an exactly feasible primal point: zero the edge entries,
  // lift by the most negative eigenvalue, rescale to unit trace.
  double primal_bound() const {
    MatrixXd b = (x_ + x_.transpose()) * 0.5;
    for (const auto& [i, j] : edges_) {
      b(i, j) = 0.0;
      b(j, i) = 0.0;
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(b, Eigen::EigenvaluesOnly);
    const double lam_min = es.eigenvalues().minCoeff();
    if (lam_min < 0.0) b += MatrixXd::Identity(n_, n_) * (-lam_min);
    const double tr = b.trace();
    if (!(tr > 0.0)) return 0.0;
    return b.sum() / tr;
  }

  ThetaOptions opts_;
  Eigen::Index n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  double inv_sqrt_n_ = 1.0;
  MatrixXd c_, x_, s_;
  VectorXd y_;
};

}  // namespace

ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& opts) {
  const std::size_t v = g.vertex_count();
  if (v > opts.max_vertices) throw SizeLimit("Lovasz theta SDP", v, opts.max_vertices);
  if (v == 0) return {};
  if (v == 1) {
    ThetaResult r;
    r.value = r.lower = r.upper = 1.0;
    return r;
  }
  return ThetaAdmm(g, opts).solve();
}

}  // namespace zecap
