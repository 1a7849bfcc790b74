#include "qvote/quantum.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace qvote {

int64_t joint_dim(int single_dim, int arity) {
  int64_t d = 1;
  for (int i = 0; i < arity; ++i) d *= single_dim;
  return d;
}

std::vector<int> decode_joint_index(int64_t index, int single_dim, int arity) {
  std::vector<int> tuple(arity);
  for (int v = arity - 1; v >= 0; --v) {
    tuple[v] = static_cast<int>(index % single_dim);
    index /= single_dim;
  }
  return tuple;
}

int64_t encode_joint_index(const std::vector<int>& tuple, int single_dim) {
  int64_t index = 0;
  for (int g : tuple) index = index * single_dim + g;
  return index;
}

StateVector::StateVector(Eigen::VectorXcd amplitudes, int arity, int single_dim, Norm norm)
    : amplitudes_(std::move(amplitudes)), arity_(arity), single_dim_(single_dim),
      unit_(norm == Norm::Unit) {
  if (arity_ < 1) throw Error("state vector needs arity >= 1");
  if (amplitudes_.size() != joint_dim(single_dim_, arity_)) {
    throw Error("state vector length does not match single_dim^arity");
  }
  if (unit_ && std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kState) {
    throw Error("state vector is not normalized");
  }
}

StateVector StateVector::basis_state(int index, int dim) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(index) = 1.0;
  return StateVector(std::move(v), 1, dim);
}

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix, int arity, int single_dim)
    : matrix_(std::move(matrix)), arity_(arity), single_dim_(single_dim) {
  if (arity_ < 1) throw Error("density operator needs arity >= 1");
  const int64_t d = joint_dim(single_dim_, arity_);
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw Error("density operator shape does not match single_dim^arity");
  }
  if (std::abs(matrix_.trace().real() - 1.0) > tol::kState ||
      std::abs(matrix_.trace().imag()) > tol::kState) {
    throw Error("density operator trace is not 1");
  }
  for (int64_t i = 0; i < d; ++i) {
    if (matrix_(i, i).real() < -tol::kState) {
      throw Error("density operator has a negative diagonal entry");
    }
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol::kState) {
    throw Error("density operator is not Hermitian");
  }
}

DensityOperator DensityOperator::from_pure(const StateVector& psi) {
  if (!psi.is_unit()) throw Error("cannot form a density operator from a raw state");
  Eigen::MatrixXcd m = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityOperator(std::move(m), psi.arity(), psi.single_dim());
}

DensityOperator DensityOperator::from_diagonal(const std::vector<double>& weights, int arity,
                                               int single_dim) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(weights.size(), weights.size());
  for (size_t i = 0; i < weights.size(); ++i) m(i, i) = weights[i];
  return DensityOperator(std::move(m), arity, single_dim);
}

std::vector<double> DensityOperator::diagonal() const {
  std::vector<double> d(matrix_.rows());
  for (int64_t i = 0; i < matrix_.rows(); ++i) d[i] = matrix_(i, i).real();
  return d;
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityOperator::validate() const {
  if (min_eigenvalue() < -tol::kState) {
    throw Error("density operator is not positive semidefinite");
  }
}

StateVector tensor(const std::vector<StateVector>& states) {
  if (states.empty()) throw Error("tensor: empty state list");
  const int d = states.front().single_dim();
  Eigen::VectorXcd joint = states.front().amplitudes();
  int arity = states.front().arity();
  bool unit = states.front().is_unit();
  for (size_t i = 1; i < states.size(); ++i) {
    if (states[i].single_dim() != d) throw Error("tensor: mismatched basis dimensions");
    joint = Eigen::kroneckerProduct(joint, states[i].amplitudes()).eval();
    arity += states[i].arity();
    unit = unit && states[i].is_unit();
  }
  return StateVector(std::move(joint), arity, d,
                     unit ? StateVector::Norm::Unit : StateVector::Norm::Raw);
}

DensityOperator tensor(const std::vector<DensityOperator>& states) {
  if (states.empty()) throw Error("tensor: empty state list");
  const int d = states.front().single_dim();
  Eigen::MatrixXcd joint = states.front().matrix();
  int arity = states.front().arity();
  for (size_t i = 1; i < states.size(); ++i) {
    if (states[i].single_dim() != d) throw Error("tensor: mismatched basis dimensions");
    joint = Eigen::kroneckerProduct(joint, states[i].matrix()).eval();
    arity += states[i].arity();
  }
  return DensityOperator(std::move(joint), arity, d);
}

namespace {

void check_keep(int keep_voter, int arity) {
  if (keep_voter < 1 || keep_voter > arity) {
    throw Error("partial_trace: voter index out of range");
  }
}

} // namespace

DensityOperator partial_trace(const DensityOperator& joint, int keep_voter) {
  check_keep(keep_voter, joint.arity());
  const int d = joint.single_dim();
  const int n = joint.arity();
  const int keep = keep_voter - 1;
  // strides of the kept digit and of the traced-out remainder
  const int64_t dim = joint.dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int64_t idx = 0; idx < dim; ++idx) {
    const auto row_tuple = decode_joint_index(idx, d, n);
    for (int c = 0; c < d; ++c) {
      auto col_tuple = row_tuple;
      col_tuple[keep] = c;
      out(row_tuple[keep], c) += joint.matrix()(idx, encode_joint_index(col_tuple, d));
    }
  }
  return DensityOperator(std::move(out), 1, d);
}

DensityOperator partial_trace(const StateVector& joint, int keep_voter) {
  check_keep(keep_voter, joint.arity());
  if (!joint.is_unit()) throw Error("partial_trace: state must be normalized");
  const int d = joint.single_dim();
  const int n = joint.arity();
  const int keep = keep_voter - 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  // rho[r,c] = sum over the other voters' joint assignments
  for (int64_t idx = 0; idx < joint.dim(); ++idx) {
    const Complex a = joint.amplitude(idx);
    if (a == Complex(0.0, 0.0)) continue;
    const auto tuple = decode_joint_index(idx, d, n);
    for (int c = 0; c < d; ++c) {
      auto other = tuple;
      other[keep] = c;
      const Complex b = joint.amplitude(encode_joint_index(other, d));
      if (b == Complex(0.0, 0.0)) continue;
      out(tuple[keep], c) += a * std::conj(b);
    }
  }
  return DensityOperator(std::move(out), 1, d);
}

Eigen::MatrixXcd projector(int64_t dim, const std::vector<int>& indices) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i : indices) {
    if (i < 0 || i >= dim) throw Error("projector: index out of range");
    p(i, i) = 1.0;
  }
  return p;
}

StateVector project_renormalize(const StateVector& psi, const std::vector<int>& indices) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(psi.dim());
  for (int i : indices) {
    if (i < 0 || i >= psi.dim()) throw Error("project_renormalize: index out of range");
    v(i) = psi.amplitude(i);
  }
  const double w = v.squaredNorm();
  if (w <= tol::kSupport) {
    throw ZeroSupportError("projection annihilates the state");
  }
  v /= std::sqrt(w);
  return StateVector(std::move(v), psi.arity(), psi.single_dim());
}

DensityOperator project_renormalize(const DensityOperator& rho, const std::vector<int>& indices) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (int r : indices) {
    if (r < 0 || r >= rho.dim()) throw Error("project_renormalize: index out of range");
    for (int c : indices) m(r, c) = rho.matrix()(r, c);
  }
  const double w = m.trace().real();
  if (w <= tol::kSupport) {
    throw ZeroSupportError("projection annihilates the state");
  }
  m /= w;
  return DensityOperator(std::move(m), rho.arity(), rho.single_dim());
}

DensityOperator phase_damp(const DensityOperator& rho) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  m.diagonal() = rho.matrix().diagonal();
  return DensityOperator(std::move(m), rho.arity(), rho.single_dim());
}

namespace {

std::vector<double> clamp_distribution(std::vector<double> p, double total) {
  if (std::abs(total - 1.0) > tol::kState) {
    throw Error("born_distribution: state is not normalized");
  }
  for (double& x : p) {
    if (x < 0.0) x = 0.0; // rounding noise only; construction bounds it
  }
  return p;
}

} // namespace

std::vector<double> born_distribution(const StateVector& psi) {
  if (!psi.is_unit()) throw Error("born_distribution: state flagged unnormalized");
  std::vector<double> p(psi.dim());
  double total = 0.0;
  for (int64_t i = 0; i < psi.dim(); ++i) {
    p[i] = std::norm(psi.amplitude(i));
    total += p[i];
  }
  return clamp_distribution(std::move(p), total);
}

std::vector<double> born_distribution(const DensityOperator& rho) {
  std::vector<double> p = rho.diagonal();
  double total = 0.0;
  for (double x : p) total += x;
  return clamp_distribution(std::move(p), total);
}

int sample(const StateVector& psi, RngStream& rng) {
  const auto p = born_distribution(psi);
  return rng.categorical(p);
}

int sample(const DensityOperator& rho, RngStream& rng) {
  const auto p = born_distribution(rho);
  return rng.categorical(p);
}

} // namespace qvote
