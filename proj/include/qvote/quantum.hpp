#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qvote/common.hpp"
#include "qvote/errors.hpp"
#include "qvote/rng.hpp"

namespace qvote {

// Joint basis indexing: voter 1 is the most significant digit, matching
// Kronecker order, so |g1 g2 ... gN> sits at index g1*D^(N-1) + ... + gN.
int64_t joint_dim(int single_dim, int arity);
std::vector<int> decode_joint_index(int64_t index, int single_dim, int arity);
int64_t encode_joint_index(const std::vector<int>& tuple, int single_dim);

// Pure state over one voter's basis (arity 1) or the N-voter product basis.
// Unnormalized intermediates must be flagged explicitly at construction and
// are rejected by measurement-like operations.
class StateVector {
public:
  enum class Norm { Unit, Raw };

  StateVector(Eigen::VectorXcd amplitudes, int arity, int single_dim, Norm norm = Norm::Unit);

  int arity() const { return arity_; }
  int single_dim() const { return single_dim_; }
  int64_t dim() const { return amplitudes_.size(); }
  bool is_unit() const { return unit_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(int64_t i) const { return amplitudes_(i); }

  double norm() const { return amplitudes_.norm(); }

  // Basis element |index>.
  static StateVector basis_state(int index, int dim);

private:
  Eigen::VectorXcd amplitudes_;
  int arity_;
  int single_dim_;
  bool unit_;
};

// Density operator over one voter's basis or the product basis. Construction
// checks Hermiticity, unit trace, and a nonnegative diagonal; the full PSD
// eigenvalue check is exposed separately (it is cubic in the dimension).
class DensityOperator {
public:
  DensityOperator(Eigen::MatrixXcd matrix, int arity, int single_dim);

  static DensityOperator from_pure(const StateVector& psi);
  static DensityOperator from_diagonal(const std::vector<double>& weights, int arity,
                                       int single_dim);

  int arity() const { return arity_; }
  int single_dim() const { return single_dim_; }
  int64_t dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  double trace() const { return matrix_.trace().real(); }
  std::vector<double> diagonal() const;

  // Smallest eigenvalue of the Hermitian part; >= -tol::kState for a valid
  // state. Intended for invariant checks at desk-scale dimensions.
  double min_eigenvalue() const;

  // Full validity check: Hermitian, PSD, trace 1 (throws on violation).
  void validate() const;

private:
  Eigen::MatrixXcd matrix_;
  int arity_;
  int single_dim_;
};

// Kronecker composition in voter order 1..N.
StateVector tensor(const std::vector<StateVector>& states);
DensityOperator tensor(const std::vector<DensityOperator>& states);

// Reduced state of one voter, tracing out all others. keep_voter is
// 1-based (voters are numbered 1..N throughout).
DensityOperator partial_trace(const DensityOperator& joint, int keep_voter);
DensityOperator partial_trace(const StateVector& joint, int keep_voter);

// Diagonal 0/1 projector onto the span of the given basis indices.
Eigen::MatrixXcd projector(int64_t dim, const std::vector<int>& indices);

// P rho P / Tr(P rho P) resp. P psi / |P psi|. Throws ZeroSupportError when
// the projection weight falls below tol::kSupport.
StateVector project_renormalize(const StateVector& psi, const std::vector<int>& indices);
DensityOperator project_renormalize(const DensityOperator& rho, const std::vector<int>& indices);

// Phase-damping channel: keeps the diagonal, kills every coherence.
DensityOperator phase_damp(const DensityOperator& rho);

// Born probabilities over basis indices. Requires a normalized state.
std::vector<double> born_distribution(const StateVector& psi);
std::vector<double> born_distribution(const DensityOperator& rho);

// One projective measurement outcome, reproducible per RNG stream.
int sample(const StateVector& psi, RngStream& rng);
int sample(const DensityOperator& rho, RngStream& rng);

} // namespace qvote
