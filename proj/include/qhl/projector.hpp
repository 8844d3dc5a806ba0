#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "qhl/config.hpp"
#include "qhl/errors.hpp"
#include "qhl/numeric.hpp"

namespace qhl {

/// A quantum proposition: a Hermitian idempotent matrix, identified with the
/// subspace it projects onto. Construction validates eagerly; near-projectors
/// outside tolerance are rejected, not snapped (see purify()).
class Projector {
 public:
  explicit Projector(ComplexMatrix matrix, double tol = tolerance())
      : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
      throw ShapeError("projector: matrix is not square: " +
                       detail::shape_of(matrix_));
    }
    const double herm = frobenius_norm(matrix_ - matrix_.adjoint());
    if (herm > tol) {
      throw ValidationError("projector: not Hermitian, ||P - P^dag||_F = " +
                            std::to_string(herm));
    }
    const double idem = frobenius_norm(matrix_ * matrix_ - matrix_);
    if (idem > tol) {
      throw ValidationError("projector: not idempotent, ||P^2 - P||_F = " +
                            std::to_string(idem));
    }
    const double tr = matrix_.trace().real();
    rank_ = static_cast<int>(std::lround(tr));
    if (std::abs(tr - rank_) > tol) {
      throw ValidationError("projector: trace " + std::to_string(tr) +
                            " is not within tolerance of an integer rank");
    }
  }

  static Projector zero(Eigen::Index dim) {
    return Projector(ComplexMatrix::Zero(dim, dim));
  }
  static Projector identity(Eigen::Index dim) {
    return Projector(ComplexMatrix::Identity(dim, dim));
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  int rank() const { return rank_; }
  bool is_zero() const { return rank_ == 0; }

 private:
  ComplexMatrix matrix_;
  int rank_;
};

namespace detail {

inline void require_same_dim(const Projector& p, const Projector& q,
                             const char* op) {
  if (p.dim() != q.dim()) {
    throw ShapeError(std::string(op) + ": dimension mismatch: " +
                     std::to_string(p.dim()) + " vs " + std::to_string(q.dim()));
  }
}

}  // namespace detail

/// Snap a near-projector to the closest true projector: symmetrize, then
/// round eigenvalues to {0,1} at the 1/2 threshold.
inline Projector purify(const ComplexMatrix& m, double tol = tolerance()) {
  if (m.rows() != m.cols()) {
    throw ShapeError("purify: matrix is not square: " + detail::shape_of(m));
  }
  const ComplexMatrix sym = (m + m.adjoint()) / 2.0;
  const auto ed = eigh(sym, 1.0);  // symmetrized, so any asymmetry bound works
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    if (ed.eigenvalues(k) >= 0.5) {
      out += ed.eigenvectors.col(k) * ed.eigenvectors.col(k).adjoint();
    }
  }
  return Projector(std::move(out), tol);
}

/// Rank-1 projector |v><v| onto a state.
inline Projector projector_from_state(const StateVector& v) {
  const StateVector u = normalize(v);
  return Projector(u * u.adjoint());
}

/// A direction in space for spin components; normalized at construction.
struct SpinAxis {
  double x;
  double y;
  double z;

  SpinAxis(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n == 0.0) {
      throw DegenerateInputError("spin axis: zero direction");
    }
    x /= n;
    y /= n;
    z /= n;
  }

  static SpinAxis x_axis() { return {1, 0, 0}; }
  static SpinAxis y_axis() { return {0, 1, 0}; }
  static SpinAxis z_axis() { return {0, 0, 1}; }
};

/// Projector onto spin sign/2 along the axis: (I + sign n.sigma) / 2.
inline Projector spin_projector(const SpinAxis& axis, int sign) {
  if (sign != 1 && sign != -1) {
    throw ValidationError("spin projector: sign must be +1 or -1");
  }
  const ComplexMatrix n_sigma =
      axis.x * pauli_x() + axis.y * pauli_y() + axis.z * pauli_z();
  return Projector((identity(2) + static_cast<double>(sign) * n_sigma) / 2.0);
}

/// Orthocomplement: I - P.
inline Projector complement(const Projector& p) {
  return Projector(identity(p.dim()) - p.matrix());
}

/// Projector onto range(P) intersect range(Q): the eigenvalue-2 eigenspace of
/// P + Q. A sum of two projectors has spectrum in [0,2] and its eigenvalue-2
/// eigenvectors are exactly the common range vectors. On commuting inputs the
/// result equals PQ.
inline Projector meet(const Projector& p, const Projector& q,
                      double window = meet_window) {
  detail::require_same_dim(p, q, "meet");
  const auto ed = eigh(p.matrix() + q.matrix());
  ComplexMatrix out = ComplexMatrix::Zero(p.dim(), p.dim());
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    if (std::abs(ed.eigenvalues(k) - 2.0) <= window) {
      out += ed.eigenvectors.col(k) * ed.eigenvectors.col(k).adjoint();
    }
  }
  return Projector(std::move(out));
}

/// Projector onto the closed span of the two ranges, by De Morgan from meet.
inline Projector join(const Projector& p, const Projector& q,
                      double window = meet_window) {
  detail::require_same_dim(p, q, "join");
  return complement(meet(complement(p), complement(q), window));
}

/// Containment of ranges: P <= Q iff QP = P.
inline bool leq(const Projector& p, const Projector& q, double tol = tolerance()) {
  detail::require_same_dim(p, q, "leq");
  return frobenius_norm(q.matrix() * p.matrix() - p.matrix()) <= tol;
}

inline double commutator_norm(const Projector& p, const Projector& q) {
  detail::require_same_dim(p, q, "commutator_norm");
  return frobenius_norm(p.matrix() * q.matrix() - q.matrix() * p.matrix());
}

inline bool commutes(const Projector& p, const Projector& q,
                     double tol = tolerance()) {
  return commutator_norm(p, q) <= tol;
}

struct CommonEigenstate {
  bool exists;
  std::optional<StateVector> witness;  // unit vector in a joint eigenspace
};

/// Does some unit vector lie in one of the four joint sectors
/// (range/kernel of P) x (range/kernel of Q)? Weaker than commutation in
/// dimension >= 3: commuting implies a full common eigenbasis, but a single
/// shared eigenvector can exist for a non-commuting pair.
inline CommonEigenstate common_eigenstate_exists(const Projector& p,
                                                 const Projector& q) {
  detail::require_same_dim(p, q, "common_eigenstate_exists");
  const Projector not_p = complement(p);
  const Projector not_q = complement(q);
  const Projector* sectors[4][2] = {
      {&p, &q}, {&p, &not_q}, {&not_p, &q}, {&not_p, &not_q}};
  for (const auto& sector : sectors) {
    const Projector m = meet(*sector[0], *sector[1]);
    if (!m.is_zero()) {
      // any range vector will do; take the top eigenvector
      const auto ed = eigh(m.matrix());
      return {true, normalize(ed.eigenvectors.col(ed.eigenvalues.size() - 1))};
    }
  }
  return {false, std::nullopt};
}

}  // namespace qhl
