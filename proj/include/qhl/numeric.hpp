#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "qhl/config.hpp"
#include "qhl/errors.hpp"

namespace qhl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

namespace detail {

inline std::string shape_of(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace detail

inline ComplexMatrix identity(Eigen::Index d) {
  return ComplexMatrix::Identity(d, d);
}

inline ComplexMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return ComplexMatrix::Zero(rows, cols);
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: dimension mismatch: " + detail::shape_of(a) +
                     " * " + detail::shape_of(b));
  }
  return a * b;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

/// Kronecker product. (a (x) b)[i*br+k, j*bc+l] = a[i,j] * b[k,l].
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto rows = a.rows() * b.rows();
  const auto cols = a.cols() * b.cols();
  if (static_cast<std::size_t>(rows) > tensor_axis_cap ||
      static_cast<std::size_t>(cols) > tensor_axis_cap) {
    throw CapacityError("tensor: result shape " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds the per-axis cap of " +
                        std::to_string(tensor_axis_cap));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  const auto dim = a.size() * b.size();
  if (static_cast<std::size_t>(dim) > tensor_axis_cap) {
    throw CapacityError("tensor: state dimension " + std::to_string(dim) +
                        " exceeds the cap of " + std::to_string(tensor_axis_cap));
  }
  StateVector out(dim);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

inline Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("trace: matrix is not square: " + detail::shape_of(a));
  }
  return a.trace();
}

inline double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

/// Rejects the zero vector; anything else comes back with unit norm.
inline StateVector normalize(const StateVector& v) {
  const double n = v.norm();
  if (n == 0.0) {
    throw DegenerateInputError("normalize: cannot normalize the zero vector");
  }
  return v / n;
}

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  ComplexMatrix eigenvectors;    // orthonormal columns, same order
};

/// Hermitian eigendecomposition. Input must be Hermitian entrywise within
/// tol; eigenvector phases and ordering of degenerate eigenvalues follow the
/// backend's convention, so callers consume eigenspaces, never particular
/// columns.
inline EigenDecomposition eigh(const ComplexMatrix& a, double tol = tolerance()) {
  if (a.rows() != a.cols()) {
    throw ShapeError("eigh: matrix is not square: " + detail::shape_of(a));
  }
  const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    throw ValidationError("eigh: matrix is not Hermitian, max asymmetry " +
                          std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(((a + a.adjoint()) / 2.0).eval());
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Fixed 2x2 building blocks.
inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

}  // namespace qhl
