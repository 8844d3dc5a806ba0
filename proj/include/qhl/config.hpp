#pragma once

#include <atomic>
#include <cstddef>

namespace qhl {

namespace detail {
inline std::atomic<double>& tolerance_storage() {
  static std::atomic<double> tol{1e-10};
  return tol;
}
}  // namespace detail

/// Global structural tolerance (Hermiticity, idempotence, membership, ...).
/// Defaults to 1e-10, roughly 1e6 x double epsilon.
inline double tolerance() { return detail::tolerance_storage().load(); }
inline void set_tolerance(double tol) { detail::tolerance_storage().store(tol); }

/// Acceptance window |lambda - 2| for the eigenvalue-2 eigenspace used by
/// meet(). Looser than the structural tolerance because eigenvalue
/// perturbation scales with matrix perturbation.
inline constexpr double meet_window = 1e-8;

/// Default tolerance for the histories consistency condition, decoupled from
/// the structural tolerance.
inline constexpr double consistency_tolerance = 1e-8;

/// Tensor products refuse to produce more than this many entries per axis.
inline constexpr std::size_t tensor_axis_cap = 4096;

/// Decoherence functionals refuse families with more histories than this.
inline constexpr std::size_t history_count_cap = 4096;

/// Truth tables refuse formulas with more atoms than this (2^20 rows).
inline constexpr std::size_t truth_table_atom_cap = 20;

}  // namespace qhl
