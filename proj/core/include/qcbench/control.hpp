#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "qcbench/qubit.hpp"

namespace qcbench {

/// Admissible control values: bounds (either side may be infinite), an
/// optional uniform grid of M+1 levels over the bounds, and the maximum
/// number of pieces N in a sequence.
struct ConstraintSpec {
  double j_min = -std::numeric_limits<double>::infinity();
  double j_max = std::numeric_limits<double>::infinity();
  std::optional<int> levels_minus_one;  // M; a discrete grid when present
  int max_pieces = 1;                   // N

  bool bounded() const { return std::isfinite(j_min) || std::isfinite(j_max); }
  bool discrete() const { return levels_minus_one.has_value(); }

  /// Throws std::invalid_argument on: j_min >= j_max (both finite),
  /// M < 1, a grid with an infinite bound, or max_pieces < 1.
  void validate() const;

  static ConstraintSpec unrestricted(int n_pieces);
  static ConstraintSpec bounds(double lo, double hi, int n_pieces);
  static ConstraintSpec grid(double lo, double hi, int levels_minus_one, int n_pieces);
};

/// The M+1 admissible values {j_min + k (j_max - j_min) / M : k = 0..M},
/// ascending. Requires finite bounds and M >= 1.
std::vector<double> action_set(const ConstraintSpec& spec);

/// min(max(j, j_min), j_max); identity when unbounded.
double clamp(double j, const ConstraintSpec& spec);

/// Piecewise-constant control values with their common step duration.
/// A sequence may be shorter than the constraint's max_pieces when the
/// producing optimizer terminated early.
struct ControlSequence {
  std::vector<double> values;
  double dt = 0.0;

  int length() const { return static_cast<int>(values.size()); }
};

/// Each value replaced by the nearest grid value; exact ties resolve toward
/// the larger grid value. Grid must be nonempty and ascending.
ControlSequence snap_to_grid(const ControlSequence& seq, std::span<const double> grid);

struct Trajectory {
  std::vector<double> times;
  std::vector<QubitState> states;

  int length() const { return static_cast<int>(states.size()); }
};

struct EvolvedSequence {
  QubitState final_state;
  Trajectory trajectory;  // initial state plus one entry per completed step
};

EvolvedSequence evolve_sequence(const QubitState& psi0, const ControlSequence& seq,
                                const PhysicsConfig& cfg);

/// Fidelity of the evolved final state against the target; no trajectory
/// is allocated.
double sequence_fidelity(const ControlSequence& seq, const QubitState& psi0,
                         const QubitState& target, const PhysicsConfig& cfg);

}  // namespace qcbench
