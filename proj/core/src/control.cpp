#include "qcbench/control.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcbench {

void ConstraintSpec::validate() const {
  if (std::isnan(j_min) || std::isnan(j_max))
    throw std::invalid_argument("ConstraintSpec: NaN bound");
  if (std::isfinite(j_min) && std::isfinite(j_max) && !(j_min < j_max))
    throw std::invalid_argument("ConstraintSpec: j_min must be below j_max");
  if (levels_minus_one) {
    if (*levels_minus_one < 1)
      throw std::invalid_argument("ConstraintSpec: M must be >= 1");
    if (!std::isfinite(j_min) || !std::isfinite(j_max))
      throw std::invalid_argument("ConstraintSpec: a discrete grid requires finite bounds");
  }
  if (max_pieces < 1) throw std::invalid_argument("ConstraintSpec: max_pieces must be >= 1");
}

ConstraintSpec ConstraintSpec::unrestricted(int n_pieces) {
  ConstraintSpec s;
  s.max_pieces = n_pieces;
  s.validate();
  return s;
}

ConstraintSpec ConstraintSpec::bounds(double lo, double hi, int n_pieces) {
  ConstraintSpec s;
  s.j_min = lo;
  s.j_max = hi;
  s.max_pieces = n_pieces;
  s.validate();
  return s;
}

ConstraintSpec ConstraintSpec::grid(double lo, double hi, int levels_minus_one, int n_pieces) {
  ConstraintSpec s;
  s.j_min = lo;
  s.j_max = hi;
  s.levels_minus_one = levels_minus_one;
  s.max_pieces = n_pieces;
  s.validate();
  return s;
}

std::vector<double> action_set(const ConstraintSpec& spec) {
  spec.validate();
  if (!spec.levels_minus_one)
    throw std::invalid_argument("action_set: constraint has no discrete grid");
  const int m = *spec.levels_minus_one;
  std::vector<double> values(m + 1);
  const double span = spec.j_max - spec.j_min;
  for (int k = 0; k <= m; ++k)
    values[k] = spec.j_min + span * (static_cast<double>(k) / m);
  values.front() = spec.j_min;
  values.back() = spec.j_max;
  return values;
}

double clamp(double j, const ConstraintSpec& spec) {
  if (j < spec.j_min) return spec.j_min;
  if (j > spec.j_max) return spec.j_max;
  return j;
}

ControlSequence snap_to_grid(const ControlSequence& seq, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("snap_to_grid: empty grid");
  ControlSequence out = seq;
  for (double& v : out.values) {
    const auto it = std::lower_bound(grid.begin(), grid.end(), v);
    if (it == grid.begin()) {
      v = grid.front();
    } else if (it == grid.end()) {
      v = grid.back();
    } else {
      const double hi = *it;
      const double lo = *(it - 1);
      // ties go to the larger grid value
      v = (v - lo < hi - v) ? lo : hi;
    }
  }
  return out;
}

EvolvedSequence evolve_sequence(const QubitState& psi0, const ControlSequence& seq,
                                const PhysicsConfig& cfg) {
  EvolvedSequence out{psi0, {}};
  out.trajectory.times.reserve(seq.values.size() + 1);
  out.trajectory.states.reserve(seq.values.size() + 1);
  out.trajectory.times.push_back(0.0);
  out.trajectory.states.push_back(psi0);
  QubitState psi = psi0;
  for (size_t i = 0; i < seq.values.size(); ++i) {
    psi = evolve(psi, propagator(seq.values[i], seq.dt, cfg));
    out.trajectory.times.push_back(static_cast<double>(i + 1) * seq.dt);
    out.trajectory.states.push_back(psi);
  }
  out.final_state = psi;
  return out;
}

double sequence_fidelity(const ControlSequence& seq, const QubitState& psi0,
                         const QubitState& target, const PhysicsConfig& cfg) {
  QubitState psi = psi0;
  for (double j : seq.values) psi = evolve(psi, propagator(j, seq.dt, cfg));
  return fidelity(psi, target);
}

}  // namespace qcbench
