#pragma once

#include <functional>
#include <span>

#include "qcbench/control.hpp"

namespace qcbench {

/// State-preparation task: steer `initial` to `target` within
/// physics.total_time.
struct ProblemSpec {
  QubitState initial = QubitState::ket0();
  QubitState target = QubitState::ket1();
  PhysicsConfig physics{};
};

/// Black-box fidelity objective over fixed-length control vectors. The
/// physical problem provides the canonical instance; tests may inject
/// synthetic surrogates.
class ControlObjective {
 public:
  using Fn = std::function<double(std::span<const double>)>;

  ControlObjective(int n_pieces, double dt, Fn fidelity_fn);

  static ControlObjective physical(const ProblemSpec& prob, int n_pieces);

  double operator()(std::span<const double> values) const { return fn_(values); }

  int n_pieces() const { return n_pieces_; }
  double dt() const { return dt_; }

 private:
  int n_pieces_;
  double dt_;
  Fn fn_;
};

}  // namespace qcbench
