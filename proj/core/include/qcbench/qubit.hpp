#pragma once

#include <complex>

namespace qcbench {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Hamiltonian parameters: H(J) = 4 J sigma_z + h sigma_x. The transverse
/// field h is the energy unit; total_time is the evolution window T.
struct PhysicsConfig {
  double h = 1.0;
  double total_time = kTwoPi;

  /// Throws std::invalid_argument unless h > 0 and total_time > 0.
  void validate() const;
};

/// Normalized two-level state. Construction and every evolution step
/// renormalize, so |amp0|^2 + |amp1|^2 = 1 always holds.
class QubitState {
 public:
  QubitState() : a0_(1.0, 0.0), a1_(0.0, 0.0) {}
  QubitState(Complex amp0, Complex amp1);

  static QubitState ket0() { return QubitState(); }
  static QubitState ket1() { return QubitState(Complex(0.0), Complex(1.0)); }

  Complex amp0() const { return a0_; }
  Complex amp1() const { return a1_; }

 private:
  Complex a0_, a1_;
};

struct Unitary2 {
  Complex u00, u01, u10, u11;
};

Unitary2 operator*(const Unitary2& a, const Unitary2& b);
Unitary2 adjoint(const Unitary2& u);

/// Closed-form step propagator exp{-i (4 J sigma_z + h sigma_x) dt}:
///   cos(w dt) I - i sin(w dt) (4 J sigma_z + h sigma_x) / w,
/// with w = sqrt((4J)^2 + h^2). Since h > 0, w >= h and no singular branch
/// exists. Throws on non-finite J or dt, or dt < 0.
Unitary2 propagator(double j, double dt, const PhysicsConfig& cfg = {});

/// One evolution step U |psi>, renormalized.
QubitState evolve(const QubitState& state, const Unitary2& u);

/// |<a|b>|^2. Symmetric and invariant under global phases.
double fidelity(const QubitState& a, const QubitState& b);

struct BlochAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

struct BlochVector {
  double x = 0.0, y = 0.0, z = 1.0;
};

/// Spherical coordinates of the state: theta = 2 acos(|amp0|),
/// phi = arg(amp1) - arg(amp0) mod 2 pi. At either pole phi is 0.
BlochAngles bloch_angles(const QubitState& state);

BlochVector bloch_vector(const BlochAngles& angles);
BlochVector bloch_vector(const QubitState& state);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>. Inverse of bloch_angles up
/// to global phase. Throws on out-of-range angles.
QubitState state_from_angles(double theta, double phi);

/// Equator state (|0> + e^{i phi}|1>) / sqrt(2).
QubitState equator_target(double phi);

}  // namespace qcbench
