#include "qcbench/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace qcbench {

void PhysicsConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::invalid_argument("PhysicsConfig: h must be positive and finite");
  if (!(total_time > 0.0) || !std::isfinite(total_time))
    throw std::invalid_argument("PhysicsConfig: total_time must be positive and finite");
}

QubitState::QubitState(Complex amp0, Complex amp1) : a0_(amp0), a1_(amp1) {
  const double n2 = std::norm(a0_) + std::norm(a1_);
  if (!std::isfinite(n2) || n2 <= 0.0)
    throw std::invalid_argument("QubitState: amplitudes must be finite and not both zero");
  const double inv = 1.0 / std::sqrt(n2);
  a0_ *= inv;
  a1_ *= inv;
}

Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
  return {a.u00 * b.u00 + a.u01 * b.u10, a.u00 * b.u01 + a.u01 * b.u11,
          a.u10 * b.u00 + a.u11 * b.u10, a.u10 * b.u01 + a.u11 * b.u11};
}

Unitary2 adjoint(const Unitary2& u) {
  return {std::conj(u.u00), std::conj(u.u10), std::conj(u.u01), std::conj(u.u11)};
}

Unitary2 propagator(double j, double dt, const PhysicsConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(j)) throw std::invalid_argument("propagator: J must be finite");
  if (!std::isfinite(dt) || dt < 0.0)
    throw std::invalid_argument("propagator: dt must be finite and non-negative");

  const double jz = 4.0 * j;
  const double omega = std::hypot(jz, cfg.h);
  const double c = std::cos(omega * dt);
  const double s = std::sin(omega * dt);
  const double az = jz / omega;
  const double ax = cfg.h / omega;
  return {Complex(c, -s * az), Complex(0.0, -s * ax),
          Complex(0.0, -s * ax), Complex(c, s * az)};
}

QubitState evolve(const QubitState& state, const Unitary2& u) {
  return QubitState(u.u00 * state.amp0() + u.u01 * state.amp1(),
                    u.u10 * state.amp0() + u.u11 * state.amp1());
}

double fidelity(const QubitState& a, const QubitState& b) {
  const Complex overlap = std::conj(a.amp0()) * b.amp0() + std::conj(a.amp1()) * b.amp1();
  const double f = std::norm(overlap);
  return f > 1.0 ? 1.0 : f;
}

BlochAngles bloch_angles(const QubitState& state) {
  constexpr double kPoleEps = 1e-9;
  const double m0 = std::abs(state.amp0());
  const double theta = 2.0 * std::acos(m0 > 1.0 ? 1.0 : m0);
  const double s_half = std::abs(state.amp1());
  if (s_half < kPoleEps || m0 < kPoleEps) return {theta, 0.0};
  double phi = std::arg(state.amp1()) - std::arg(state.amp0());
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return {theta, phi};
}

BlochVector bloch_vector(const BlochAngles& angles) {
  const double st = std::sin(angles.theta);
  return {st * std::cos(angles.phi), st * std::sin(angles.phi), std::cos(angles.theta)};
}

BlochVector bloch_vector(const QubitState& state) {
  const Complex cross = std::conj(state.amp0()) * state.amp1();
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(state.amp0()) - std::norm(state.amp1())};
}

QubitState state_from_angles(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::invalid_argument("state_from_angles: theta outside [0, pi]");
  if (!(phi >= 0.0 && phi < kTwoPi))
    throw std::invalid_argument("state_from_angles: phi outside [0, 2 pi)");
  return QubitState(Complex(std::cos(theta / 2.0), 0.0),
                    std::polar(std::sin(theta / 2.0), phi));
}

QubitState equator_target(double phi) {
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  return QubitState(Complex(kInvSqrt2, 0.0), std::polar(kInvSqrt2, phi));
}

}  // namespace qcbench
