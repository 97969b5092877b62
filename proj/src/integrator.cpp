#include "triad/integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace triad {

namespace {

inline bool is_zero(const Complex3& b) {
  return b[0] == Complex{} && b[1] == Complex{} && b[2] == Complex{};
}

// Stage increment F(s) dt + G(s) dW. The drift and diffusion share the
// bilinear cross-product structure, so each stage costs one cross product:
//   deterministic / HST:  g (s dt + b dW)* x (D s*)
//   EST:                  g s* x D (s dt + b dW)*
struct StageOp {
  const TriadGeometry& geom;
  ModelKind model;
  Complex3 b_conj;

  StageOp(const TriadGeometry& g, ModelKind m, const NoiseAmplitude& b)
      : geom(g), model(is_zero(b) ? ModelKind::Deterministic : m) {
    b_conj = conj(b);
  }

  Complex3 increment(const Complex3& s, double dt, double dW) const {
    const Complex3 sc = conj(s);
    switch (model) {
      case ModelKind::Deterministic:
        return geom.g * cross(dt * sc, dmul(geom.d_diag, sc));
      case ModelKind::Hst:
        return geom.g * cross(dt * sc + dW * b_conj, dmul(geom.d_diag, sc));
      case ModelKind::Est:
        return geom.g *
               cross(sc, dmul(geom.d_diag, dt * sc + dW * b_conj));
    }
    return Complex3{};
  }

  Complex3 step(const Complex3& a, double dt, double dW) const {
    const Complex3 q1 = a + increment(a, dt, dW);
    const Complex3 q2 = 0.75 * a + 0.25 * (q1 + increment(q1, dt, dW));
    return (1.0 / 3.0) * a + (2.0 / 3.0) * (q2 + increment(q2, dt, dW));
  }
};

std::size_t step_count(double T, double dt) {
  return std::size_t(std::ceil(T / dt - 1e-9));
}

}  // namespace

NoisePath generate_noise_path(std::uint64_t seed, std::size_t n_steps,
                              double dt, std::uint64_t particle,
                              std::uint64_t window) {
  if (dt <= 0) throw std::invalid_argument("noise path requires dt > 0");
  NoisePath path;
  path.seed = seed;
  path.dt = dt;
  path.increments.resize(n_steps);
  RngStream stream(seed, Stream::kNoisePath, particle, window);
  const double scale = std::sqrt(dt);
  for (double& dw : path.increments) dw = scale * stream.normal();
  return path;
}

Complex3 ssprk3_step(const Complex3& a, const TriadGeometry& geom,
                     ModelKind model, const NoiseAmplitude& b, double dt,
                     double dW) {
  if (dt <= 0) throw std::invalid_argument("ssprk3_step requires dt > 0");
  return StageOp(geom, model, b).step(a, dt, dW);
}

AdvanceResult advance(const Complex3& a0, const TriadGeometry& geom,
                      ModelKind model, const NoiseAmplitude& b, double dt,
                      std::size_t n_steps, RngStream& noise) {
  const StageOp op(geom, model, b);
  const double scale = std::sqrt(dt);
  AdvanceResult res{a0, false, 0};
  for (std::size_t i = 0; i < n_steps; ++i) {
    const Complex3 next = op.step(res.a, dt, scale * noise.normal());
    if (blown_up(next)) {
      res.diverged = true;
      return res;
    }
    res.a = next;
    ++res.steps_taken;
  }
  return res;
}

Trajectory integrate(const Complex3& a0, const TriadGeometry& geom,
                     ModelKind model, const NoiseAmplitude& b, double dt,
                     double T, const NoisePath& noise,
                     std::size_t record_stride) {
  if (dt <= 0) throw std::invalid_argument("integrate requires dt > 0");
  if (record_stride == 0)
    throw std::invalid_argument("record_stride must be >= 1");
  const std::size_t n_steps = step_count(T, dt);
  if (noise.increments.size() < n_steps)
    throw std::invalid_argument(
        "noise path too short: " + std::to_string(noise.increments.size()) +
        " increments for " + std::to_string(n_steps) + " steps");
  if (n_steps > 0 && std::abs(noise.dt - dt) > 1e-12 * dt)
    throw std::invalid_argument("noise path was generated with different dt");

  const StageOp op(geom, model, b);
  Trajectory traj;
  traj.times.reserve(n_steps / record_stride + 1);

  Complex3 a = a0;
  auto record = [&](std::size_t step) {
    traj.times.push_back(step * dt);
    traj.states.push_back(a);
    traj.energy_series.push_back(energy(a));
    traj.helicity_series.push_back(helicity(a, geom));
  };
  record(0);
  for (std::size_t i = 0; i < n_steps; ++i) {
    const Complex3 next = op.step(a, dt, noise.increments[i]);
    if (blown_up(next)) {
      traj.diverged = true;
      traj.divergence_time = (i + 1) * dt;
      break;
    }
    a = next;
    if ((i + 1) % record_stride == 0) record(i + 1);
  }
  return traj;
}

}  // namespace triad
