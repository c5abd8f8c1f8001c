#pragma once

#include <vector>

#include "incvar/common.hpp"

namespace incvar {

/// Lorenz-96 model configuration: state dimension, forcing, and the time
/// discretization of the assimilation window.
struct L96Config {
  int n = 40;           ///< state dimension (cyclic grid)
  double forcing = 8.0; ///< forcing term F
  double dt = 0.01;     ///< integration time step
  int steps = 0;        ///< number of time steps in the window

  void validate() const;
};

struct ModelState {
  Vector values;
  int step = 0;
};

/// Stored model states at every time step 0..steps of a window. Required by
/// the tangent-linear and adjoint sweeps, which re-linearize each step around
/// the stored state.
class Trajectory {
 public:
  Trajectory() = default;
  explicit Trajectory(std::vector<Vector> states) : states_(std::move(states)) {}

  int steps() const { return static_cast<int>(states_.size()) - 1; }
  const Vector& state(int t) const { return states_.at(static_cast<std::size_t>(t)); }
  const Vector& initial() const { return states_.front(); }
  const Vector& final() const { return states_.back(); }
  bool empty() const { return states_.empty(); }

 private:
  std::vector<Vector> states_;
};

/// Right-hand side d_i = (x_{i+1} - x_{i-2}) x_{i-1} - x_i + F, cyclic.
Vector l96_tendency(const Vector& x, const L96Config& cfg);

/// Jacobian-vector product of the tendency at x.
Vector l96_tendency_tl(const Vector& x, const Vector& dx, const L96Config& cfg);

/// Transposed Jacobian-vector product of the tendency at x.
Vector l96_tendency_ad(const Vector& x, const Vector& w, const L96Config& cfg);

/// One classical RK4 step of length cfg.dt.
Vector rk4_step(const Vector& x, const L96Config& cfg);

/// Exact tangent linear of rk4_step, linearized at the step-start state x.
Vector rk4_step_tl(const Vector& x, const Vector& dx, const L96Config& cfg);

/// Exact transpose of rk4_step_tl at the step-start state x.
Vector rk4_step_ad(const Vector& x, const Vector& w, const L96Config& cfg);

/// Advances x0 by cfg.steps RK4 steps, storing every intermediate state.
/// Throws DivergenceError if the state leaves the admissible range.
Trajectory integrate(const ModelState& x0, const L96Config& cfg);

/// Spin-up protocol: all-ones initial state with a 0.008 perturbation at
/// component n/2, integrated for spinup_steps steps. Returns the final state
/// with its step index reset to zero, for use as the twin-experiment truth.
ModelState spinup(const L96Config& cfg, long spinup_steps);

/// Propagates dx0 through the linearization of every stored step; returns the
/// perturbation at steps 0..steps.
std::vector<Vector> tangent_linear(const Trajectory& traj, const L96Config& cfg,
                                   const Vector& dx0);

/// Exact transpose of tangent_linear: maps a per-step forcing sequence
/// (same layout as the tangent_linear output) back to initial-condition space.
Vector adjoint(const Trajectory& traj, const L96Config& cfg,
               const std::vector<Vector>& forcing);

/// Adjoint with forcing only at the final time.
Vector adjoint(const Trajectory& traj, const L96Config& cfg, const Vector& w_final);

}  // namespace incvar
