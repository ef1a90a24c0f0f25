#pragma once

#include <span>
#include <vector>

#include "sts/types.hpp"

namespace sts {

/// Single-neuron sigmoid model of the thigh angle over a transition segment.
/// x is the classifier-2 output bit: 0 = stand-to-sit (rising logistic,
/// 0 -> gain), 1 = sit-to-stand (falling complement, gain -> 0). t and b are
/// in samples; w is per sample.
struct SigmoidParams {
  double w = 0.135;
  double b = 0.0;          // transition midpoint, sample index
  double gain_deg = 90.0;  // output scale
  int x = 1;

  double gain_rad() const { return deg2rad(gain_deg); }
  void validate() const;
};

/// theta_T(t) in radians; t may be fractional.
double thigh_angle(double t, const SigmoidParams& params);

/// Analytic (theta, omega, alpha) at sample time t; derivatives are taken in
/// seconds using the sample rate.
SegmentState thigh_state(double t, const SigmoidParams& params, double sample_rate_hz);

struct ThighConfig {
  double w = 0.135;
  double gain_deg = 90.0;
  double sit_theta_deg = 90.0;   // per-participant override
  double stand_theta_deg = 0.0;
};

/// Per-sample thigh kinematics for one labeled segment. Stationary segments
/// hold the posture constant with zero derivatives; transitions follow the
/// sigmoid with b at the segment midpoint.
std::vector<SegmentState> thigh_kinematics(const StateSegment& segment,
                                           double sample_rate_hz,
                                           const ThighConfig& config = {});

/// Upper bound on the logistic tail truncation at a transition segment's
/// edges: gain / (1 + exp(w * len / 2)), radians.
double boundary_discontinuity_bound(std::size_t segment_length, const SigmoidParams& params);

struct ThighReconstruction {
  std::vector<SegmentState> states;
  /// |theta_T at transition edge - adjacent stationary value| per transition
  /// segment boundary, radians (reported, not blended away).
  std::vector<double> boundary_jumps;
};

/// Concatenated thigh trajectory across a full labeled segment list.
ThighReconstruction reconstruct_thigh(std::span<const StateSegment> segments,
                                      double sample_rate_hz,
                                      const ThighConfig& config = {});

/// Golden-section fit of the transition speed w in (0, 1] minimizing the RMSE
/// between the reconstructed and reference thigh angle over transition
/// segments.
double fit_transition_speed(std::span<const double> theta_reference,
                            std::span<const StateSegment> segments,
                            double sample_rate_hz, const ThighConfig& config = {});

}  // namespace sts
