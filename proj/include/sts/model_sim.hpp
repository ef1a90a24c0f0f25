#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sts/types.hpp"

namespace sts {

/// Planar measurement triple seen by one sensor: x/y accelerometer channels
/// and the z gyroscope channel.
struct PlanarMeasurement {
  double a_x = 0.0;    // m/s^2
  double a_y = 0.0;    // m/s^2
  double gyr_z = 0.0;  // rad/s
};

/// Rigid-link measurement model for a segment pivoting in the sagittal
/// plane: (g sin(theta) - L alpha, g cos(theta) - L omega^2, omega).
PlanarMeasurement predict_measurement(const SegmentState& state,
                                      const SensorPlacement& placement,
                                      double g = kDefaultGravity);

/// Parameterizes the synthetic trial generator.
struct TrajectoryProfile {
  /// Alternating stationary/transition spans, e.g. Sit, SitToStand, Stand, ...
  std::vector<std::pair<StateLabel, double>> schedule;  // (label, duration s)

  /// Per-sample slope of the transition logistic (edge-anchored, see
  /// simulate_segment_trajectory).
  double transition_speed_w = 0.03;

  // Posture angles, radians. The thigh is fixed at pi/2 (sit) and 0 (stand).
  double sit_theta_s = 0.20;
  double sit_theta_b = 0.30;
  double stand_theta_s = 0.10;
  double stand_theta_b = 0.14;

  double noise_accel_sd = kDefaultGravity / 10.0;  // m/s^2
  double noise_gyro_sd = 0.005;                    // rad/s

  void validate() const;
};

/// Appends `cycles` sit-stand cycles (Sit, SitToStand, Stand, StandToSit) plus
/// a trailing Sit span to an empty schedule.
TrajectoryProfile make_cycle_profile(int cycles, double sit_dwell_s = 2.5,
                                     double stand_dwell_s = 2.5,
                                     double sit_to_stand_s = 1.44,
                                     double stand_to_sit_s = 1.55);

/// Ground-truth kinematics produced by the simulator.
struct TrajectoryTruth {
  std::vector<SegmentState> shank;
  std::vector<SegmentState> thigh;
  std::vector<SegmentState> back;
  std::vector<StateLabel> labels;      // per sample
  std::vector<StateSegment> segments;  // the schedule as sample spans
  double sample_rate_hz = kDefaultSampleRateHz;
};

/// Generates per-sample ground truth for shank, thigh and back.
///
/// Stationary spans hold theta constant with omega = alpha = 0. Transition
/// spans follow the logistic l(k) = 1/(1 + exp(-w (k - b))) rescaled so the
/// angle meets the posture values exactly at the span edges; omega and alpha
/// are its analytic time derivatives.
TrajectoryTruth simulate_segment_trajectory(const TrajectoryProfile& profile,
                                            double sample_rate_hz = kDefaultSampleRateHz);

/// Runs the measurement model over the truth and adds i.i.d. zero-mean
/// Gaussian noise. Out-of-plane channels (z accel, x/y gyro) carry pure noise
/// so ingestion code cannot assume silent channels. Deterministic for a fixed
/// seed.
TrialRecording synthesize_imu(const TrajectoryTruth& truth,
                              const SensorPlacement& shank_placement,
                              const SensorPlacement& back_placement,
                              double noise_accel_sd, double noise_gyro_sd,
                              std::uint64_t seed, double g = kDefaultGravity);

/// Convenience wrapper: simulate + synthesize with the profile's noise SDs.
struct SyntheticTrial {
  TrajectoryTruth truth;
  TrialRecording recording;
};
SyntheticTrial make_synthetic_trial(const TrajectoryProfile& profile,
                                    const SensorPlacement& shank_placement,
                                    const SensorPlacement& back_placement,
                                    std::uint64_t seed,
                                    double sample_rate_hz = kDefaultSampleRateHz,
                                    double g = kDefaultGravity);

}  // namespace sts
