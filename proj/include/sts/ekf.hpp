#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "sts/model_sim.hpp"
#include "sts/types.hpp"

namespace sts {

/// Filter parameters for one segment. Defaults follow the hand-tuned values:
/// Q = diag((dt^2)^2, (0.1 dt)^2, 0.04^2), R = diag((g/10)^2, (g/10)^2, 0.005^2).
struct EkfConfig {
  double dt = 0.02;     // s
  double g = kDefaultGravity;
  double l = 0.25;      // sensor distance, m
  Eigen::Matrix3d q;    // process noise covariance
  Eigen::Matrix3d r;    // measurement noise covariance
  int init_window = 10; // samples used for the static initial-pose estimate

  static Eigen::Matrix3d default_q(double dt);
  static Eigen::Matrix3d default_r(double g);
  static EkfConfig defaults(double l, double dt = 0.02, double g = kDefaultGravity);

  void validate() const;
};

struct EkfState {
  SegmentState x;      // [theta, omega, alpha]
  Eigen::Matrix3d p;   // error covariance, kept symmetric
};

/// Constant-jerk-free process step: x <- F x, p <- F p F^T + Q with
/// F = [[1, dt, dt^2/2], [0, 1, dt], [0, 0, 1]].
EkfState ekf_predict(const EkfState& state, const EkfConfig& config);

/// Measurement update against h(x) = (g sin(th) - L a, g cos(th) - L w^2, w)
/// using the analytic Jacobian and a Joseph-form covariance update.
EkfState ekf_update(const EkfState& state, const PlanarMeasurement& z,
                    const EkfConfig& config);

/// Analytic Jacobian of the measurement model at `state`.
Eigen::Matrix3d measurement_jacobian(const SegmentState& state, const EkfConfig& config);

/// Initial state from a static pose: theta from the gravity decomposition of
/// the first-window accelerometer means, omega from the first gyro sample.
EkfState ekf_init(std::span<const PlanarMeasurement> stream, const EkfConfig& config);

/// Full forward pass: one predict + update per sample, post-update states out.
std::vector<SegmentState> run_ekf(std::span<const PlanarMeasurement> stream,
                                  const EkfConfig& config);

/// Extracts the planar channels (x/y accel, z gyro) from a sensor stream.
std::vector<PlanarMeasurement> planar_channels(const std::vector<ImuSample>& stream);

}  // namespace sts
