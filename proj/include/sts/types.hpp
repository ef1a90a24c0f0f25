#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "sts/errors.hpp"

namespace sts {

inline constexpr double kDefaultGravity = 9.81;  // m/s^2
inline constexpr double kDefaultSampleRateHz = 50.0;
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Angular kinematics of one body segment at one instant.
/// This triple is also the EKF state vector.
struct SegmentState {
  double theta = 0.0;  // rad
  double omega = 0.0;  // rad/s
  double alpha = 0.0;  // rad/s^2

  bool finite() const {
    return std::isfinite(theta) && std::isfinite(omega) && std::isfinite(alpha);
  }
};

enum class SegmentId { Shank, Back };

/// Where the sensor sits on its segment: distance in meters from the pivot
/// joint (ankle for the shank, hip for the back) along the segment.
struct SensorPlacement {
  double l = 0.0;
  SegmentId segment_id = SegmentId::Shank;

  void validate() const {
    if (!(l > 0.0) || !(l < 1.5)) {
      throw InvalidInputError("sensor placement distance must be in (0, 1.5) m, got " +
                              std::to_string(l));
    }
  }
};

/// One timestamped reading from one sensor, sensor-frame axes.
struct ImuSample {
  double t = 0.0;                     // s
  std::array<double, 3> accel{};      // m/s^2
  std::array<double, 3> gyro{};       // rad/s
};

/// Synchronized two-sensor recording plus placement geometry.
struct TrialRecording {
  std::vector<ImuSample> shank_stream;
  std::vector<ImuSample> back_stream;
  SensorPlacement placement_shank{0.23, SegmentId::Shank};
  SensorPlacement placement_back{0.28, SegmentId::Back};
  double sample_rate_hz = kDefaultSampleRateHz;
};

enum class StateLabel { Sit, Stand, SitToStand, StandToSit };

inline bool is_transition(StateLabel s) {
  return s == StateLabel::SitToStand || s == StateLabel::StandToSit;
}
inline bool is_stationary(StateLabel s) { return !is_transition(s); }

std::string to_string(StateLabel s);
StateLabel parse_state_label(const std::string& text);

/// A labeled, contiguous span of samples. end_idx is exclusive.
struct StateSegment {
  std::size_t start_idx = 0;
  std::size_t end_idx = 0;
  StateLabel label = StateLabel::Sit;
  double duration_s = 0.0;

  std::size_t length() const { return end_idx - start_idx; }
};

inline StateSegment make_segment(std::size_t start, std::size_t end, StateLabel label,
                                 double sample_rate_hz) {
  if (start >= end) throw InvalidInputError("segment must satisfy start_idx < end_idx");
  return StateSegment{start, end, label,
                      static_cast<double>(end - start) / sample_rate_hz};
}

/// Report-time range check: shank/thigh angles live in [0, pi/2), back in
/// [-pi/2, pi/2). The estimator itself never clamps; this is for validation
/// reports only.
bool theta_in_report_range(double theta, char segment);  // segment: 'S','T','B'

/// Per-sample kinematics for all three segments plus the labeling that
/// produced the thigh.
struct KinematicsEstimate {
  std::vector<SegmentState> shank;
  std::vector<SegmentState> thigh;
  std::vector<SegmentState> back;
  std::vector<StateLabel> labels;        // per sample
  std::vector<StateSegment> segments;    // same labeling, as spans
  double sample_rate_hz = kDefaultSampleRateHz;
  std::vector<std::string> warnings;
};

// Column helpers used throughout metrics/tests.
std::vector<double> thetas(const std::vector<SegmentState>& s);
std::vector<double> omegas(const std::vector<SegmentState>& s);
std::vector<double> alphas(const std::vector<SegmentState>& s);

}  // namespace sts
