#pragma once

#include <string>
#include <vector>

#include "sts/types.hpp"

namespace sts {

// All CSV output is UTF-8 with LF line endings and SI units; floating point
// values are written with 17 significant digits so files round-trip exactly.

std::string format_double(double v);

/// Sensor stream: header `t,ax,ay,az,gx,gy,gz`.
void write_sensor_csv(const std::string& path, const std::vector<ImuSample>& stream);
std::vector<ImuSample> read_sensor_csv(const std::string& path);

/// Kinematics table: header `t,theta_S,omega_S,alpha_S,theta_T,omega_T,
/// alpha_T,theta_B,omega_B,alpha_B` with an optional trailing `label` column.
struct KinematicsFrame {
  std::vector<double> t;
  std::vector<SegmentState> shank;
  std::vector<SegmentState> thigh;
  std::vector<SegmentState> back;
  std::vector<StateLabel> labels;  // empty when the file has no label column

  bool has_labels() const { return !labels.empty(); }
  std::size_t size() const { return t.size(); }
};
void write_kinematics_csv(const std::string& path, const KinematicsFrame& frame);
KinematicsFrame read_kinematics_csv(const std::string& path);

/// Segmentation spans: header `start_idx,end_idx,start_t,end_t,label`.
void write_segments_csv(const std::string& path,
                        const std::vector<StateSegment>& segments,
                        double sample_rate_hz);
std::vector<StateSegment> read_segments_csv(const std::string& path,
                                            double sample_rate_hz);

/// Labeled segments: header `start_t,end_t,label,duration_s`.
void write_labeled_segments_csv(const std::string& path,
                                const std::vector<StateSegment>& segments,
                                double sample_rate_hz);

/// Phase-resampled grand-average curve: header `phase_pct,mean,sd`.
void write_phase_curve_csv(const std::string& path, const std::vector<double>& mean,
                           const std::vector<double>& sd);

}  // namespace sts
