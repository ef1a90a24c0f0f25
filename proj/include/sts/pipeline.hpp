#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sts/ekf.hpp"
#include "sts/metrics.hpp"
#include "sts/segmenter.hpp"
#include "sts/thigh.hpp"
#include "sts/types.hpp"

namespace sts {

/// Everything the pipeline needs; CLI flags map onto these fields and a
/// key-value config file can override them.
struct PipelineConfig {
  std::string shank_csv;
  std::string back_csv;

  double l_s = 0.23;  // m, ankle -> shank sensor
  double l_b = 0.28;  // m, hip -> back sensor
  double sample_rate_hz = kDefaultSampleRateHz;
  double g = kDefaultGravity;
  double time_offset_s = 0.0;  // constant shift applied to the back stream

  std::optional<std::array<double, 3>> q_diag;  // EKF overrides
  std::optional<std::array<double, 3>> r_diag;
  int init_window = 10;

  FeatureForm feature_form = FeatureForm::Product;
  double thigh_w = 0.135;
  double thigh_gain_deg = 90.0;
  double sit_theta_t_deg = 90.0;   // seated-thigh override
  double stand_theta_t_deg = 0.0;

  NrmseNormalization nrmse_norm = NrmseNormalization::Range;
  std::uint64_t seed = 0;
  std::string output_dir;  // empty: $SIT2STAND_OUTPUT_DIR or "."

  void validate() const;
  EkfConfig ekf_config(double l) const;
  ThighConfig thigh_config() const;
  std::string resolved_output_dir() const;
};

/// Applies `key = value` lines from a config file on top of `base`.
/// Unknown keys are a ConfigError. '#' starts a comment.
PipelineConfig load_config_file(const std::string& path, PipelineConfig base);

/// Linear resampling of one stream onto an explicit uniform grid.
std::vector<ImuSample> resample_to_grid(const std::vector<ImuSample>& stream,
                                        double t_start, double dt, std::size_t count);

/// Reads both sensor CSVs, validates them, applies the configured constant
/// time offset to the back stream and resamples both onto a common uniform
/// grid spanning their overlap.
TrialRecording ingest(const std::string& shank_path, const std::string& back_path,
                      const PipelineConfig& config);

/// Full pipeline on an in-memory recording:
/// EKF per sensor -> classifier 1 -> classifier 2 -> thigh reconstruction.
KinematicsEstimate estimate_kinematics(const TrialRecording& recording,
                                       const PipelineConfig& config);

}  // namespace sts
