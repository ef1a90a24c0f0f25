#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sts/model_sim.hpp"
#include "sts/pipeline.hpp"

namespace sts {

// Subcommand bodies shared by the CLI and the test suites. Each writes its
// outputs under the given directory and returns the written paths.

struct SimulateOptions {
  int cycles = 3;
  std::uint64_t seed = 0;
  bool zero_noise = false;
  double sample_rate_hz = kDefaultSampleRateHz;
  TrajectoryProfile profile = make_cycle_profile(3);
  double l_s = 0.23;
  double l_b = 0.28;
  double g = kDefaultGravity;
};

struct SimulateOutputs {
  std::string truth_csv;
  std::string shank_csv;
  std::string back_csv;
  std::string segments_csv;
};
SimulateOutputs run_simulate(const SimulateOptions& options, const std::string& out_dir);

struct EstimateOutputs {
  std::string kinematics_csv;
  std::string segments_csv;
  KinematicsEstimate estimate;
};
EstimateOutputs run_estimate(const PipelineConfig& config);

/// Classifier-1 only: kinematics CSV in, binary segmentation CSV out.
std::string run_segment(const std::string& kinematics_csv, const PipelineConfig& config);

struct MetricsOutputs {
  std::string report_json;
  std::string report_txt;
  std::vector<std::string> curve_csvs;
  std::string bland_altman_csv;
  std::optional<double> label_accuracy_pct;
};
MetricsOutputs run_metrics(const std::string& estimate_csv, const std::string& truth_csv,
                           const std::optional<std::string>& truth_segments_csv,
                           const PipelineConfig& config);

struct FitWResult {
  double w = 0.0;
  double rmse_rad = 0.0;
};
FitWResult run_fit_w(const std::string& estimate_csv, const std::string& truth_csv,
                     const PipelineConfig& config);

}  // namespace sts
