#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sts/types.hpp"

namespace sts {

enum class NrmseNormalization { Range, Mean };

/// RMSE(estimate, reference) / (max - min of the reference) by default;
/// mean-of-reference normalization behind the config switch.
double nrmse(std::span<const double> estimate, std::span<const double> reference,
             NrmseNormalization norm = NrmseNormalization::Range);

/// Bland-Altman agreement between two equal-length measurements.
struct AgreementReport {
  double mean_diff = 0.0;
  double sd_diff = 0.0;
  double pct_within_2sd = 100.0;
  std::vector<std::pair<double, double>> points;  // (mean, diff) per pair
};
AgreementReport bland_altman(std::span<const double> a, std::span<const double> b);

/// Per-class transition duration statistics.
struct TimingStats {
  struct ClassStats {
    std::vector<double> durations_s;
    double mean_s = 0.0;
    double sd_s = 0.0;  // n-1 denominator
  };
  ClassStats sit_to_stand;
  ClassStats stand_to_sit;
  bool empty = true;  // no transition segments at all
};
TimingStats timing_stats(std::span<const StateSegment> segments);

struct MannWhitneyResult {
  double u = 0.0;            // min(U_a, U_b), midrank ties
  double p_one_sided = 1.0;
  double p_two_sided = 1.0;
  bool exact = false;        // exact enumeration vs normal approximation
};

/// Rank-sum test; exact enumeration when both samples have <= 8 observations
/// and there are no ties across samples, otherwise a normal approximation
/// with continuity and tie correction. Each sample needs >= 3 observations.
MannWhitneyResult mann_whitney_u(std::span<const double> sample_a,
                                 std::span<const double> sample_b);

/// Multiplies each p-value by m and caps at 1.
std::vector<double> bonferroni(std::span<const double> p_values, int m);

/// Mean/SD of the shank and back angles over all samples of one stationary
/// state (radians; reports also carry degrees).
struct PostureStats {
  struct StateEntry {
    bool present = false;
    std::size_t n_samples = 0;
    double mean_theta_s = 0.0, sd_theta_s = 0.0;
    double mean_theta_b = 0.0, sd_theta_b = 0.0;
  };
  StateEntry sit;
  StateEntry stand;
};
PostureStats posture_stats(std::span<const SegmentState> shank,
                           std::span<const SegmentState> back,
                           std::span<const StateLabel> labels);

/// Transitions resampled to 101 phase points (0-100 %) by linear interpolation
/// and averaged.
struct PhaseCurve {
  std::vector<double> mean;  // 101 points
  std::vector<double> sd;
  std::size_t n_segments = 0;
};
PhaseCurve grand_average(const std::vector<std::vector<double>>& segment_traces);

/// Fraction (in percent) of samples where the two label sequences agree.
double label_accuracy_pct(std::span<const StateLabel> estimate,
                          std::span<const StateLabel> truth);

}  // namespace sts
