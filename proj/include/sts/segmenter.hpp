#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sts/types.hpp"

namespace sts {

/// Classifier-1 feature: non-negative scalar per sample, same timebase as the
/// kinematics input.
struct FeatureSignal {
  std::vector<double> values;
};

enum class FeatureForm {
  Product,     // |theta_S * omega_S * theta_B * omega_B|
  SumOfPairs,  // |theta_S * omega_S + theta_B * omega_B|
};

inline constexpr int kMovingAverageWindow = 5;

/// Builds the stationary/transition feature from shank and back kinematics and
/// smooths it with the forward moving average y_t = (1/n) sum x_{t+i}, n = 5
/// (window truncated at the stream tail).
FeatureSignal build_feature(std::span<const SegmentState> shank,
                            std::span<const SegmentState> back,
                            FeatureForm form = FeatureForm::Product,
                            int window = kMovingAverageWindow);

/// Indices of local maxima with prominence above machine epsilon.
std::vector<std::size_t> local_peaks(std::span<const double> values);

/// Scott's-rule bin width 3.49 * sigma * n^(-1/3) over a value set.
/// Throws NumericalError when fewer than two values or zero variance.
double scott_bin_width(std::span<const double> values);

/// Classification threshold: right edge of the first histogram bin, with the
/// bin grid anchored at the smoothed feature's minimum and the width from
/// Scott's rule over the feature's local peak values.
double scott_threshold(const FeatureSignal& feature);

/// A binary (stationary/transition) span; end_idx exclusive.
struct BinarySegment {
  std::size_t start_idx = 0;
  std::size_t end_idx = 0;
  bool is_transition = false;

  std::size_t length() const { return end_idx - start_idx; }
};

struct BinarySegmentation {
  std::vector<bool> transition;         // per-sample labels
  std::vector<BinarySegment> segments;  // maximal runs, partition the range
};

/// Thresholds the feature, removes 1-2 sample islands that disagree with both
/// neighbours, and merges any residual run shorter than 3 samples into its
/// neighbour. The per-sample rule is: transition iff feature > threshold.
BinarySegmentation classify_and_correct(const FeatureSignal& feature, double threshold);

/// The island/min-length correction alone, exposed for property tests.
std::vector<bool> correct_labels(std::vector<bool> labels);

std::vector<BinarySegment> runs_to_segments(const std::vector<bool>& labels);

}  // namespace sts
