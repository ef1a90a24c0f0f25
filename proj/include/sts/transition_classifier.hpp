#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sts/segmenter.hpp"
#include "sts/types.hpp"

namespace sts {

/// Classifier-2 features for one transition segment.
struct TransitionFeatures {
  double slope_omega_s = 0.0;  // OLS slope of omega_S vs sample index
  double slope_omega_b = 0.0;
  double delta_theta_s = 0.0;  // theta_S last - first
  double delta_theta_b = 0.0;

  std::array<double, 4> as_array() const {
    return {slope_omega_s, slope_omega_b, delta_theta_s, delta_theta_b};
  }
};

/// Regression/delta features over one segment span (length >= 3 samples).
TransitionFeatures extract_features(const BinarySegment& segment,
                                    std::span<const SegmentState> shank,
                                    std::span<const SegmentState> back);

struct TransitionClustering {
  std::vector<int> assignment;                 // cluster id per segment
  std::array<TransitionFeatures, 2> centroids; // raw-feature-space centroids
};

/// 2-means over z-scored features; k-means++ init, 10 deterministic restarts.
/// Needs at least two transition segments.
TransitionClustering cluster_transitions(std::span<const TransitionFeatures> features,
                                         std::uint64_t seed);

/// Maps cluster id -> transition label. The cluster whose centroid has the
/// more negative delta_theta_b is SitToStand (the back straightens when
/// rising); exact ties fall back to the slope_omega_b sign.
std::array<StateLabel, 2> assign_cluster_labels(const TransitionClustering& clusters);

struct LabeledSegmentation {
  std::vector<StateSegment> segments;
  std::vector<StateLabel> labels;  // per sample
  std::vector<std::string> warnings;
};

/// Propagates Sit/Stand to stationary segments: a span after SitToStand is
/// Stand, after StandToSit is Sit; a leading stationary span takes the start
/// state of the first transition.
LabeledSegmentation label_stationary(const std::vector<BinarySegment>& segments,
                                     const std::vector<StateLabel>& transition_labels,
                                     double sample_rate_hz);

/// Full classifier-2 pass over a binary segmentation.
LabeledSegmentation classify_transitions(const BinarySegmentation& segmentation,
                                         std::span<const SegmentState> shank,
                                         std::span<const SegmentState> back,
                                         double sample_rate_hz, std::uint64_t seed);

}  // namespace sts
