#pragma once

#include <cstdint>
#include <vector>

namespace sts {

/// Two-cluster k-means on small dense point sets.
struct KMeans2Result {
  std::vector<int> assignment;            // 0/1 per point
  std::vector<std::vector<double>> centroids;  // 2 x dim
  double inertia = 0.0;
};

/// k-means with k = 2, k-means++ seeding, Lloyd iterations to assignment
/// convergence (or iteration cap), best of `restarts` deterministic restarts
/// seeded seed, seed+1, ...
KMeans2Result kmeans2(const std::vector<std::vector<double>>& points,
                      std::uint64_t seed, int restarts = 10, int max_iters = 100);

}  // namespace sts
