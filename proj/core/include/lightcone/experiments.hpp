#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lightcone/graph.hpp"
#include "lightcone/mesh.hpp"

namespace lightcone {

// Per-radius curvature infima over nested disks; the running minimum makes
// inf_K non-increasing by construction.
struct ScanReport {
  std::vector<double> radii;
  std::vector<double> inf_gauss;
  double mean_h{0};
  double stddev_h{0};
  bool diverging{false};
};

// Radii must be strictly increasing.  The verdict flips to diverging when
// inf_K drops by a factor >= 10 between consecutive radii (a desk-scale
// stand-in for unboundedness; it exhibits divergence, it cannot prove it).
ScanReport scan_bernstein(const GraphFunction& tau, std::vector<double> radii,
                          int resolution = 81);

struct DistributionReport {
  int samples{0};
  double min{0}, max{0};
  std::array<double, 9> deciles{};
  bool all_zero{false};
};

// Gaussian curvature K = -|S(g)/g_z^2|^2 of the ZMC surface of g, sampled
// over the region.
DistributionReport value_distribution(const ExprPtr& g, const Grid& region);

struct ProjectionReport {
  std::size_t samples{0};
  std::size_t duplicate_rays{0};   // pairs closer than 1e-9
  int bins_hit{0};
  int bins_total{0};
  std::optional<bool> attains_puncture;
  bool injective{false};
  // surjective iff coverage >= 99% of the bins and the section attains the
  // ray (0,0,1); non-surjective when the puncture is provably not attained.
  std::string verdict;
};

ProjectionReport projection_check(const GraphFunction& tau, const Grid& grid,
                                  std::optional<bool> attains_puncture,
                                  int bins_per_axis = 20);

}  // namespace lightcone
