#include "lightcone/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lightcone/cmc.hpp"

namespace lightcone {

ScanReport scan_bernstein(const GraphFunction& tau, std::vector<double> radii,
                          int resolution) {
  if (radii.empty()) {
    raise(Errc::InvalidArgument, "scan needs at least one radius");
  }
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (!(radii[k] > radii[k - 1])) {
      raise(Errc::InvalidArgument, "radii must be strictly increasing");
    }
  }

  ScanReport report;
  report.radii = radii;
  double running_inf = std::numeric_limits<double>::infinity();
  std::vector<double> h_samples;

  for (double radius : radii) {
    const Grid grid{-radius, radius, -radius, radius, resolution, resolution};
    for (int j = 0; j < grid.nv; ++j) {
      for (int i = 0; i < grid.nu; ++i) {
        const double u = grid.u(i), v = grid.v(j);
        if (u * u + v * v > radius * radius + 1e-12) continue;
        const CurvatureData c = curvature_data(tau, u, v);
        running_inf = std::min(running_inf, c.gauss);
        h_samples.push_back(c.mean);
      }
    }
    report.inf_gauss.push_back(running_inf);
  }

  const double n = static_cast<double>(h_samples.size());
  report.mean_h = 0.0;
  for (double h : h_samples) report.mean_h += h;
  report.mean_h /= n;
  double var = 0.0;
  for (double h : h_samples) var += (h - report.mean_h) * (h - report.mean_h);
  report.stddev_h = std::sqrt(var / n);

  for (std::size_t k = 1; k < report.inf_gauss.size(); ++k) {
    const double prev = report.inf_gauss[k - 1], next = report.inf_gauss[k];
    if (next < -1e-9 && next <= 10.0 * prev) {
      report.diverging = true;
    }
  }
  return report;
}

DistributionReport value_distribution(const ExprPtr& g, const Grid& region) {
  std::vector<double> ks;
  ks.reserve(static_cast<std::size_t>(region.points()));
  for (int j = 0; j < region.nv; ++j) {
    for (int i = 0; i < region.nu; ++i) {
      ks.push_back(zmc_curvature_via_schwarzian(g, {region.u(i), region.v(j)}));
    }
  }
  std::sort(ks.begin(), ks.end());

  DistributionReport report;
  report.samples = static_cast<int>(ks.size());
  report.min = ks.front();
  report.max = ks.back();
  for (int d = 1; d <= 9; ++d) {
    const std::size_t at = std::min(
        ks.size() - 1, static_cast<std::size_t>(d * ks.size() / 10));
    report.deciles[static_cast<std::size_t>(d - 1)] = ks[at];
  }
  report.all_zero = std::abs(report.min) < 1e-15 && std::abs(report.max) < 1e-15;
  return report;
}

ProjectionReport projection_check(const GraphFunction& tau, const Grid& grid,
                                  std::optional<bool> attains_puncture,
                                  int bins_per_axis) {
  ProjectionReport report;
  report.attains_puncture = attains_puncture;
  report.bins_total = bins_per_axis * bins_per_axis;

  std::vector<IdealRay> rays;
  rays.reserve(static_cast<std::size_t>(grid.points()));
  std::vector<char> hit(static_cast<std::size_t>(report.bins_total), 0);
  const auto visit = [&](double u, double v) {
    if (!tau.contains(u, v)) return;
    const IdealRay ray = ideal_projection(phi({u, v, tau.value(u, v)}));
    rays.push_back(ray);
    const double theta = std::acos(std::clamp(ray.d3, -1.0, 1.0));
    const double phi_angle = std::atan2(ray.d2, ray.d1);
    const int it = std::min(bins_per_axis - 1,
                            static_cast<int>(theta / M_PI * bins_per_axis));
    const int ip = std::min(
        bins_per_axis - 1,
        static_cast<int>((phi_angle + M_PI) / (2.0 * M_PI) * bins_per_axis));
    hit[static_cast<std::size_t>(it * bins_per_axis + ip)] = 1;
  };

  for (int j = 0; j < grid.nv; ++j) {
    for (int i = 0; i < grid.nu; ++i) {
      visit(grid.u(i), grid.v(j));
    }
  }

  // The ray map compresses both r -> 0 and r -> infinity into polar caps, so
  // a uniform planar grid cannot reach every bin; a log-spaced polar sweep
  // samples the same surface adaptively.
  const double r_max = std::max(
      {std::abs(grid.umin), std::abs(grid.umax), std::abs(grid.vmin),
       std::abs(grid.vmax)});
  const int n_ang = 4 * bins_per_axis, n_rad = 4 * bins_per_axis;
  for (int a = 0; a < n_ang; ++a) {
    const double angle = 2.0 * M_PI * (a + 0.5) / n_ang;
    for (int k = 0; k < n_rad; ++k) {
      const double w = static_cast<double>(k) / (n_rad - 1);
      const double radius = std::pow(r_max, 2.0 * w - 1.0);
      visit(radius * std::cos(angle), radius * std::sin(angle));
    }
  }

  report.samples = rays.size();
  report.bins_hit = static_cast<int>(std::count(hit.begin(), hit.end(), 1));

  // Duplicate detection: sort on the first component, compare within the
  // 1e-9 window.
  std::sort(rays.begin(), rays.end(),
            [](const IdealRay& l, const IdealRay& r) { return l.d1 < r.d1; });
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t k = i + 1;
         k < rays.size() && rays[k].d1 - rays[i].d1 <= 1e-9; ++k) {
      if (distance(rays[i], rays[k]) <= 1e-9) {
        ++report.duplicate_rays;
      }
    }
  }
  report.injective = report.duplicate_rays == 0;

  const bool covered =
      report.bins_hit * 100 >= report.bins_total * 99;
  if (attains_puncture.has_value()) {
    if (*attains_puncture && covered) {
      report.verdict = "surjective";
    } else if (!*attains_puncture) {
      report.verdict = "non-surjective";
    } else {
      report.verdict = "coverage-incomplete";
    }
  } else {
    report.verdict = covered ? "coverage-only" : "coverage-incomplete";
  }
  return report;
}

}  // namespace lightcone
