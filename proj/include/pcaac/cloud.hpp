// SPDX-FileCopyrightText: 2026 pcaac contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PCAAC_CLOUD_HPP
#define PCAAC_CLOUD_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace pcaac {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

/// Ground-truth class of a point. The three noise variants collapse to a
/// single binary "noise" class for metric computation.
enum class NoiseLabel : std::uint8_t {
    Signal = 0,
    IsolatedOutlier = 1,
    ClusteredNoise = 2,
    NearSignalNoise = 3,
};

inline bool is_noise(NoiseLabel l) { return l != NoiseLabel::Signal; }

/// Binary prediction emitted by every filter: 0 = keep (signal), 1 = remove.
enum class Prediction : std::uint8_t {
    Signal = 0,
    Noise = 1,
};

/// A point cloud with optional ground-truth and predicted labels. Label
/// sequences, when present, always have one entry per point, in point order.
struct LabeledCloud {
    std::vector<Point3> points;
    std::optional<std::vector<NoiseLabel>> truth;
    std::optional<std::vector<Prediction>> predicted;
    Point3 sensor_origin{0.0, 0.0, 0.0};

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

struct BoundingStats {
    double x_min, x_max;
    double y_min, y_max;
    double z_min, z_max;
    double density;  // points per cubic meter
};

/// Axis ranges plus density m / (dx*dy*dz). Degenerate axis extents are
/// floored at 1 m for the volume product. Errors on an empty cloud.
BoundingStats bounding_stats(const LabeledCloud& cloud);

}  // namespace pcaac

#endif
