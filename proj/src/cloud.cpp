// SPDX-FileCopyrightText: 2026 pcaac contributors
// SPDX-License-Identifier: Apache-2.0

#include "pcaac/cloud.hpp"

#include <algorithm>

#include "pcaac/errors.hpp"

namespace pcaac {

BoundingStats bounding_stats(const LabeledCloud& cloud) {
    if (cloud.empty()) {
        throw ContractError("bounding_stats: empty cloud");
    }
    BoundingStats st{};
    st.x_min = st.x_max = cloud.points[0].x;
    st.y_min = st.y_max = cloud.points[0].y;
    st.z_min = st.z_max = cloud.points[0].z;
    for (const Point3& p : cloud.points) {
        st.x_min = std::min(st.x_min, p.x);
        st.x_max = std::max(st.x_max, p.x);
        st.y_min = std::min(st.y_min, p.y);
        st.y_max = std::max(st.y_max, p.y);
        st.z_min = std::min(st.z_min, p.z);
        st.z_max = std::max(st.z_max, p.z);
    }
    // Degenerate extents floored at 1 m so planar clouds keep a finite density.
    const double dx = std::max(st.x_max - st.x_min, 1.0);
    const double dy = std::max(st.y_max - st.y_min, 1.0);
    const double dz = std::max(st.z_max - st.z_min, 1.0);
    st.density = static_cast<double>(cloud.size()) / (dx * dy * dz);
    return st;
}

}  // namespace pcaac
