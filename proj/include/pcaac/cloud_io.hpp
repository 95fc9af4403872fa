// SPDX-FileCopyrightText: 2026 pcaac contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PCAAC_CLOUD_IO_HPP
#define PCAAC_CLOUD_IO_HPP

#include <string>
#include <vector>

#include "pcaac/cloud.hpp"

namespace pcaac {

/// Which label column save_xyz / save_ply should emit.
enum class LabelColumn {
    None,
    Truth,      // codes 0..3
    Predicted,  // codes 0/1
};

/// XYZ text format: one point per line, "x y z [label]", whitespace
/// separated, '#' comment lines ignored. A label column, when present,
/// must appear on every data line.
LabeledCloud load_xyz(const std::string& path);
void save_xyz(const LabeledCloud& cloud, const std::string& path,
              LabelColumn labels = LabelColumn::None);

/// ASCII PLY 1.0 with float x/y/z vertex properties and an optional uchar
/// "label" property. Binary PLY is rejected.
LabeledCloud load_ply(const std::string& path);
void save_ply(const LabeledCloud& cloud, const std::string& path,
              LabelColumn labels = LabelColumn::None);

/// Prediction sidecar: one 0/1 code per line, aligned with the cloud the
/// predictions were computed on. '#' comment lines ignored.
std::vector<Prediction> load_predictions(const std::string& path);
void save_predictions(const std::vector<Prediction>& predicted,
                      const std::string& path);

/// Writes `content` to `path` via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace pcaac

#endif
