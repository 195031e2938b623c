#pragma once

#include <cstdint>
#include <vector>

#include "sling/types.hpp"

namespace sling {

// Sparse classification dataset. Labels are dense class ids in [0, h);
// class_values keeps the original label values in ascending order so a
// written file round-trips (class_values[labels[i]] is row i's raw label).
struct Dataset {
  SparseRowMatrix features;       // n x d
  std::vector<std::int32_t> labels;
  std::vector<double> class_values;

  std::int64_t n() const { return static_cast<std::int64_t>(features.rows); }
  std::int64_t d() const { return static_cast<std::int64_t>(features.cols); }
  std::int64_t h() const { return static_cast<std::int64_t>(class_values.size()); }

  bool operator==(const Dataset& o) const {
    return features.rows == o.features.rows && features.cols == o.features.cols &&
           features.row_start == o.features.row_start && features.idx == o.features.idx &&
           features.val == o.features.val && labels == o.labels &&
           class_values == o.class_values;
  }
};

}  // namespace sling
