#pragma once

#include "xicrystal/partition.hpp"

#include <vector>

namespace xicrystal {

/// All partitions of exactly `boxes`, in a fixed deterministic order.
std::vector<Partition> partitions_of(int boxes);

/// All multi-partitions with the given coloring and at most `max_boxes`
/// total boxes, in a fixed deterministic order.
std::vector<MultiPartition> multipartitions_up_to(int modulus,
                                                  const std::vector<int>& coloring,
                                                  int max_boxes);

}  // namespace xicrystal
