#include "xicrystal/enumerate.hpp"

#include <stdexcept>

namespace xicrystal {

namespace {

void extend(std::vector<int>& parts, int remaining, int max_part,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  for (int next = std::min(remaining, max_part); next >= 1; --next) {
    parts.push_back(next);
    extend(parts, remaining - next, next, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int boxes) {
  if (boxes < 0) {
    throw std::invalid_argument("box count must be >= 0");
  }
  std::vector<Partition> result;
  std::vector<int> parts;
  extend(parts, boxes, boxes, result);
  return result;
}

std::vector<MultiPartition> multipartitions_up_to(
    int modulus, const std::vector<int>& coloring, int max_boxes) {
  std::vector<std::vector<Partition>> by_size(max_boxes + 1);
  for (int boxes = 0; boxes <= max_boxes; ++boxes) {
    by_size[boxes] = partitions_of(boxes);
  }

  std::vector<MultiPartition> result;
  std::vector<Partition> components(coloring.size());
  auto fill = [&](auto&& self, std::size_t index, int budget) -> void {
    if (index == coloring.size()) {
      result.emplace_back(modulus, coloring, components);
      return;
    }
    for (int boxes = 0; boxes <= budget; ++boxes) {
      for (const Partition& part : by_size[boxes]) {
        components[index] = part;
        self(self, index + 1, budget - boxes);
      }
    }
  };
  fill(fill, 0, max_boxes);
  return result;
}

}  // namespace xicrystal
