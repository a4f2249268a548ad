#include "xicrystal/partition.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xicrystal {

std::string to_string(const Box& box) {
  std::ostringstream out;
  out << "(" << box.component << ";" << box.row << "," << box.col << ")";
  return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::part(int row) const {
  if (row < 1) {
    throw std::invalid_argument("row index must be >= 1");
  }
  return row <= rows() ? parts_[row - 1] : 0;
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(int row, int col) const {
  return row >= 1 && col >= 1 && col <= part(row);
}

Partition Partition::dual() const {
  std::vector<int> dual_parts;
  if (!parts_.empty()) {
    dual_parts.reserve(parts_[0]);
    for (int col = 1; col <= parts_[0]; ++col) {
      int count = 0;
      while (count < rows() && parts_[count] >= col) {
        ++count;
      }
      dual_parts.push_back(count);
    }
  }
  return Partition(std::move(dual_parts));
}

int Partition::arm(int row, int col) const { return part(row) - col; }

int Partition::leg(int row, int col) const {
  if (col < 1) {
    throw std::invalid_argument("column index must be >= 1");
  }
  int count = 0;
  for (int p : parts_) {
    if (p >= col) {
      ++count;
    } else {
      break;  // parts are weakly decreasing
    }
  }
  return count - row;
}

std::vector<std::pair<int, int>> Partition::addable_cells() const {
  std::vector<std::pair<int, int>> cells;
  for (int row = 1; row <= rows() + 1; ++row) {
    if (row == 1 || part(row - 1) > part(row)) {
      cells.emplace_back(row, part(row) + 1);
    }
  }
  return cells;
}

std::vector<std::pair<int, int>> Partition::removable_cells() const {
  std::vector<std::pair<int, int>> cells;
  for (int row = 1; row <= rows(); ++row) {
    if (part(row) > part(row + 1)) {
      cells.emplace_back(row, part(row));
    }
  }
  return cells;
}

Partition Partition::with_cell(int row, int col) const {
  if (row < 1 || col != part(row) + 1 || (row > 1 && part(row - 1) < col)) {
    throw std::invalid_argument("cell is not addable");
  }
  std::vector<int> parts = parts_;
  if (row > rows()) {
    parts.push_back(1);
  } else {
    parts[row - 1] += 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::without_cell(int row, int col) const {
  if (row < 1 || row > rows() || col != part(row) || part(row + 1) == col) {
    throw std::invalid_argument("cell is not removable");
  }
  std::vector<int> parts = parts_;
  parts[row - 1] -= 1;
  if (parts[row - 1] == 0) {
    parts.pop_back();
  }
  return Partition(std::move(parts));
}

MultiPartition::MultiPartition(int modulus, std::vector<int> coloring,
                               std::vector<Partition> components)
    : modulus_(modulus),
      coloring_(std::move(coloring)),
      components_(std::move(components)) {
  if (modulus_ < 2) {
    throw std::invalid_argument("modulus must be >= 2");
  }
  if (coloring_.empty()) {
    throw std::invalid_argument("coloring must have at least one component");
  }
  for (int p : coloring_) {
    if (p < 0 || p >= modulus_) {
      throw std::invalid_argument("coloring residue out of range");
    }
  }
  if (components_.empty()) {
    components_.resize(coloring_.size());
  }
  if (components_.size() != coloring_.size()) {
    throw std::invalid_argument("component count must match coloring length");
  }
}

int MultiPartition::coloring(int component) const {
  if (component < 1 || component > level()) {
    throw std::invalid_argument("component index out of range");
  }
  return coloring_[component - 1];
}

const Partition& MultiPartition::component(int component) const {
  if (component < 1 || component > level()) {
    throw std::invalid_argument("component index out of range");
  }
  return components_[component - 1];
}

int MultiPartition::total_boxes() const {
  int total = 0;
  for (const auto& part : components_) {
    total += part.size();
  }
  return total;
}

bool MultiPartition::contains(const Box& box) const {
  return box.component >= 1 && box.component <= level() &&
         component(box.component).contains(box.row, box.col);
}

int MultiPartition::color_of(const Box& box) const {
  int value = (coloring(box.component) - box.row + box.col) % modulus_;
  return value < 0 ? value + modulus_ : value;
}

std::vector<long> MultiPartition::content() const {
  std::vector<long> counts(modulus_, 0);
  for (int k = 1; k <= level(); ++k) {
    const Partition& part = components_[k - 1];
    for (int row = 1; row <= part.rows(); ++row) {
      for (int col = 1; col <= part.part(row); ++col) {
        counts[color_of(Box{k, row, col})] += 1;
      }
    }
  }
  return counts;
}

std::vector<Box> MultiPartition::addable_nodes() const {
  std::vector<Box> nodes;
  for (int k = 1; k <= level(); ++k) {
    for (auto [row, col] : components_[k - 1].addable_cells()) {
      nodes.push_back(Box{k, row, col});
    }
  }
  return nodes;
}

std::vector<Box> MultiPartition::removable_nodes() const {
  std::vector<Box> nodes;
  for (int k = 1; k <= level(); ++k) {
    for (auto [row, col] : components_[k - 1].removable_cells()) {
      nodes.push_back(Box{k, row, col});
    }
  }
  return nodes;
}

std::vector<Box> MultiPartition::addable_nodes(int residue) const {
  std::vector<Box> nodes;
  for (const Box& box : addable_nodes()) {
    if (color_of(box) == residue) {
      nodes.push_back(box);
    }
  }
  return nodes;
}

std::vector<Box> MultiPartition::removable_nodes(int residue) const {
  std::vector<Box> nodes;
  for (const Box& box : removable_nodes()) {
    if (color_of(box) == residue) {
      nodes.push_back(box);
    }
  }
  return nodes;
}

MultiPartition MultiPartition::with_box(const Box& box) const {
  if (box.component < 1 || box.component > level()) {
    throw std::invalid_argument("component index out of range");
  }
  std::vector<Partition> components = components_;
  components[box.component - 1] =
      components[box.component - 1].with_cell(box.row, box.col);
  return MultiPartition(modulus_, coloring_, std::move(components));
}

MultiPartition MultiPartition::without_box(const Box& box) const {
  if (box.component < 1 || box.component > level()) {
    throw std::invalid_argument("component index out of range");
  }
  std::vector<Partition> components = components_;
  components[box.component - 1] =
      components[box.component - 1].without_cell(box.row, box.col);
  return MultiPartition(modulus_, coloring_, std::move(components));
}

std::string MultiPartition::to_json() const {
  nlohmann::json doc;
  doc["n"] = modulus_;
  doc["coloring"] = coloring_;
  auto parts = nlohmann::json::array();
  for (const auto& component : components_) {
    parts.push_back(component.parts());
  }
  doc["partitions"] = parts;
  return doc.dump();
}

MultiPartition MultiPartition::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("coloring") ||
      !doc.contains("partitions")) {
    throw std::invalid_argument(
        "multi-partition JSON needs n, coloring, partitions");
  }
  int modulus = doc.at("n").get<int>();
  auto coloring = doc.at("coloring").get<std::vector<int>>();
  std::vector<Partition> components;
  for (const auto& entry : doc.at("partitions")) {
    auto parts = entry.get<std::vector<int>>();
    for (int p : parts) {
      if (p == 0) {
        throw std::invalid_argument(
            "canonical form forbids zero parts in partitions");
      }
    }
    components.emplace_back(std::move(parts));
  }
  return MultiPartition(modulus, std::move(coloring), std::move(components));
}

}  // namespace xicrystal
