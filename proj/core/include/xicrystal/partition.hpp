#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace xicrystal {

/// A box position (component; row, column), all 1-based. Positions outside
/// any diagram are legal values; membership is a property of a particular
/// multi-partition.
struct Box {
  int component = 1;
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& box);

/// Weakly decreasing sequence of positive parts; trailing zeros are never
/// stored, so the empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are weakly decreasing and > 0.
  explicit Partition(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }
  /// The part at a 1-based row; 0 past the last row.
  int part(int row) const;
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool contains(int row, int col) const;

  Partition dual() const;

  /// part(row) - col. The cell need not lie in the partition and the value
  /// may be negative.
  int arm(int row, int col) const;
  /// dual().part(col) - row, computed without building the dual.
  int leg(int row, int col) const;

  /// Cells whose addition (resp. removal) leaves a partition.
  std::vector<std::pair<int, int>> addable_cells() const;
  std::vector<std::pair<int, int>> removable_cells() const;

  /// Throw std::invalid_argument when the cell is not addable / removable.
  Partition with_cell(int row, int col) const;
  Partition without_cell(int row, int col) const;

  const std::vector<int>& parts() const { return parts_; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// ℓ partitions with a residue p(k) in Z/n attached to each component. The
/// component count and coloring are fixed at construction.
class MultiPartition {
 public:
  /// Components default to all-empty. Throws std::invalid_argument when
  /// modulus < 2, the coloring is empty, a residue is out of range, or the
  /// component count does not match the coloring.
  MultiPartition(int modulus, std::vector<int> coloring,
                 std::vector<Partition> components = {});

  int modulus() const { return modulus_; }
  int level() const { return static_cast<int>(coloring_.size()); }
  /// p(k) for a 1-based component index.
  int coloring(int component) const;
  const std::vector<int>& coloring() const { return coloring_; }
  const Partition& component(int component) const;
  const std::vector<Partition>& components() const { return components_; }

  int total_boxes() const;
  bool empty() const { return total_boxes() == 0; }
  bool contains(const Box& box) const;

  /// (p(k) - row + col) mod n, reduced to [0, n).
  int color_of(const Box& box) const;
  /// Box counts per color, indexed by residue.
  std::vector<long> content() const;

  /// Addable / removable nodes over all components, in (component, row)
  /// order; the residue overloads filter by color.
  std::vector<Box> addable_nodes() const;
  std::vector<Box> removable_nodes() const;
  std::vector<Box> addable_nodes(int residue) const;
  std::vector<Box> removable_nodes(int residue) const;

  MultiPartition with_box(const Box& box) const;
  MultiPartition without_box(const Box& box) const;

  /// Canonical encoding {"coloring":[...],"n":...,"partitions":[[...],...]};
  /// decoding rejects trailing zeros and non-decreasing part lists.
  std::string to_json() const;
  static MultiPartition from_json(const std::string& text);

  friend auto operator<=>(const MultiPartition&, const MultiPartition&) =
      default;

 private:
  int modulus_;
  std::vector<int> coloring_;
  std::vector<Partition> components_;
};

}  // namespace xicrystal
