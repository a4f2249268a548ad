#pragma once

#include "xicrystal/partition.hpp"
#include "xicrystal/slope.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace xicrystal {

struct BracketEntry {
  bool open = false;  // true: "(" from an addable node, false: ")" removable
  Box box;
  bool canceled = false;
};

/// Brackets for one residue, in strictly decreasing height from left to
/// right, with adjacent "()" pairs canceled to a fixed point.
struct BracketString {
  std::vector<BracketEntry> entries;

  int open_count() const;   // uncanceled "(" — the φ statistic
  int close_count() const;  // uncanceled ")" — the ε statistic
  int first_open() const;   // leftmost uncanceled "(" index, -1 when none
  int last_close() const;   // rightmost uncanceled ")" index, -1 when none

  std::string str() const;  // e.g. "(())(" with canceled brackets as '.'
};

/// Marks canceled entries in place: each ")" cancels the nearest uncanceled
/// "(" to its left, which realizes repeated removal of adjacent "()" pairs.
void cancel_brackets(std::vector<BracketEntry>& entries);

/// Requires a perturbed datum (total box order). Throws std::logic_error on
/// an impossible tie.
BracketString bracket_string(const SlopeDatum& datum, const MultiPartition& mp,
                             int residue);

/// f: adds the box of the first uncanceled "(" from the left, or nullopt.
std::optional<MultiPartition> lower(const SlopeDatum& datum,
                                    const MultiPartition& mp, int residue);
/// e: removes the box of the first uncanceled ")" from the right, or nullopt.
std::optional<MultiPartition> raise(const SlopeDatum& datum,
                                    const MultiPartition& mp, int residue);

/// The content vector; vertices share a weight space iff these are equal.
std::vector<long> weight_content(const MultiPartition& mp);

/// Vertices and f-edges reachable from the empty multi-partition, truncated
/// by total box count. Vertex 0 is the root; discovery order is breadth-first
/// with residues ascending, so the graph is deterministic.
class CrystalGraph {
 public:
  CrystalGraph(int modulus, std::vector<int> coloring, int max_boxes);

  int modulus() const { return modulus_; }
  const std::vector<int>& coloring() const { return coloring_; }
  int max_boxes() const { return max_boxes_; }

  const std::vector<MultiPartition>& vertices() const { return vertices_; }
  /// Edges {source, residue, target} in discovery order.
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }

  int vertex_index(const MultiPartition& mp) const;  // -1 when absent
  int edge_target(int vertex, int residue) const;    // -1 when absent

  /// Appends a vertex (must be new) and returns its index.
  int add_vertex(const MultiPartition& mp);
  void add_edge(int source, int residue, int target);

 private:
  int modulus_;
  std::vector<int> coloring_;
  int max_boxes_;
  std::vector<MultiPartition> vertices_;
  std::vector<std::array<int, 3>> edges_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> out_;  // out_[v][residue] = target or -1
};

/// Breadth-first closure of the empty multi-partition under the lowering
/// operators. Requires a perturbed datum and, unless allow_nonaligned is set,
/// an aligned one; violations throw std::invalid_argument.
CrystalGraph generate(const SlopeDatum& datum, int modulus,
                      std::vector<int> coloring, int max_boxes,
                      bool allow_nonaligned = false);

struct IsoMismatch {
  std::vector<int> word;  // residues of the f-word from the root
  int residue = -1;       // residue whose edge disagrees, -1 for a pairing clash
  std::string detail;
};

/// Simultaneous breadth-first traversal matching f-edges by residue.
/// Frontier vertices (total boxes == max_boxes) are exempt from out-edge
/// comparison. Requires both graphs built with identical (modulus, coloring,
/// max_boxes); returns nullopt when the rooted edge-labeled graphs agree.
std::optional<IsoMismatch> parallel_iso_check(const CrystalGraph& lhs,
                                              const CrystalGraph& rhs);

std::map<std::vector<long>, long> weight_multiplicities(
    const CrystalGraph& graph);

std::string export_dot(const CrystalGraph& graph);
std::string export_json(const CrystalGraph& graph);
CrystalGraph graph_from_json(const std::string& text);

}  // namespace xicrystal
