#include "xicrystal/crystal.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace xicrystal {

int BracketString::open_count() const {
  int count = 0;
  for (const auto& entry : entries) {
    if (entry.open && !entry.canceled) ++count;
  }
  return count;
}

int BracketString::close_count() const {
  int count = 0;
  for (const auto& entry : entries) {
    if (!entry.open && !entry.canceled) ++count;
  }
  return count;
}

int BracketString::first_open() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].open && !entries[i].canceled) return static_cast<int>(i);
  }
  return -1;
}

int BracketString::last_close() const {
  for (std::size_t i = entries.size(); i-- > 0;) {
    if (!entries[i].open && !entries[i].canceled) return static_cast<int>(i);
  }
  return -1;
}

std::string BracketString::str() const {
  std::string out;
  for (const auto& entry : entries) {
    out += entry.canceled ? '.' : (entry.open ? '(' : ')');
  }
  return out;
}

void cancel_brackets(std::vector<BracketEntry>& entries) {
  std::vector<std::size_t> open_stack;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].open) {
      open_stack.push_back(i);
    } else if (!open_stack.empty()) {
      entries[open_stack.back()].canceled = true;
      entries[i].canceled = true;
      open_stack.pop_back();
    }
  }
}

BracketString bracket_string(const SlopeDatum& datum, const MultiPartition& mp,
                             int residue) {
  if (!datum.perturbed()) {
    throw std::invalid_argument(
        "bracket strings need a perturbed slope datum");
  }
  struct Item {
    BracketEntry entry;
    LexScalar height;
  };
  std::vector<Item> items;
  for (const Box& box : mp.addable_nodes(residue)) {
    items.push_back({BracketEntry{true, box, false}, datum.height(box)});
  }
  for (const Box& box : mp.removable_nodes(residue)) {
    items.push_back({BracketEntry{false, box, false}, datum.height(box)});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    auto order = a.height <=> b.height;
    if (order != std::strong_ordering::equal) {
      return order == std::strong_ordering::greater;
    }
    return a.entry.box < b.entry.box;
  });
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i - 1].height == items[i].height) {
      throw std::logic_error("equal heights for distinct boxes " +
                             to_string(items[i - 1].entry.box) + " and " +
                             to_string(items[i].entry.box) +
                             " in a bracket string");
    }
  }
  BracketString result;
  result.entries.reserve(items.size());
  for (auto& item : items) {
    result.entries.push_back(item.entry);
  }
  cancel_brackets(result.entries);
  return result;
}

std::optional<MultiPartition> lower(const SlopeDatum& datum,
                                    const MultiPartition& mp, int residue) {
  BracketString brackets = bracket_string(datum, mp, residue);
  int index = brackets.first_open();
  if (index < 0) return std::nullopt;
  return mp.with_box(brackets.entries[index].box);
}

std::optional<MultiPartition> raise(const SlopeDatum& datum,
                                    const MultiPartition& mp, int residue) {
  BracketString brackets = bracket_string(datum, mp, residue);
  int index = brackets.last_close();
  if (index < 0) return std::nullopt;
  return mp.without_box(brackets.entries[index].box);
}

std::vector<long> weight_content(const MultiPartition& mp) {
  return mp.content();
}

CrystalGraph::CrystalGraph(int modulus, std::vector<int> coloring,
                           int max_boxes)
    : modulus_(modulus), coloring_(std::move(coloring)), max_boxes_(max_boxes) {
  if (max_boxes_ < 0) {
    throw std::invalid_argument("max_boxes must be >= 0");
  }
}

int CrystalGraph::vertex_index(const MultiPartition& mp) const {
  auto it = index_.find(mp.to_json());
  return it == index_.end() ? -1 : it->second;
}

int CrystalGraph::edge_target(int vertex, int residue) const {
  if (vertex < 0 || vertex >= static_cast<int>(out_.size())) return -1;
  if (residue < 0 || residue >= modulus_) return -1;
  return out_[vertex][residue];
}

int CrystalGraph::add_vertex(const MultiPartition& mp) {
  std::string key = mp.to_json();
  if (index_.count(key)) {
    throw std::invalid_argument("duplicate vertex: " + key);
  }
  int id = static_cast<int>(vertices_.size());
  vertices_.push_back(mp);
  index_.emplace(std::move(key), id);
  out_.emplace_back(modulus_, -1);
  return id;
}

void CrystalGraph::add_edge(int source, int residue, int target) {
  if (source < 0 || source >= static_cast<int>(vertices_.size()) ||
      target < 0 || target >= static_cast<int>(vertices_.size()) ||
      residue < 0 || residue >= modulus_) {
    throw std::invalid_argument("edge endpoints out of range");
  }
  if (out_[source][residue] != -1) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_.push_back({source, residue, target});
  out_[source][residue] = target;
}

CrystalGraph generate(const SlopeDatum& datum, int modulus,
                      std::vector<int> coloring, int max_boxes,
                      bool allow_nonaligned) {
  if (!datum.perturbed()) {
    throw std::invalid_argument("generation needs a perturbed slope datum");
  }
  if (static_cast<int>(coloring.size()) != datum.level()) {
    throw std::invalid_argument(
        "coloring length must match the slope datum's component count");
  }
  if (!datum.aligned() && !allow_nonaligned) {
    throw std::invalid_argument(
        "slope datum is not aligned; the generated set would not be the full "
        "regular set (pass allow_nonaligned to force)");
  }
  CrystalGraph graph(modulus, coloring, max_boxes);
  graph.add_vertex(MultiPartition(modulus, std::move(coloring)));
  for (int current = 0; current < static_cast<int>(graph.vertices().size());
       ++current) {
    MultiPartition vertex = graph.vertices()[current];
    if (vertex.total_boxes() >= max_boxes) continue;
    for (int residue = 0; residue < modulus; ++residue) {
      auto next = lower(datum, vertex, residue);
      if (!next) continue;
      int target = graph.vertex_index(*next);
      if (target < 0) {
        target = graph.add_vertex(*next);
      }
      graph.add_edge(current, residue, target);
    }
  }
  return graph;
}

std::optional<IsoMismatch> parallel_iso_check(const CrystalGraph& lhs,
                                              const CrystalGraph& rhs) {
  if (lhs.modulus() != rhs.modulus() || lhs.coloring() != rhs.coloring() ||
      lhs.max_boxes() != rhs.max_boxes()) {
    throw std::invalid_argument(
        "graphs must share modulus, coloring and max_boxes");
  }
  const int unmatched = -1;
  std::vector<int> to_rhs(lhs.vertices().size(), unmatched);
  std::vector<int> to_lhs(rhs.vertices().size(), unmatched);
  std::vector<std::vector<int>> words(lhs.vertices().size());

  if (lhs.vertices().empty() || rhs.vertices().empty()) {
    throw std::invalid_argument("graphs must contain their root vertex");
  }
  to_rhs[0] = 0;
  to_lhs[0] = 0;
  std::deque<int> queue{0};
  std::size_t matched = 1;
  while (!queue.empty()) {
    int left = queue.front();
    queue.pop_front();
    int right = to_rhs[left];
    if (lhs.vertices()[left].total_boxes() >= lhs.max_boxes()) {
      continue;  // frontier vertices are exempt from out-edge comparison
    }
    for (int residue = 0; residue < lhs.modulus(); ++residue) {
      int left_target = lhs.edge_target(left, residue);
      int right_target = rhs.edge_target(right, residue);
      if (left_target < 0 && right_target < 0) continue;
      std::vector<int> word = words[left];
      word.push_back(residue);
      if ((left_target < 0) != (right_target < 0)) {
        return IsoMismatch{std::move(word), residue,
                           left_target < 0
                               ? "edge only in the second graph"
                               : "edge only in the first graph"};
      }
      if (to_rhs[left_target] == unmatched &&
          to_lhs[right_target] == unmatched) {
        to_rhs[left_target] = right_target;
        to_lhs[right_target] = left_target;
        words[left_target] = word;
        queue.push_back(left_target);
        ++matched;
      } else if (to_rhs[left_target] != right_target) {
        return IsoMismatch{std::move(word), residue,
                           "vertices pair inconsistently"};
      }
    }
  }
  if (matched != lhs.vertices().size() || matched != rhs.vertices().size()) {
    return IsoMismatch{{}, -1, "vertex counts differ"};
  }
  return std::nullopt;
}

std::map<std::vector<long>, long> weight_multiplicities(
    const CrystalGraph& graph) {
  std::map<std::vector<long>, long> counts;
  for (const auto& vertex : graph.vertices()) {
    counts[vertex.content()] += 1;
  }
  return counts;
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const CrystalGraph& graph) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t i = 0; i < graph.vertices().size(); ++i) {
    out << "  v" << i << " [label=\""
        << dot_escape(graph.vertices()[i].to_json()) << "\"];\n";
  }
  for (const auto& edge : graph.edges()) {
    out << "  v" << edge[0] << " -> v" << edge[2] << " [label=\"" << edge[1]
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CrystalGraph& graph) {
  nlohmann::json doc;
  doc["n"] = graph.modulus();
  doc["coloring"] = graph.coloring();
  doc["max_boxes"] = graph.max_boxes();
  auto vertices = nlohmann::json::array();
  for (const auto& vertex : graph.vertices()) {
    vertices.push_back(nlohmann::json::parse(vertex.to_json()));
  }
  doc["vertices"] = vertices;
  auto edges = nlohmann::json::array();
  for (const auto& edge : graph.edges()) {
    edges.push_back({edge[0], edge[1], edge[2]});
  }
  doc["edges"] = edges;
  return doc.dump();
}

CrystalGraph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("coloring") ||
      !doc.contains("max_boxes") || !doc.contains("vertices") ||
      !doc.contains("edges")) {
    throw std::invalid_argument(
        "graph JSON needs n, coloring, max_boxes, vertices, edges");
  }
  CrystalGraph graph(doc.at("n").get<int>(),
                     doc.at("coloring").get<std::vector<int>>(),
                     doc.at("max_boxes").get<int>());
  for (const auto& vertex : doc.at("vertices")) {
    graph.add_vertex(MultiPartition::from_json(vertex.dump()));
  }
  for (const auto& edge : doc.at("edges")) {
    if (!edge.is_array() || edge.size() != 3) {
      throw std::invalid_argument("graph edges must be [source,residue,target]");
    }
    graph.add_edge(edge[0].get<int>(), edge[1].get<int>(), edge[2].get<int>());
  }
  return graph;
}

}  // namespace xicrystal
