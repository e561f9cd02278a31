#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dispset/error.hpp"
#include "dispset/leaf_set.hpp"

namespace dispset {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& arc);

// Classification by degree. `Other` only occurs in networks that fail
// validation (non-binary vertices, isolated internal vertices, ...).
enum class VertexKind { Root, Tree, Reticulation, Leaf, Other };

std::string_view to_string(VertexKind kind);

namespace detail {
class WorkGraph;
}

// A rooted leaf-labelled directed graph. Values are immutable once built;
// every operation that changes the graph returns a fresh network whose ids
// are contiguous again. `origin(v)` keeps the id `v` had in the network the
// chain of operations started from, so traces can name original vertices.
//
// A Network can hold graphs that violate the phylogenetic axioms (parsers
// need to represent them before rejecting them); `validate` reports why.
class Network {
 public:
  Network() = default;

  // Arcs may be given in any order; they are sorted by (tail, head).
  // Throws std::invalid_argument when an id is out of range.
  static Network from_arcs(std::size_t vertex_count, std::vector<Arc> arcs,
                           const std::vector<std::pair<VertexId, std::string>>& labels);

  static Network single_leaf(std::string label);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const VertexId> children(VertexId v) const;
  std::span<const VertexId> parents(VertexId v) const;
  std::size_t out_degree(VertexId v) const { return children(v).size(); }
  std::size_t in_degree(VertexId v) const { return parents(v).size(); }
  bool has_arc(Arc arc) const;

  VertexKind kind(VertexId v) const;
  bool is_leaf(VertexId v) const { return kind(v) == VertexKind::Leaf; }
  bool is_tree_vertex(VertexId v) const { return kind(v) == VertexKind::Tree; }
  bool is_reticulation(VertexId v) const { return kind(v) == VertexKind::Reticulation; }

  // The smallest in-degree-0 vertex, or kNoVertex if there is none.
  VertexId root() const noexcept { return root_; }

  bool has_label(VertexId v) const { return !labels_.at(v).empty(); }
  // Empty for unlabelled vertices.
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> leaf(std::string_view label) const;

  // Labelled vertices ordered by label.
  std::span<const VertexId> leaves() const noexcept { return leaves_; }
  // Position of a labelled vertex within `leaves()`.
  std::size_t leaf_rank(VertexId v) const { return leaf_rank_.at(v); }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  LeafSet leaf_set() const;

  std::size_t reticulation_count() const;
  std::vector<VertexId> reticulations() const;

  VertexId origin(VertexId v) const { return origin_.at(v); }
  Arc origin(Arc arc) const { return {origin(arc.tail), origin(arc.head)}; }

  // Structural equality: ids, arcs and labels. Origins are ignored.
  friend bool operator==(const Network& lhs, const Network& rhs);

 private:
  friend class detail::WorkGraph;

  // `arcs` must already be sorted. `leaves_in_order`, when non-empty, lists
  // the labelled vertices sorted by label.
  static Network assemble(std::vector<Arc> arcs, std::vector<std::string> labels,
                          std::vector<VertexId> origin, std::vector<VertexId> leaves_in_order);

  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<VertexId> child_list_;
  std::vector<std::uint32_t> parent_offset_;
  std::vector<VertexId> parent_list_;
  std::vector<std::string> labels_;
  std::vector<VertexId> leaves_;
  std::vector<std::uint32_t> leaf_rank_;
  std::vector<VertexId> origin_;
  VertexId root_ = kNoVertex;
};

struct Violation {
  std::string rule;
  std::optional<VertexId> vertex;
  std::optional<Arc> arc;

  std::string to_string() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Checks acyclicity, absence of parallel arcs, the root/leaf/internal
// degree rules and the leaf labelling. Violations are data, never thrown.
ValidationReport validate(const Network& net);

// Throws ValidationError when `validate` reports a violation.
void require_valid(const Network& net);

// Removes leaf `label` and its arc, suppresses in-1/out-1 vertices and drops
// the root if it is left with a single child.
Network delete_leaf(const Network& net, std::string_view label);

// Removes a reticulation arc, then suppresses and drops the root as above.
Network delete_arc(const Network& net, Arc arc);

// Removes several reticulation arcs at once (ids refer to `net`).
Network delete_arcs(const Network& net, std::span<const Arc> arcs);

// Repeatedly deletes the trivial shortcut with the smallest (tail, head)
// until none is left. `removed`, if given, receives the deleted arcs in
// origin ids. Throws NotTreeChild.
Network remove_trivial_shortcuts(const Network& net, std::vector<Arc>* removed = nullptr);

}  // namespace dispset
