#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dispset/analysis.hpp"
#include "dispset/network.hpp"

namespace dispset {

// Why the local structure of the second network rules out equal display
// sets. Each code corresponds to one necessary condition checked below.
enum class NoMatchReason {
  NotCherry,                // {a,b} is a cherry of N but not of N'
  NotReticulatedCherry,     // a's parent in N' is not a parent of b's parent
  ReticulationArcShortcut,  // an arc into b's reticulation parent in N' is a shortcut
  VisibilityMismatch,       // V of the other parent differs from V_q
  ClusterMismatch,          // C of the other parent differs from C_q
  NoCommonParent,           // in N, p_a and q do not share a parent
  SiblingNotReticulation,   // in N', the sibling of b is not a reticulation
  ParentNotTreeVertex,      // in N', the parent of b's parent is not a tree vertex
  SameReticulation,         // in N', both reticulation children coincide
  NotShortcut,              // in N', (u'_1, v'_1) is not a shortcut
  MissingArcToParent,       // in N', (u'_1, q') is not an arc
  SetPairMismatch,          // {V_v'1, V_v'2} / {C_v'1, C_v'2} differ from {{a}, V_q} / {{a}, C_q - b}
  SecondNotShortcut,        // in N', (u'_2, v'_2) is not a shortcut
  MissingUpperArc,          // in N', (u'_2, u'_1) is not an arc
};

std::string_view to_string(NoMatchReason reason);
std::string_view describe(NoMatchReason reason);

// Vertex fields name vertices of the second network.
struct CherryMatch {
  friend bool operator==(const CherryMatch&, const CherryMatch&) = default;
};

struct RetCherryMatch {
  VertexId p_a = kNoVertex;
  VertexId p_b = kNoVertex;
  VertexId q2 = kNoVertex;
  friend bool operator==(const RetCherryMatch&, const RetCherryMatch&) = default;
};

// b's parent p_b is a tree vertex whose other child v1 is a reticulation
// with second parent u1; q is p_b's parent and v2 q's other child.
// `a_below_v1` says which of v1/v2 has cluster {a}.
struct TreeParentMatchA {
  VertexId p_b = kNoVertex;
  VertexId q = kNoVertex;
  VertexId v1 = kNoVertex;
  VertexId v2 = kNoVertex;
  VertexId u1 = kNoVertex;
  bool a_below_v1 = true;
  friend bool operator==(const TreeParentMatchA&, const TreeParentMatchA&) = default;
};

// As A, with v2 a reticulation whose other parent u2 is the parent of u1.
struct TreeParentMatchB {
  VertexId p_b = kNoVertex;
  VertexId q = kNoVertex;
  VertexId v1 = kNoVertex;
  VertexId v2 = kNoVertex;
  VertexId u1 = kNoVertex;
  VertexId u2 = kNoVertex;
  bool a_below_v1 = true;
  friend bool operator==(const TreeParentMatchB&, const TreeParentMatchB&) = default;
};

struct NoMatch {
  NoMatchReason reason;
  friend bool operator==(const NoMatch&, const NoMatch&) = default;
};

using MatchResult =
    std::variant<CherryMatch, RetCherryMatch, TreeParentMatchA, TreeParentMatchB, NoMatch>;

std::string to_string(const MatchResult& match);
inline bool is_match(const MatchResult& m) { return !std::holds_alternative<NoMatch>(m); }

enum class StepCase {
  Cherry,              // {a,b} is a cherry of N
  ReticulationParent,  // reticulated cherry; b's parent in N' is a reticulation
  TreeParent,          // reticulated cherry; b's parent in N' is not a reticulation
};

std::string_view to_string(StepCase step);

// One loop iteration. Vertex ids are origin ids: of the first input for
// `cherry` and `deleted_left`, of the second input for `match` and
// `deleted_right`.
struct IterationRecord {
  std::size_t index = 0;
  CherryShape cherry;
  StepCase step = StepCase::Cherry;
  MatchResult match;
  std::optional<std::string> deleted_leaf;
  std::vector<Arc> deleted_left;
  std::vector<Arc> deleted_right;
};

struct Decision {
  bool equivalent = false;
  // Trivial shortcuts removed from the second network before the loop.
  std::vector<Arc> removed_shortcuts;
  std::vector<IterationRecord> trace;
  std::string reason;
};

using StepObserver =
    std::function<void(const IterationRecord&, const Network& left, const Network& right)>;

struct SameDisplaySetOptions {
  // Called after every reduction with the reduced pair.
  StepObserver on_step;
};

// Whether {a,b} is also a cherry of `second`.
MatchResult match_cherry_case(const Network& first, const Network& second, const Cherry& cherry);

// b's parent in `second` is a reticulation: {a,b} must be a reticulated
// cherry there too, neither arc into b's parent a shortcut, and the other
// parent q'_2 must have V and C equal to V_q and C_q in `first`.
MatchResult match_reticulation_parent_case(const Network& first, const Network& second,
                                           const ReticulatedCherry& cherry);

// b's parent in `second` is a tree vertex (or the root). Checks, in order:
// p_a and q share a parent in `first`; then in `second` the sibling v'_1 of
// b is a reticulation, the grandparent q' is a tree vertex with other child
// v'_2 != v'_1, the second parent u'_1 of v'_1 makes (u'_1,v'_1) a shortcut
// and (u'_1,q') an arc, and {V_v'1,V_v'2} = {{a},V_q},
// {C_v'1,C_v'2} = {{a},C_q-b}. If v'_2 is a reticulation its second parent
// u'_2 must make (u'_2,v'_2) a shortcut and (u'_2,u'_1) an arc.
MatchResult match_tree_parent_case(const Network& first, const Network& second,
                                   const ReticulatedCherry& cherry);

// Applies the deletions licensed by a successful match. Throws
// std::logic_error for NoMatch or a match that does not fit the shape.
std::pair<Network, Network> recurse_step(const Network& first, const Network& second,
                                         const CherryShape& cherry, const MatchResult& match);

// Decides whether the normal network `first` and the tree-child network
// `second` display the same trees, in time quadratic in the leaf count.
// Throws ValidationError, Error{LeafSetMismatch}, Error{NotNormal} (first)
// and Error{NotTreeChild} (second).
Decision same_display_set(const Network& first, const Network& second,
                          const SameDisplaySetOptions& options = {});

// Greedily deletes leaves from both networks while `still_failing` holds and
// the pair stays normal / tree-child. Used to shrink disagreement reports.
std::pair<Network, Network> shrink_pair(
    Network first, Network second,
    const std::function<bool(const Network&, const Network&)>& still_failing);

}  // namespace dispset
