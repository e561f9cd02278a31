#include "dispset/equivalence.hpp"

#include <stdexcept>

namespace dispset {

std::string_view to_string(NoMatchReason reason) {
  switch (reason) {
    case NoMatchReason::NotCherry: return "not-cherry";
    case NoMatchReason::NotReticulatedCherry: return "not-reticulated-cherry";
    case NoMatchReason::ReticulationArcShortcut: return "reticulation-arc-shortcut";
    case NoMatchReason::VisibilityMismatch: return "visibility-mismatch";
    case NoMatchReason::ClusterMismatch: return "cluster-mismatch";
    case NoMatchReason::NoCommonParent: return "no-common-parent";
    case NoMatchReason::SiblingNotReticulation: return "sibling-not-reticulation";
    case NoMatchReason::ParentNotTreeVertex: return "parent-not-tree-vertex";
    case NoMatchReason::SameReticulation: return "same-reticulation";
    case NoMatchReason::NotShortcut: return "not-shortcut";
    case NoMatchReason::MissingArcToParent: return "missing-arc-to-parent";
    case NoMatchReason::SetPairMismatch: return "set-pair-mismatch";
    case NoMatchReason::SecondNotShortcut: return "second-not-shortcut";
    case NoMatchReason::MissingUpperArc: return "missing-upper-arc";
  }
  return "unknown";
}

std::string_view describe(NoMatchReason reason) {
  switch (reason) {
    case NoMatchReason::NotCherry: return "{a,b} is a cherry of N but not of N'";
    case NoMatchReason::NotReticulatedCherry:
      return "{a,b} is not a reticulated cherry of N'";
    case NoMatchReason::ReticulationArcShortcut:
      return "an arc into the reticulation parent of b in N' is a shortcut";
    case NoMatchReason::VisibilityMismatch: return "V of q'_2 differs from V of q";
    case NoMatchReason::ClusterMismatch: return "C of q'_2 differs from C of q";
    case NoMatchReason::NoCommonParent: return "p_a and q have no common parent in N";
    case NoMatchReason::SiblingNotReticulation: return "v'_1 not a reticulation";
    case NoMatchReason::ParentNotTreeVertex: return "q' not a tree vertex";
    case NoMatchReason::SameReticulation: return "v'_1 equals v'_2";
    case NoMatchReason::NotShortcut: return "(u'_1,v'_1) not a shortcut";
    case NoMatchReason::MissingArcToParent: return "(u'_1,q') not an arc";
    case NoMatchReason::SetPairMismatch:
      return "visibility/cluster sets of v'_1,v'_2 do not pair with {a} and q";
    case NoMatchReason::SecondNotShortcut: return "(u'_2,v'_2) not a shortcut";
    case NoMatchReason::MissingUpperArc: return "(u'_2,u'_1) not an arc";
  }
  return "unknown";
}

std::string_view to_string(StepCase step) {
  switch (step) {
    case StepCase::Cherry: return "cherry";
    case StepCase::ReticulationParent: return "reticulation-parent";
    case StepCase::TreeParent: return "tree-parent";
  }
  return "unknown";
}

std::string to_string(const MatchResult& match) {
  auto id = [](VertexId v) { return std::to_string(v); };
  return std::visit(
      [&](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CherryMatch>) {
          return "cherry-match";
        } else if constexpr (std::is_same_v<T, RetCherryMatch>) {
          return "ret-cherry-match p'_a=" + id(m.p_a) + " p'_b=" + id(m.p_b) +
                 " q'_2=" + id(m.q2);
        } else if constexpr (std::is_same_v<T, TreeParentMatchA>) {
          return "tree-parent-match-a p'_b=" + id(m.p_b) + " q'=" + id(m.q) +
                 " v'_1=" + id(m.v1) + " v'_2=" + id(m.v2) + " u'_1=" + id(m.u1) +
                 (m.a_below_v1 ? " a-below=v'_1" : " a-below=v'_2");
        } else if constexpr (std::is_same_v<T, TreeParentMatchB>) {
          return "tree-parent-match-b p'_b=" + id(m.p_b) + " q'=" + id(m.q) +
                 " v'_1=" + id(m.v1) + " v'_2=" + id(m.v2) + " u'_1=" + id(m.u1) +
                 " u'_2=" + id(m.u2) + (m.a_below_v1 ? " a-below=v'_1" : " a-below=v'_2");
        } else {
          return "no-match " + std::string(to_string(m.reason));
        }
      },
      match);
}

namespace {

VertexId parent_of(const Network& net, std::string_view label) {
  auto leaf = net.leaf(label);
  if (!leaf) throw Error(ErrorCode::UnknownLeaf, "no leaf '" + std::string(label) + "'");
  auto pars = net.parents(*leaf);
  return pars.empty() ? kNoVertex : pars[0];
}

VertexId sole_parent(const Network& net, VertexId v) {
  auto pars = net.parents(v);
  return pars.size() == 1 ? pars[0] : kNoVertex;
}

CherryShape to_origin(const Network& net, CherryShape shape) {
  if (auto* c = std::get_if<Cherry>(&shape)) {
    c->parent = net.origin(c->parent);
  } else {
    auto& r = std::get<ReticulatedCherry>(shape);
    r.p_a = net.origin(r.p_a);
    r.p_b = net.origin(r.p_b);
    r.q = net.origin(r.q);
  }
  return shape;
}

MatchResult to_origin(const Network& net, MatchResult match) {
  auto o = [&](VertexId& v) {
    if (v != kNoVertex) v = net.origin(v);
  };
  std::visit(
      [&](auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, RetCherryMatch>) {
          o(m.p_a), o(m.p_b), o(m.q2);
        } else if constexpr (std::is_same_v<T, TreeParentMatchA>) {
          o(m.p_b), o(m.q), o(m.v1), o(m.v2), o(m.u1);
        } else if constexpr (std::is_same_v<T, TreeParentMatchB>) {
          o(m.p_b), o(m.q), o(m.v1), o(m.v2), o(m.u1), o(m.u2);
        }
      },
      match);
  return match;
}

// Arcs removed from each side by `recurse_step`, in the ids of the inputs.
struct Deletions {
  std::optional<std::string> leaf;
  std::vector<Arc> left;
  std::vector<Arc> right;
};

Deletions planned_deletions(const CherryShape& cherry, const MatchResult& match) {
  Deletions d;
  if (const auto* c = std::get_if<Cherry>(&cherry)) {
    if (!std::holds_alternative<CherryMatch>(match))
      throw std::logic_error("cherry shape needs a cherry match");
    d.leaf = c->b;
    return d;
  }
  const auto& rc = std::get<ReticulatedCherry>(cherry);
  d.left.push_back({rc.p_a, rc.p_b});
  if (const auto* m = std::get_if<RetCherryMatch>(&match)) {
    d.right.push_back({m->p_a, m->p_b});
  } else if (const auto* m = std::get_if<TreeParentMatchA>(&match)) {
    d.right.push_back(m->a_below_v1 ? Arc{m->p_b, m->v1} : Arc{m->u1, m->v1});
  } else if (const auto* m = std::get_if<TreeParentMatchB>(&match)) {
    d.right.push_back(m->a_below_v1 ? Arc{m->p_b, m->v1} : Arc{m->u1, m->v1});
    d.right.push_back({m->u2, m->v2});
  } else {
    throw std::logic_error("reticulated cherry needs a reticulated-cherry or tree-parent match");
  }
  return d;
}

}  // namespace

MatchResult match_cherry_case(const Network&, const Network& second, const Cherry& cherry) {
  const VertexId pa = parent_of(second, cherry.a);
  const VertexId pb = parent_of(second, cherry.b);
  if (pa != kNoVertex && pa == pb) return CherryMatch{};
  return NoMatch{NoMatchReason::NotCherry};
}

MatchResult match_reticulation_parent_case(const Network& first, const Network& second,
                                           const ReticulatedCherry& cherry) {
  const VertexId pb = parent_of(second, cherry.b);
  if (pb == kNoVertex || !second.is_reticulation(pb))
    throw std::invalid_argument("b's parent in the second network is not a reticulation");
  const VertexId pa = parent_of(second, cherry.a);
  const VertexId q2 = other_parent(second, pb, pa);
  if (q2 == kNoVertex) return NoMatch{NoMatchReason::NotReticulatedCherry};
  if (is_shortcut(second, {pa, pb}) || is_shortcut(second, {q2, pb}))
    return NoMatch{NoMatchReason::ReticulationArcShortcut};
  if (visibility_set(first, cherry.q) != visibility_set(second, q2))
    return NoMatch{NoMatchReason::VisibilityMismatch};
  if (cluster_set(first, cherry.q) != cluster_set(second, q2))
    return NoMatch{NoMatchReason::ClusterMismatch};
  return RetCherryMatch{pa, pb, q2};
}

MatchResult match_tree_parent_case(const Network& first, const Network& second,
                                   const ReticulatedCherry& cherry) {
  const VertexId t = sole_parent(first, cherry.p_a);
  if (t == kNoVertex || sole_parent(first, cherry.q) != t)
    return NoMatch{NoMatchReason::NoCommonParent};

  const VertexId pb = parent_of(second, cherry.b);
  if (pb == kNoVertex || second.is_reticulation(pb))
    throw std::invalid_argument("b's parent in the second network is a reticulation");
  const VertexId b = *second.leaf(cherry.b);

  const VertexId v1 = other_child(second, pb, b);
  if (v1 == kNoVertex || !second.is_reticulation(v1))
    return NoMatch{NoMatchReason::SiblingNotReticulation};
  const VertexId q = sole_parent(second, pb);
  if (q == kNoVertex || !second.is_tree_vertex(q))
    return NoMatch{NoMatchReason::ParentNotTreeVertex};
  const VertexId v2 = other_child(second, q, pb);
  if (v2 == v1) return NoMatch{NoMatchReason::SameReticulation};
  const VertexId u1 = other_parent(second, v1, pb);
  if (!is_shortcut(second, {u1, v1})) return NoMatch{NoMatchReason::NotShortcut};
  if (sole_parent(second, q) != u1) return NoMatch{NoMatchReason::MissingArcToParent};

  const LeafSet just_a{cherry.a};
  const LeafSet vq = visibility_set(first, cherry.q);
  const LeafSet cq_minus_b = cluster_set(first, cherry.q).without(cherry.b);
  const LeafSet c1 = cluster_set(second, v1);
  const LeafSet c2 = cluster_set(second, v2);
  const LeafSet vis1 = visibility_set(second, v1);
  const LeafSet vis2 = visibility_set(second, v2);
  bool a_below_v1;
  if (c1 == just_a && vis1 == just_a && vis2 == vq && c2 == cq_minus_b)
    a_below_v1 = true;
  else if (c2 == just_a && vis2 == just_a && vis1 == vq && c1 == cq_minus_b)
    a_below_v1 = false;
  else
    return NoMatch{NoMatchReason::SetPairMismatch};

  if (!second.is_reticulation(v2)) return TreeParentMatchA{pb, q, v1, v2, u1, a_below_v1};

  const VertexId u2 = other_parent(second, v2, q);
  if (!is_shortcut(second, {u2, v2})) return NoMatch{NoMatchReason::SecondNotShortcut};
  if (!second.has_arc({u2, u1})) return NoMatch{NoMatchReason::MissingUpperArc};
  return TreeParentMatchB{pb, q, v1, v2, u1, u2, a_below_v1};
}

std::pair<Network, Network> recurse_step(const Network& first, const Network& second,
                                         const CherryShape& cherry, const MatchResult& match) {
  if (!is_match(match)) throw std::logic_error("recurse_step called without a match");
  const Deletions d = planned_deletions(cherry, match);
  if (d.leaf) return {delete_leaf(first, *d.leaf), delete_leaf(second, *d.leaf)};
  return {delete_arcs(first, d.left), delete_arcs(second, d.right)};
}

Decision same_display_set(const Network& first, const Network& second,
                          const SameDisplaySetOptions& options) {
  require_valid(first);
  require_valid(second);
  if (first.leaf_set() != second.leaf_set())
    throw Error(ErrorCode::LeafSetMismatch, "the two networks have different leaf sets");
  if (!is_normal(first)) throw Error(ErrorCode::NotNormal, "first network is not normal");
  if (!is_tree_child(second))
    throw Error(ErrorCode::NotTreeChild, "second network is not tree-child");

  Decision decision;
  if (first.leaf_count() < 2) {
    decision.equivalent = true;
    decision.reason = "single leaf";
    return decision;
  }

  Network left = first;
  Network right = remove_trivial_shortcuts(second, &decision.removed_shortcuts);

  for (std::size_t i = 0;; ++i) {
    if (left.leaf_count() == 2) {
      decision.equivalent = true;
      decision.reason = "reduced to two leaves";
      return decision;
    }
    const CherryShape cherry = find_cherry(left);
    IterationRecord record;
    record.index = i;
    record.cherry = to_origin(left, cherry);

    MatchResult match;
    if (const auto* c = std::get_if<Cherry>(&cherry)) {
      record.step = StepCase::Cherry;
      match = match_cherry_case(left, right, *c);
    } else {
      const auto& rc = std::get<ReticulatedCherry>(cherry);
      if (right.is_reticulation(parent_of(right, rc.b))) {
        record.step = StepCase::ReticulationParent;
        match = match_reticulation_parent_case(left, right, rc);
      } else {
        record.step = StepCase::TreeParent;
        match = match_tree_parent_case(left, right, rc);
      }
    }
    record.match = to_origin(right, match);

    if (const auto* none = std::get_if<NoMatch>(&match)) {
      decision.equivalent = false;
      decision.reason =
          std::string(to_string(record.step)) + " case: " + std::string(describe(none->reason));
      decision.trace.push_back(std::move(record));
      return decision;
    }

    const Deletions d = planned_deletions(cherry, match);
    record.deleted_leaf = d.leaf;
    for (const Arc& a : d.left) record.deleted_left.push_back(left.origin(a));
    for (const Arc& a : d.right) record.deleted_right.push_back(right.origin(a));

    auto [next_left, next_right] = recurse_step(left, right, cherry, match);
    left = std::move(next_left);
    right = std::move(next_right);
    decision.trace.push_back(std::move(record));
    if (options.on_step) options.on_step(decision.trace.back(), left, right);
  }
}

std::pair<Network, Network> shrink_pair(
    Network first, Network second,
    const std::function<bool(const Network&, const Network&)>& still_failing) {
  bool progress = true;
  while (progress && first.leaf_count() > 2) {
    progress = false;
    for (const std::string& label : first.leaf_set()) {
      Network l = delete_leaf(first, label);
      Network r = delete_leaf(second, label);
      if (!validate(l).ok || !validate(r).ok || !is_normal(l) || !is_tree_child(r)) continue;
      if (!still_failing(l, r)) continue;
      first = std::move(l);
      second = std::move(r);
      progress = true;
      break;
    }
  }
  return {std::move(first), std::move(second)};
}

}  // namespace dispset
