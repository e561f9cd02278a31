#include "dispset/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace dispset {

namespace {

// Marks every vertex reachable from `start`, never entering `blocked`.
std::vector<char> reach_from(const Network& net, VertexId start, VertexId blocked) {
  std::vector<char> seen(net.vertex_count(), 0);
  if (start == blocked || start == kNoVertex) return seen;
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId c : net.children(v)) {
      if (c == blocked || seen[c]) continue;
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  return seen;
}

LeafSet leaves_where(const Network& net, const std::vector<char>& mark, bool wanted) {
  std::vector<std::string> out;
  for (VertexId leaf : net.leaves())
    if ((mark[leaf] != 0) == wanted) out.push_back(net.label(leaf));
  return LeafSet::from_sorted(std::move(out));
}

void require_arc(const Network& net, Arc arc) {
  if (!net.has_arc(arc)) throw Error(ErrorCode::NoSuchArc, "no arc " + to_string(arc));
}

}  // namespace

std::vector<LeafSet> cluster_sets(const Network& net) {
  const std::size_t n = net.vertex_count();
  std::vector<std::vector<std::uint32_t>> ranks(n);
  // Postorder via explicit stack; children are finished before parents.
  std::vector<char> state(n, 0);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto kids = net.children(v);
      if (next < kids.size()) {
        VertexId c = kids[next++];
        if (!state[c]) {
          state[c] = 1;
          stack.push_back({c, 0});
        }
        continue;
      }
      std::vector<std::uint32_t>& mine = ranks[v];
      if (net.has_label(v)) mine.push_back(static_cast<std::uint32_t>(net.leaf_rank(v)));
      for (VertexId c : kids) {
        std::vector<std::uint32_t> merged;
        merged.reserve(mine.size() + ranks[c].size());
        std::set_union(mine.begin(), mine.end(), ranks[c].begin(), ranks[c].end(),
                       std::back_inserter(merged));
        mine = std::move(merged);
      }
      state[v] = 2;
      stack.pop_back();
    }
  }
  std::vector<LeafSet> out;
  out.reserve(n);
  const auto leaves = net.leaves();
  for (VertexId v = 0; v < n; ++v) {
    std::vector<std::string> labels;
    labels.reserve(ranks[v].size());
    for (std::uint32_t r : ranks[v]) labels.push_back(net.label(leaves[r]));
    out.push_back(LeafSet::from_sorted(std::move(labels)));
  }
  return out;
}

LeafSet cluster_set(const Network& net, VertexId v) {
  return leaves_where(net, reach_from(net, v, kNoVertex), true);
}

LeafSet visibility_set(const Network& net, VertexId u) {
  return leaves_where(net, reach_from(net, net.root(), u), false);
}

bool reachable(const Network& net, VertexId from, VertexId to) {
  if (from == to) return true;
  return reach_from(net, from, kNoVertex).at(to) != 0;
}

bool is_shortcut(const Network& net, Arc arc) {
  require_arc(net, arc);
  std::vector<char> seen(net.vertex_count(), 0);
  std::vector<VertexId> stack;
  bool skipped = false;
  for (VertexId c : net.children(arc.tail)) {
    if (c == arc.head && !skipped) {
      skipped = true;
      continue;
    }
    if (!seen[c]) {
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == arc.head) return true;
    for (VertexId c : net.children(v)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  return false;
}

bool is_trivial_shortcut(const Network& net, Arc arc) {
  require_arc(net, arc);
  if (!net.is_reticulation(arc.head)) return false;
  const VertexId other = other_parent(net, arc.head, arc.tail);
  if (other == kNoVertex || other == arc.tail) return false;
  return net.has_arc({arc.tail, other});
}

bool is_tree_child(const Network& net) {
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto kids = net.children(v);
    if (kids.empty()) continue;
    bool ok = false;
    for (VertexId c : kids) {
      const VertexKind k = net.kind(c);
      if (k == VertexKind::Tree || k == VertexKind::Leaf) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_normal(const Network& net) {
  if (!is_tree_child(net)) return false;
  for (const Arc& a : net.arcs())
    if (net.is_reticulation(a.head) && is_shortcut(net, a)) return false;
  return true;
}

VertexId other_parent(const Network& net, VertexId v, VertexId p) {
  auto pars = net.parents(v);
  if (pars.size() != 2) return kNoVertex;
  if (pars[0] == p) return pars[1];
  if (pars[1] == p) return pars[0];
  return kNoVertex;
}

VertexId other_child(const Network& net, VertexId v, VertexId c) {
  auto kids = net.children(v);
  if (kids.size() != 2) return kNoVertex;
  if (kids[0] == c) return kids[1];
  if (kids[1] == c) return kids[0];
  return kNoVertex;
}

std::string to_string(const CherryShape& shape) {
  if (const auto* c = std::get_if<Cherry>(&shape))
    return "cherry{" + c->a + "," + c->b + "} parent=" + std::to_string(c->parent);
  const auto& r = std::get<ReticulatedCherry>(shape);
  return "reticulated-cherry{" + r.a + "," + r.b + "} p_a=" + std::to_string(r.p_a) +
         " p_b=" + std::to_string(r.p_b) + " q=" + std::to_string(r.q);
}

CherryShape find_cherry(const Network& net) {
  if (net.leaf_count() < 2) throw std::invalid_argument("find_cherry needs two or more leaves");
  if (!is_tree_child(net))
    throw Error(ErrorCode::NotTreeChild, "cherry search needs a tree-child network");

  VertexId cur = net.root();
  for (;;) {
    VertexId next = kNoVertex;
    for (VertexId c : net.children(cur)) {
      if (net.is_tree_vertex(c)) {
        next = c;
      } else if (net.is_reticulation(c)) {
        const VertexId below = net.children(c)[0];
        if (net.is_tree_vertex(below)) next = below;
      }
      if (next != kNoVertex) break;
    }
    if (next == kNoVertex) break;
    cur = next;
  }

  std::vector<VertexId> leaves;
  VertexId reticulation = kNoVertex;
  for (VertexId c : net.children(cur)) {
    if (net.is_leaf(c))
      leaves.push_back(c);
    else if (net.is_reticulation(c))
      reticulation = c;
  }
  if (leaves.size() == 2) {
    std::string x = net.label(leaves[0]);
    std::string y = net.label(leaves[1]);
    if (y < x) std::swap(x, y);
    return Cherry{std::move(x), std::move(y), cur};
  }
  // Tree-child: the remaining child is a reticulation whose child is a leaf.
  const VertexId b = net.children(reticulation)[0];
  return ReticulatedCherry{net.label(leaves.at(0)), net.label(b), cur, reticulation,
                           other_parent(net, reticulation, cur)};
}

}  // namespace dispset
