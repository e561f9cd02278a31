#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dispset/analysis.hpp"
#include "dispset/newick.hpp"

namespace dispset::testing {

namespace {

std::vector<VertexId> children_first(const Network& net) {
  std::vector<std::size_t> pending(net.vertex_count());
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    pending[v] = net.out_degree(v);
    if (pending[v] == 0) ready.push_back(v);
  }
  std::vector<VertexId> order;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (VertexId p : net.parents(v))
      if (--pending[p] == 0) ready.push_back(p);
  }
  return order;
}

std::vector<VertexId> sorted_image(std::span<const VertexId> kids, const std::vector<VertexId>& map) {
  std::vector<VertexId> out;
  for (VertexId c : kids) out.push_back(map[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool isomorphic(const Network& x, const Network& y) {
  if (x.vertex_count() != y.vertex_count() || x.arc_count() != y.arc_count() ||
      x.leaf_set() != y.leaf_set())
    return false;
  const std::vector<VertexId> order = children_first(x);
  if (order.size() != x.vertex_count()) return false;
  std::vector<VertexId> map(x.vertex_count(), kNoVertex);
  std::vector<char> used(y.vertex_count(), 0);
  for (VertexId leaf : x.leaves()) {
    const VertexId img = *y.leaf(x.label(leaf));
    if (y.out_degree(img) != 0 || y.in_degree(img) != x.in_degree(leaf)) return false;
    map[leaf] = img;
    used[img] = 1;
  }

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const VertexId v = order[i];
    if (map[v] != kNoVertex) return extend(i + 1);
    const std::vector<VertexId> want = sorted_image(x.children(v), map);
    std::vector<VertexId> candidates;
    if (want.empty()) return false;  // unlabelled sink
    for (VertexId p : y.parents(want.front())) candidates.push_back(p);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (VertexId cand : candidates) {
      if (used[cand] || y.in_degree(cand) != x.in_degree(v) || y.has_label(cand)) continue;
      auto kids = y.children(cand);
      std::vector<VertexId> have(kids.begin(), kids.end());
      std::sort(have.begin(), have.end());
      if (have != want) continue;
      map[v] = cand;
      used[cand] = 1;
      if (extend(i + 1)) return true;
      map[v] = kNoVertex;
      used[cand] = 0;
    }
    return false;
  };
  return extend(0);
}

Network permute_ids(const Network& net, std::uint64_t seed) {
  std::vector<VertexId> perm(net.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  Rng rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  std::vector<std::pair<VertexId, std::string>> labels;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.has_label(v)) labels.push_back({perm[v], net.label(v)});
  return Network::from_arcs(net.vertex_count(), std::move(arcs), labels);
}

std::vector<LeafSet> tree_clusters(const CanonicalTree& tree) {
  const Network net = parse_enewick(tree.newick);
  return cluster_sets(net);
}

LeafSet sibling_cluster(const CanonicalTree& tree, const std::string& b) {
  const Network net = parse_enewick(tree.newick);
  const VertexId leaf = net.leaf(b).value();
  const VertexId parent = net.parents(leaf)[0];
  return cluster_set(net, other_child(net, parent, leaf));
}

std::string_view to_string(PairFamily family) {
  switch (family) {
    case PairFamily::ShortcutCopy: return "shortcut-copy";
    case PairFamily::Independent: return "independent";
    case PairFamily::LabelSwap: return "label-swap";
    case PairFamily::Template: return "template";
  }
  return "unknown";
}

std::optional<std::pair<Network, Network>> random_pair(PairFamily family, std::uint64_t seed,
                                                       const PairLimits& limits) {
  Rng rng(seed);
  const std::size_t n = 3 + rng.below(limits.max_leaves - 2);
  auto draw_r = [&](std::size_t cap) {
    return rng.below(std::min(cap, limits.max_reticulations) + 1);
  };
  const std::size_t normal_cap = n - 2;  // normal networks have at most n-2 reticulations
  try {
    Network first;
    Network second;
    switch (family) {
      case PairFamily::ShortcutCopy: {
        first = random_network({n, draw_r(normal_cap), rng.next(), NetworkClass::Normal});
        second = first;
        const std::size_t k = 1 + rng.below(3);
        for (std::size_t i = 0; i < k; ++i) second = insert_trivial_shortcut(second, rng.next());
        break;
      }
      case PairFamily::Independent:
        first = random_network({n, draw_r(normal_cap), rng.next(), NetworkClass::Normal});
        second = random_network({n, draw_r(n - 1), rng.next(), NetworkClass::TreeChild});
        break;
      case PairFamily::LabelSwap: {
        first = random_network({n, draw_r(normal_cap), rng.next(), NetworkClass::Normal});
        const std::size_t i = 1 + rng.below(n);
        std::size_t j = 1 + rng.below(n - 1);
        if (j >= i) ++j;
        second = swap_labels(first, leaf_name(i), leaf_name(j));
        break;
      }
      case PairFamily::Template: {
        TemplatePairSpec spec;
        spec.base_leaves = std::max<std::size_t>(2, n - 2);
        spec.base_reticulations = rng.below(std::min<std::size_t>(spec.base_leaves - 2, 2) + 1);
        spec.second_shortcut = rng.coin();
        spec.a_below_v1 = rng.coin();
        const std::uint64_t perturb = rng.below(6);
        spec.independent_placement = perturb == 1;
        spec.seed = rng.next();
        auto pair = tree_parent_template_pair(spec);
        if (!pair) return std::nullopt;
        first = std::move(pair->first);
        second = std::move(pair->second);
        const std::string other = leaf_name(1 + rng.below(spec.base_leaves));
        if (perturb == 2) second = swap_labels(second, rng.coin() ? "a" : "b", other);
        if (perturb == 3) second = insert_trivial_shortcut(second, rng.next());
        if (perturb == 4) first = swap_labels(first, "a", other);
        break;
      }
    }
    if (first.reticulation_count() > limits.max_reticulations ||
        second.reticulation_count() > limits.max_reticulations ||
        first.leaf_count() > limits.max_leaves)
      return std::nullopt;
    return std::pair{std::move(first), std::move(second)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::GenerationExhausted || e.code() == ErrorCode::NoEligibleArc)
      return std::nullopt;
    throw;
  }
}

}  // namespace dispset::testing
