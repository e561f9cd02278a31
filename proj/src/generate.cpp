#include "dispset/generate.hpp"

#include <algorithm>

#include "dispset/analysis.hpp"

namespace dispset {

namespace {

// Mutable arc list; ids are dense and never reused.
struct Draft {
  std::size_t n = 0;
  std::vector<Arc> arcs;
  std::vector<std::pair<VertexId, std::string>> labels;

  static Draft of(const Network& net) {
    Draft d;
    d.n = net.vertex_count();
    d.arcs.assign(net.arcs().begin(), net.arcs().end());
    for (VertexId v = 0; v < d.n; ++v)
      if (net.has_label(v)) d.labels.push_back({v, net.label(v)});
    return d;
  }

  VertexId add() { return static_cast<VertexId>(n++); }

  VertexId add_leaf(std::string label) {
    const VertexId v = add();
    labels.push_back({v, std::move(label)});
    return v;
  }

  // Replaces arcs[i] = (s,t) by (s,v),(v,t); returns v.
  VertexId subdivide(std::size_t i) {
    const VertexId v = add();
    const Arc old = arcs[i];
    arcs[i] = {old.tail, v};
    arcs.push_back({v, old.head});
    return v;
  }

  std::size_t index_of(Arc a) const {
    return static_cast<std::size_t>(std::find(arcs.begin(), arcs.end(), a) - arcs.begin());
  }

  Network build() const { return Network::from_arcs(n, arcs, labels); }
};

bool in_class(const Network& net, NetworkClass cls) {
  if (!validate(net).ok) return false;
  return cls == NetworkClass::Normal ? is_normal(net) : is_tree_child(net);
}

Draft random_tree(std::size_t n_leaves, Rng& rng) {
  Draft d;
  VertexId root = d.add();
  d.arcs.push_back({root, d.add_leaf(leaf_name(1))});
  d.arcs.push_back({root, d.add_leaf(leaf_name(2))});
  for (std::size_t i = 3; i <= n_leaves; ++i) {
    const std::size_t k = rng.below(d.arcs.size() + 1);
    VertexId w;
    if (k == d.arcs.size()) {
      w = d.add();
      d.arcs.push_back({w, root});
      root = w;
    } else {
      w = d.subdivide(k);
    }
    d.arcs.push_back({w, d.add_leaf(leaf_name(i))});
  }
  return d;
}

bool tree_or_leaf(const Network& net, VertexId v) {
  const VertexKind k = net.kind(v);
  return k == VertexKind::Tree || k == VertexKind::Leaf;
}

}  // namespace

std::string_view to_string(NetworkClass cls) {
  return cls == NetworkClass::Normal ? "normal" : "tree-child";
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::string leaf_name(std::size_t index) { return "x" + std::to_string(index); }

Network random_network(const GenSpec& spec) {
  if (spec.n_leaves < 2 || spec.n_reticulations + 1 > spec.n_leaves)
    throw Error(ErrorCode::InvalidSpec,
                "need n_leaves >= 2 and n_reticulations <= n_leaves - 1, got n=" +
                    std::to_string(spec.n_leaves) + " r=" + std::to_string(spec.n_reticulations));
  Rng rng(spec.seed);
  Draft d = random_tree(spec.n_leaves, rng);
  for (std::size_t r = 0; r < spec.n_reticulations; ++r) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kRetryBound && !placed; ++attempt) {
      const std::size_t i = rng.below(d.arcs.size());
      const std::size_t j = rng.below(d.arcs.size());
      if (i == j) continue;
      Draft next = d;
      const VertexId x = next.subdivide(i);
      const VertexId y = next.subdivide(j);
      next.arcs.push_back({x, y});
      if (!in_class(next.build(), spec.network_class)) continue;
      d = std::move(next);
      placed = true;
    }
    if (!placed)
      throw Error(ErrorCode::GenerationExhausted,
                  "no admissible reticulation " + std::to_string(r + 1) + " after " +
                      std::to_string(kRetryBound) + " attempts");
  }
  return d.build();
}

Network insert_trivial_shortcut(const Network& net, std::uint64_t seed) {
  if (!is_tree_child(net))
    throw Error(ErrorCode::NotTreeChild, "trivial shortcut insertion needs a tree-child network");
  std::vector<Arc> eligible;  // (w, c)
  for (VertexId w = 0; w < net.vertex_count(); ++w) {
    const VertexKind k = net.kind(w);
    if (k != VertexKind::Tree && k != VertexKind::Root) continue;
    auto kids = net.children(w);
    if (kids.size() != 2 || !tree_or_leaf(net, kids[0]) || !tree_or_leaf(net, kids[1])) continue;
    eligible.push_back({w, kids[0]});
    eligible.push_back({w, kids[1]});
  }
  if (eligible.empty())
    throw Error(ErrorCode::NoEligibleArc, "no tree vertex with two tree-vertex or leaf children");

  Rng rng(seed);
  const Arc pick = eligible[rng.below(eligible.size())];
  Draft d = Draft::of(net);
  VertexId upper;
  if (net.in_degree(pick.tail) == 0) {
    upper = d.add();
    d.arcs.push_back({upper, pick.tail});
  } else {
    upper = d.subdivide(d.index_of({net.parents(pick.tail)[0], pick.tail}));
  }
  const VertexId lower = d.subdivide(d.index_of(pick));
  d.arcs.push_back({upper, lower});
  return d.build();
}

std::optional<std::pair<Network, Network>> tree_parent_template_pair(
    const TemplatePairSpec& spec) {
  Rng rng(spec.seed);
  const Network base = random_network(
      {spec.base_leaves, spec.base_reticulations, rng.next(), NetworkClass::Normal});

  // Index into base.arcs(), or arc_count() for "above the root".
  auto draw_site = [&]() -> std::optional<std::size_t> {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < base.arc_count(); ++i)
      if (tree_or_leaf(base, base.arcs()[i].head)) sites.push_back(i);
    sites.push_back(base.arc_count());
    return sites[rng.below(sites.size())];
  };
  const std::size_t left_site = *draw_site();
  const std::size_t right_site = spec.independent_placement ? *draw_site() : left_site;

  // Hangs `top` where the site's head was and returns that head.
  auto hang = [&](Draft& d, std::size_t site, VertexId top) {
    if (site == base.arc_count()) return base.root();
    const Arc old = d.arcs[site];
    d.arcs[site] = {old.tail, top};
    return old.head;
  };

  Draft left = Draft::of(base);
  {
    const VertexId t = left.add();
    const VertexId z = hang(left, left_site, t);
    const VertexId pa = left.add();
    const VertexId q = left.add();
    const VertexId pb = left.add();
    const VertexId a = left.add_leaf("a");
    const VertexId b = left.add_leaf("b");
    left.arcs.insert(left.arcs.end(),
                     {{t, pa}, {t, q}, {pa, a}, {pa, pb}, {q, pb}, {q, z}, {pb, b}});
  }

  Draft right = Draft::of(base);
  {
    const VertexId u2 = spec.second_shortcut ? right.add() : kNoVertex;
    const VertexId u1 = right.add();
    const VertexId z = hang(right, right_site, spec.second_shortcut ? u2 : u1);
    const VertexId qp = right.add();
    const VertexId pb = right.add();
    const VertexId v1 = right.add();
    const VertexId a = right.add_leaf("a");
    const VertexId b = right.add_leaf("b");
    const VertexId below_v1 = spec.a_below_v1 ? a : z;
    const VertexId below_v2 = spec.a_below_v1 ? z : a;
    right.arcs.insert(right.arcs.end(),
                      {{u1, qp}, {u1, v1}, {qp, pb}, {pb, b}, {pb, v1}, {v1, below_v1}});
    if (spec.second_shortcut) {
      const VertexId v2 = right.add();
      right.arcs.insert(right.arcs.end(), {{u2, u1}, {u2, v2}, {qp, v2}, {v2, below_v2}});
    } else {
      right.arcs.push_back({qp, below_v2});
    }
  }

  Network first = left.build();
  Network second = right.build();
  if (!validate(first).ok || !validate(second).ok || !is_normal(first) ||
      !is_tree_child(second))
    return std::nullopt;
  return std::pair{std::move(first), std::move(second)};
}

Network swap_labels(const Network& net, std::string_view x, std::string_view y) {
  const auto vx = net.leaf(x);
  const auto vy = net.leaf(y);
  if (!vx || !vy) throw Error(ErrorCode::UnknownLeaf, "swap_labels: unknown leaf");
  Draft d = Draft::of(net);
  for (auto& [v, label] : d.labels) {
    if (v == *vx)
      label = std::string(y);
    else if (v == *vy)
      label = std::string(x);
  }
  return d.build();
}

}  // namespace dispset
