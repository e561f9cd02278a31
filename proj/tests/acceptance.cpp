// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dispset/analysis.hpp"
#include "dispset/bench.hpp"
#include "dispset/display.hpp"
#include "dispset/equivalence.hpp"
#include "dispset/generate.hpp"
#include "dispset/newick.hpp"
#include "support.hpp"

using namespace dispset;
using namespace dispset::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Network random_net(Rng& rng, NetworkClass cls, std::size_t max_leaves, std::size_t max_ret) {
  for (;;) {
    const std::size_t n = 2 + rng.below(max_leaves - 1);
    const std::size_t cap = cls == NetworkClass::Normal ? n - 2 : n - 1;
    try {
      return random_network({n, rng.below(std::min(cap, max_ret) + 1), rng.next(), cls});
    } catch (const Error&) {
    }
  }
}

Outcome oracle_agreement() {
  const auto start = Clock::now();
  std::ostringstream detail;
  std::size_t total = 0, agree = 0;
  const PairFamily families[] = {PairFamily::ShortcutCopy, PairFamily::Independent,
                                 PairFamily::LabelSwap, PairFamily::Template};
  for (PairFamily family : families) {
    Rng rng(1000 + static_cast<std::uint64_t>(family));
    std::size_t done = 0, yes = 0;
    while (done < 500) {
      auto pair = random_pair(family, rng.next());
      if (!pair) continue;
      const bool fast = same_display_set(pair->first, pair->second).equivalent;
      const bool slow = display_sets_equal_bruteforce(pair->first, pair->second);
      ++done;
      ++total;
      yes += slow;
      if (fast == slow) {
        ++agree;
      } else if (total - agree <= 3) {
        std::cerr << "  disagreement (" << to_string(family) << "): "
                  << serialize_enewick(pair->first) << "  " << serialize_enewick(pair->second)
                  << '\n';
      }
    }
    detail << to_string(family) << "=" << yes << "/500yes ";
  }
  const double secs = seconds_since(start);
  detail << "agree=" << agree << "/" << total << " seconds=" << secs;
  return {agree == total && total >= 2000 && secs < 60.0, detail.str()};
}

Outcome shortcut_round_trip() {
  Rng rng(2000);
  std::size_t nets = 0, failures = 0;
  while (nets < 200) {
    const Network base = random_net(rng, NetworkClass::TreeChild, 8, 1);
    const DisplaySet want = enumerate_display_set(base);
    bool ok = true;
    bool skipped = false;
    for (std::size_t k = 1; k <= 3 && !skipped; ++k) {
      Network net = base;
      try {
        for (std::size_t i = 0; i < k; ++i) {
          net = insert_trivial_shortcut(net, rng.next());
          ok = ok && enumerate_display_set(net) == want;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoEligibleArc) throw;
        skipped = true;
        break;
      }
      std::vector<Arc> removed;
      const Network back = remove_trivial_shortcuts(net, &removed);
      ok = ok && removed.size() >= k && enumerate_display_set(back) == want;
    }
    if (skipped) continue;
    ++nets;
    failures += !ok;
  }
  return {failures == 0, "nets=" + std::to_string(nets) + " failures=" + std::to_string(failures)};
}

bool shape_holds(const Network& net, const CherryShape& shape) {
  if (const auto* c = std::get_if<Cherry>(&shape)) {
    const auto a = net.leaf(c->a), b = net.leaf(c->b);
    return a && b && *a != *b && net.parents(*a)[0] == c->parent &&
           net.parents(*b)[0] == c->parent;
  }
  const auto& rc = std::get<ReticulatedCherry>(shape);
  const auto a = net.leaf(rc.a), b = net.leaf(rc.b);
  return a && b && net.parents(*a)[0] == rc.p_a && net.parents(*b)[0] == rc.p_b &&
         net.is_reticulation(rc.p_b) && net.has_arc({rc.p_a, rc.p_b}) &&
         net.has_arc({rc.q, rc.p_b}) && rc.q != rc.p_a;
}

Outcome cherry_totality() {
  Rng rng(3000);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Network net = random_net(rng, NetworkClass::TreeChild, 20, 19);
    try {
      failures += !shape_holds(net, find_cherry(net));
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {failures == 0, "nets=1000 failures=" + std::to_string(failures)};
}

Outcome containment_is_reachability() {
  Rng rng(4000);
  std::size_t violations = 0, pairs = 0, reticulation_child = 0;
  for (int i = 0; i < 200; ++i) {
    const Network net = random_net(rng, NetworkClass::Normal, 12, 10);
    const auto clusters = cluster_sets(net);
    for (VertexId t = 0; t < net.vertex_count(); ++t)
      for (VertexId u = 0; u < net.vertex_count(); ++u) {
        ++pairs;
        if (clusters[u].subset_of(clusters[t]) == reachable(net, t, u)) continue;
        ++violations;
        reticulation_child += net.is_reticulation(u) && net.has_arc({u, t});
      }
  }
  // Checked over all pairs as stated; every violation found so far has u a
  // reticulation and t its child, which share a cluster.
  return {violations == 0, "nets=200 pairs=" + std::to_string(pairs) +
                               " violations=" + std::to_string(violations) +
                               " of_which_t_is_child_of_reticulation_u=" +
                               std::to_string(reticulation_child)};
}

Outcome reticulated_cherry_shapes() {
  Rng rng(5000);
  std::size_t nets = 0, violations = 0, trees = 0;
  while (nets < 200) {
    const Network net = random_net(rng, NetworkClass::Normal, 9, 6);
    if (net.leaf_count() < 3) continue;
    const CherryShape shape = find_cherry(net);
    const auto* rc = std::get_if<ReticulatedCherry>(&shape);
    if (!rc) continue;
    ++nets;
    const LeafSet vq = visibility_set(net, rc->q);
    const LeafSet cq = cluster_set(net, rc->q).without(rc->b);
    bool seen_a = false, seen_v = false, seen_c = false;
    for (const CanonicalTree& t : enumerate_display_set(net)) {
      ++trees;
      const LeafSet sib = sibling_cluster(t, rc->b);
      const bool cherry = sib == LeafSet{rc->a};
      violations += !(cherry || (vq.subset_of(sib) && sib.subset_of(cq)));
      seen_a = seen_a || cherry;
      seen_v = seen_v || sib == vq;
      seen_c = seen_c || sib == cq;
    }
    violations += !seen_a + !seen_v + !seen_c;
  }
  return {violations == 0, "nets=200 trees=" + std::to_string(trees) +
                               " violations=" + std::to_string(violations)};
}

Outcome quadratic_runtime() {
  const BenchResult result = run_benchmark({50, 100, 200, 400}, 6000, 3);
  double worst = 0;
  std::ostringstream detail;
  for (const BenchRow& row : result.rows) {
    worst = std::max(worst, row.max_ms);
    detail << "n=" << row.n_leaves << ":" << row.mean_ms << "ms ";
  }
  const double exponent = result.exponent.value_or(99);
  detail << "exponent=" << exponent << " worst_ms=" << worst;
  return {exponent <= 2.3 && worst < 1000.0, detail.str()};
}

Outcome parser_round_trip() {
  auto generate = [](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::string> texts;
    std::size_t failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const Network net =
          random_net(rng, i % 2 ? NetworkClass::Normal : NetworkClass::TreeChild, 16, 10);
      const std::string text = serialize_enewick(net);
      const Network back = parse_enewick(text);
      failures += !isomorphic(back, net) || serialize_enewick(back) != text;
      failures += !isomorphic(parse_arclist(serialize_arclist(net)), net);
      texts.push_back(text);
    }
    return std::pair{texts, failures};
  };
  const auto [first, failures] = generate(7000);
  const auto [second, unused] = generate(7000);
  const bool stable = first == second;
  return {failures == 0 && stable,
          "nets=1000 failures=" + std::to_string(failures) + " byte_stable=" + (stable ? "yes" : "no")};
}

Outcome micro_instances() {
  const Network a = parse_enewick(kNetA);
  const Network b = parse_enewick(kNetB);
  const Network c = parse_enewick(kNetC);
  const Network t = parse_enewick(kTreeABC);
  const DisplaySet hand{canonical_tree(parse_enewick("(a,(b,c));")),
                        canonical_tree(parse_enewick("((a,b),c);"))};
  const bool aa = same_display_set(a, a).equivalent && display_sets_equal_bruteforce(a, a);
  const bool cb = same_display_set(c, b).equivalent && display_sets_equal_bruteforce(c, b);
  const bool at = !same_display_set(a, t).equivalent && !display_sets_equal_bruteforce(a, t);
  const bool sets = enumerate_display_set(a) == hand;
  std::ostringstream detail;
  detail << "A~A=" << aa << " C~B=" << cb << " A!~T=" << at << " T(A)=hand:" << sets;
  return {aa && cb && at && sets, detail.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 oracle agreement over 2000 pairs", oracle_agreement},
      {"2 trivial shortcut round trip", shortcut_round_trip},
      {"3 cherry search totality", cherry_totality},
      {"4 cluster containment iff reachability", containment_is_reachability},
      {"5 displayed shapes at a reticulated cherry", reticulated_cherry_shapes},
      {"6 quadratic runtime", quadratic_runtime},
      {"7 parser round trip", parser_round_trip},
      {"8 worked micro-instances", micro_instances},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << name << "  " << outcome.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
