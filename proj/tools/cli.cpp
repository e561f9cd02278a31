#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dispset/analysis.hpp"
#include "dispset/bench.hpp"
#include "dispset/display.hpp"
#include "dispset/equivalence.hpp"
#include "dispset/generate.hpp"
#include "dispset/newick.hpp"

namespace dispset::cli {

namespace {

using nlohmann::json;

// Raised for unreadable input; maps to kUsage.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool has_suffix(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_arclist(const std::string& path, const std::string& format) {
  if (format == "arclist") return true;
  if (format == "enewick") return false;
  return has_suffix(path, ".arcs") || has_suffix(path, ".tsv");
}

Network load_unchecked(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  return is_arclist(path, format) ? parse_arclist_unchecked(text) : parse_enewick_unchecked(text);
}

Network load(const std::string& path, const std::string& format) {
  Network net = load_unchecked(path, format);
  require_valid(net);
  return net;
}

std::size_t default_max_ret() {
  const char* env = std::getenv("DISPSET_MAX_RET");
  if (!env || !*env) return kDefaultMaxReticulations;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw InputError("DISPSET_MAX_RET is not a number: '" + std::string(env) + "'");
  return v;
}

std::string arcs_to_string(const std::vector<Arc>& arcs) {
  if (arcs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ',';
    out += to_string(arcs[i]);
  }
  return out;
}

json arcs_to_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

json cherry_to_json(const CherryShape& shape) {
  if (const auto* c = std::get_if<Cherry>(&shape))
    return {{"type", "cherry"}, {"a", c->a}, {"b", c->b}, {"parent", c->parent}};
  const auto& r = std::get<ReticulatedCherry>(shape);
  return {{"type", "reticulated-cherry"}, {"a", r.a}, {"b", r.b},
          {"p_a", r.p_a}, {"p_b", r.p_b}, {"q", r.q}};
}

json match_to_json(const MatchResult& match) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CherryMatch>) {
          return {{"type", "cherry"}};
        } else if constexpr (std::is_same_v<T, RetCherryMatch>) {
          return {{"type", "reticulated-cherry"}, {"p_a", m.p_a}, {"p_b", m.p_b}, {"q2", m.q2}};
        } else if constexpr (std::is_same_v<T, TreeParentMatchA>) {
          return {{"type", "tree-parent-a"}, {"p_b", m.p_b}, {"q", m.q}, {"v1", m.v1},
                  {"v2", m.v2}, {"u1", m.u1}, {"a_below_v1", m.a_below_v1}};
        } else if constexpr (std::is_same_v<T, TreeParentMatchB>) {
          return {{"type", "tree-parent-b"}, {"p_b", m.p_b}, {"q", m.q}, {"v1", m.v1},
                  {"v2", m.v2}, {"u1", m.u1}, {"u2", m.u2}, {"a_below_v1", m.a_below_v1}};
        } else {
          return {{"type", "none"}, {"reason", std::string(to_string(m.reason))}};
        }
      },
      match);
}

json decision_to_json(const Decision& d) {
  json trace = json::array();
  for (const IterationRecord& r : d.trace) {
    trace.push_back({{"index", r.index},
                     {"case", std::string(to_string(r.step))},
                     {"cherry", cherry_to_json(r.cherry)},
                     {"match", match_to_json(r.match)},
                     {"deleted_leaf", r.deleted_leaf ? json(*r.deleted_leaf) : json(nullptr)},
                     {"deleted_left", arcs_to_json(r.deleted_left)},
                     {"deleted_right", arcs_to_json(r.deleted_right)}});
  }
  return {{"equivalent", d.equivalent},
          {"reason", d.reason},
          {"removed_shortcuts", arcs_to_json(d.removed_shortcuts)},
          {"trace", std::move(trace)}};
}

void print_trace(const Decision& d, std::ostream& out) {
  out << "removed_shortcuts=" << arcs_to_string(d.removed_shortcuts) << '\n';
  for (const IterationRecord& r : d.trace) {
    out << "iter=" << r.index << " case=" << to_string(r.step) << " cherry=" << to_string(r.cherry)
        << " match=" << to_string(r.match)
        << " deleted_leaf=" << (r.deleted_leaf ? *r.deleted_leaf : std::string("-"))
        << " deleted_left=" << arcs_to_string(r.deleted_left)
        << " deleted_right=" << arcs_to_string(r.deleted_right) << '\n';
  }
}

std::string verdict(const Decision& d) {
  return d.equivalent ? "YES" : "NO (" + d.reason + ")";
}

int cmd_validate(const std::string& path, const std::string& format, std::ostream& out) {
  const Network net = load_unchecked(path, format);
  const ValidationReport report = validate(net);
  if (!report.ok) {
    out << "invalid\n";
    for (const Violation& v : report.violations) out << "violation=" << v.to_string() << '\n';
    return kPrecondition;
  }
  const bool tc = is_tree_child(net);
  out << "valid; " << (tc ? "tree-child" : "not tree-child") << "; "
      << (tc && is_normal(net) ? "normal" : "not normal") << "; leaves=" << net.leaf_count()
      << "; reticulations=" << net.reticulation_count() << '\n';
  return kOk;
}

int cmd_display_set(const std::string& path, const std::string& format, std::size_t max_ret,
                    std::ostream& out) {
  const Network net = load(path, format);
  const DisplaySet trees = enumerate_display_set(net, {max_ret, 1});
  for (const CanonicalTree& t : trees) out << t.newick << '\n';
  out << "count=" << trees.size() << '\n';
  return kOk;
}

struct EquivArgs {
  std::string first;
  std::string second;
  std::string format = "auto";
  bool oracle = false;
  bool both = false;
  bool trace = false;
  bool json = false;
  std::size_t max_ret = 0;
};

int cmd_equiv(const EquivArgs& args, std::ostream& out, std::ostream& err) {
  const Network first = load(args.first, args.format);
  const Network second = load(args.second, args.format);
  const EnumerationOptions enumeration{args.max_ret, 1};

  if (args.oracle && !args.both) {
    const bool same = display_sets_equal_bruteforce(first, second, enumeration);
    out << (same ? "YES" : "NO (display sets differ)") << '\n';
    return same ? kOk : kNo;
  }

  const Decision decision = same_display_set(first, second);
  if (args.json) {
    out << decision_to_json(decision).dump(2) << '\n';
  } else {
    out << verdict(decision) << '\n';
    if (args.trace) print_trace(decision, out);
  }

  if (args.both) {
    const bool same = display_sets_equal_bruteforce(first, second, enumeration);
    if (same != decision.equivalent) {
      auto disagree = [&](const Network& l, const Network& r) {
        try {
          return same_display_set(l, r).equivalent !=
                 display_sets_equal_bruteforce(l, r, enumeration);
        } catch (const std::exception&) {
          return false;
        }
      };
      const auto [small_first, small_second] = shrink_pair(first, second, disagree);
      err << "BUG: fast=" << (decision.equivalent ? "yes" : "no")
          << " oracle=" << (same ? "yes" : "no") << '\n'
          << "reproducer_first=" << serialize_enewick(small_first) << '\n'
          << "reproducer_second=" << serialize_enewick(small_second) << '\n';
      return kOracleDisagreement;
    }
    out << "oracle=" << (same ? "yes" : "no") << " agreement=true\n";
  }
  return decision.equivalent ? kOk : kNo;
}

int cmd_gen(std::size_t n, std::size_t r, std::uint64_t seed, const std::string& cls,
            std::ostream& out) {
  const NetworkClass c = cls == "tree-child" ? NetworkClass::TreeChild : NetworkClass::Normal;
  out << serialize_enewick(random_network({n, r, seed, c})) << '\n';
  return kOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::size_t reps,
              std::ostream& out) {
  const BenchResult result = run_benchmark(sizes, seed, reps);
  out << std::fixed << std::setprecision(3);
  for (const BenchRow& row : result.rows)
    out << "n=" << row.n_leaves << " reps=" << row.reps << " mean_ms=" << row.mean_ms
        << " max_ms=" << row.max_ms << '\n';
  if (result.exponent) out << "exponent=" << *result.exponent << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Display-set equivalence of normal and tree-child phylogenetic networks", "dispset"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"auto", "enewick", "arclist"};

  std::string format = "auto";
  std::string path;
  std::size_t max_ret = 0;
  bool max_ret_given = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a network and classify it");
  validate_cmd->add_option("file", path, "Network file")->required();
  validate_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* display_cmd = app.add_subcommand("display-set", "List every displayed tree");
  display_cmd->add_option("file", path, "Network file")->required();
  display_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  display_cmd->add_option("--max-ret", max_ret, "Reticulation bound for enumeration")
      ->each([&](const std::string&) { max_ret_given = true; });

  EquivArgs eq;
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two networks display the same trees");
  equiv_cmd->add_option("first", eq.first, "Normal network")->required();
  equiv_cmd->add_option("second", eq.second, "Tree-child network")->required();
  equiv_cmd->add_option("--format", eq.format)->check(CLI::IsMember(formats));
  equiv_cmd->add_flag("--oracle", eq.oracle, "Compare enumerated display sets instead");
  equiv_cmd->add_flag("--both-oracle-check", eq.both, "Run both and report disagreement");
  equiv_cmd->add_flag("--trace", eq.trace, "Print one line per iteration");
  equiv_cmd->add_flag("--json", eq.json, "Print the decision as JSON");
  equiv_cmd->add_option("--max-ret", max_ret, "Reticulation bound for the oracle")
      ->each([&](const std::string&) { max_ret_given = true; });

  std::size_t n = 0, r = 0;
  std::uint64_t seed = 0;
  std::string cls = "normal";
  auto* gen_cmd = app.add_subcommand("gen", "Print a random network");
  gen_cmd->add_option("-n,--leaves", n, "Leaf count")->required();
  gen_cmd->add_option("-r,--reticulations", r, "Reticulation count");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--class", cls)->check(CLI::IsMember({"normal", "tree-child"}));

  std::vector<std::size_t> sizes{50, 100, 200, 400};
  std::size_t reps = 3;
  auto* bench_cmd = app.add_subcommand("bench", "Time the decision procedure on equivalent pairs");
  bench_cmd->add_option("--sizes", sizes)->delimiter(',');
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--reps", reps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!max_ret_given) max_ret = default_max_ret();
    if (validate_cmd->parsed()) return cmd_validate(path, format, out);
    if (display_cmd->parsed()) return cmd_display_set(path, format, max_ret, out);
    if (equiv_cmd->parsed()) {
      eq.max_ret = max_ret;
      return cmd_equiv(eq, out, err);
    }
    if (gen_cmd->parsed()) {
      if (n < 2 || r >= n) {
        err << "error: need --leaves >= 2 and --reticulations < --leaves\n";
        return kUsage;
      }
      return cmd_gen(n, r, seed, cls, out);
    }
    if (bench_cmd->parsed()) return cmd_bench(sizes, seed, reps, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: invalid network\n";
    for (const Violation& v : e.report().violations) err << "violation=" << v.to_string() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::SyntaxError:
      case ErrorCode::HybridArityError:
      case ErrorCode::InvalidSpec:
        return kUsage;
      default:
        return kPrecondition;
    }
  }
  return kUsage;
}

}  // namespace dispset::cli
