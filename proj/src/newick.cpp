#include "dispset/newick.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "dispset/analysis.hpp"

namespace dispset {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_punctuation(char c) {
  switch (c) {
    case '(': case ')': case '[': case ']': case ',': case ';': case ':': case '#': case '\'':
      return true;
    default:
      return false;
  }
}

class ENewickParser {
 public:
  explicit ENewickParser(std::string_view text) : text_(text) {}

  Network parse() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty input");
    parse_node();
    skip_ws();
    if (at_end() || text_[pos_] != ';') throw SyntaxError(pos_, "expected ';'");
    ++pos_;
    skip_ws();
    if (!at_end()) throw SyntaxError(pos_, "unexpected text after ';'");

    for (const auto& [tag, h] : hybrids_) {
      if (h.count != 2)
        throw Error(ErrorCode::HybridArityError,
                    "hybrid tag #" + tag + " occurs " + std::to_string(h.count) +
                        " time(s), expected 2 (first at position " +
                        std::to_string(h.first_position) + ")");
    }
    return Network::from_arcs(next_, std::move(arcs_), labels_);
  }

 private:
  struct Hybrid {
    VertexId id = kNoVertex;
    int count = 0;
    bool has_body = false;
    bool labelled = false;
    std::size_t first_position = 0;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }

  std::string parse_label() {
    std::string out;
    if (peek() == '\'') {
      const std::size_t start = pos_++;
      for (;;) {
        if (at_end()) throw SyntaxError(start, "unterminated quoted label");
        char c = text_[pos_++];
        if (c == '\'') {
          if (peek() == '\'') {
            out += '\'';
            ++pos_;
            continue;
          }
          break;
        }
        out += c;
      }
      if (out.empty()) throw SyntaxError(start, "empty quoted label");
      return out;
    }
    while (!at_end() && !is_space(text_[pos_]) && !is_punctuation(text_[pos_]))
      out += text_[pos_++];
    return out;
  }

  std::string parse_tag() {
    const std::size_t start = pos_;
    std::string tag;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      tag += text_[pos_++];
    std::size_t digits = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      tag += text_[pos_++];
      ++digits;
    }
    if (digits == 0) throw SyntaxError(start, "hybrid tag needs a number, e.g. #H1");
    return tag;
  }

  VertexId parse_node() {
    skip_ws();
    const std::size_t start = pos_;
    std::vector<VertexId> kids;
    bool has_kids = false;
    if (peek() == '(') {
      ++pos_;
      has_kids = true;
      kids.push_back(parse_node());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        kids.push_back(parse_node());
        skip_ws();
      }
      if (peek() != ')') throw SyntaxError(pos_, "expected ',' or ')'");
      ++pos_;
      skip_ws();
    }
    std::string name = parse_label();
    skip_ws();
    std::string tag;
    if (peek() == '#') {
      ++pos_;
      tag = parse_tag();
      skip_ws();
    }
    if (peek() == ':') throw SyntaxError(pos_, "branch lengths are not supported");
    if (peek() == '[') throw SyntaxError(pos_, "comments are not supported");

    if (!tag.empty()) {
      auto [it, inserted] = hybrids_.try_emplace(tag);
      Hybrid& h = it->second;
      if (inserted) {
        h.id = next_++;
        h.first_position = start;
      }
      ++h.count;
      if (has_kids) {
        if (h.has_body) throw SyntaxError(start, "hybrid #" + tag + " has two subtrees");
        h.has_body = true;
        for (VertexId c : kids) arcs_.push_back({h.id, c});
      } else if (!name.empty() && !h.labelled) {
        h.labelled = true;
        labels_.push_back({h.id, name});
      }
      return h.id;
    }

    const VertexId v = next_++;
    if (has_kids) {
      for (VertexId c : kids) arcs_.push_back({v, c});
    } else {
      if (name.empty()) throw SyntaxError(start, "leaf without a label");
      labels_.push_back({v, std::move(name)});
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  VertexId next_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::pair<VertexId, std::string>> labels_;
  std::map<std::string, Hybrid> hybrids_;
};

}  // namespace

std::string quote_label(std::string_view label) {
  const bool plain = !label.empty() && std::none_of(label.begin(), label.end(), [](char c) {
    return is_space(c) || is_punctuation(c);
  });
  if (plain) return std::string(label);
  std::string out = "'";
  for (char c : label) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

Network parse_enewick_unchecked(std::string_view text) { return ENewickParser(text).parse(); }

Network parse_enewick(std::string_view text) {
  Network net = parse_enewick_unchecked(text);
  require_valid(net);
  return net;
}

std::string serialize_enewick(const Network& net) {
  const std::vector<LeafSet> clusters = cluster_sets(net);
  std::vector<unsigned> tag(net.vertex_count(), 0);
  unsigned counter = 0;
  std::string out;

  auto ordered_children = [&](VertexId v) {
    auto kids = net.children(v);
    std::vector<VertexId> sorted(kids.begin(), kids.end());
    std::sort(sorted.begin(), sorted.end(), [&](VertexId x, VertexId y) {
      if (clusters[x] != clusters[y]) return clusters[x] < clusters[y];
      return x < y;
    });
    return sorted;
  };

  auto write = [&](auto& self, VertexId v) -> void {
    const bool hybrid = net.in_degree(v) >= 2;
    if (hybrid && tag[v] != 0) {
      out += "#H" + std::to_string(tag[v]);
      return;
    }
    if (hybrid) tag[v] = ++counter;
    auto kids = ordered_children(v);
    if (!kids.empty()) {
      out += '(';
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) out += ',';
        self(self, kids[i]);
      }
      out += ')';
    } else {
      out += quote_label(net.label(v));
    }
    if (hybrid) out += "#H" + std::to_string(tag[v]);
  };

  if (net.root() != kNoVertex) write(write, net.root());
  out += ';';
  return out;
}

// ---------------------------------------------------------------------------
// Arc list

namespace {

constexpr std::string_view kLabelPrefix = "label=";

Network parse_arclist_impl(std::string_view text) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> names;
  std::vector<std::string> explicit_label;
  std::vector<Arc> arcs;

  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, static_cast<VertexId>(names.size()));
    if (inserted) {
      names.push_back(name);
      explicit_label.emplace_back();
    }
    return it->second;
  };

  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);

    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i >= line.size() || line[i] == '#') break;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      fields.emplace_back(line.substr(i, j - i));
      i = j;
    }

    if (!fields.empty()) {
      std::string label;
      if (fields.size() >= 2 && fields.back().starts_with(kLabelPrefix)) {
        label = fields.back().substr(kLabelPrefix.size());
        if (label.empty()) throw SyntaxError(line_start, "empty label");
        fields.pop_back();
      }
      if (fields.size() > 2)
        throw SyntaxError(line_start, "expected 'tail<TAB>head[<TAB>label=x]'");
      for (const auto& f : fields)
        if (f.starts_with(kLabelPrefix))
          throw SyntaxError(line_start, "label= must be the last field");
      VertexId labelled;
      if (fields.size() == 1) {
        labelled = vertex(fields[0]);
      } else {
        const VertexId t = vertex(fields[0]);
        const VertexId h = vertex(fields[1]);
        arcs.push_back({t, h});
        labelled = h;
      }
      if (!label.empty()) {
        if (!explicit_label[labelled].empty() && explicit_label[labelled] != label)
          throw SyntaxError(line_start, "vertex '" + names[labelled] + "' labelled twice");
        explicit_label[labelled] = label;
      }
    }
    line_start = line_end + 1;
  }

  if (names.empty()) throw SyntaxError(0, "no arcs or vertices");

  std::vector<std::size_t> out_degree(names.size(), 0);
  for (const Arc& a : arcs) ++out_degree[a.tail];
  std::vector<std::pair<VertexId, std::string>> labels;
  for (VertexId v = 0; v < names.size(); ++v) {
    if (!explicit_label[v].empty())
      labels.push_back({v, explicit_label[v]});
    else if (out_degree[v] == 0)
      labels.push_back({v, names[v]});
  }
  return Network::from_arcs(names.size(), std::move(arcs), labels);
}

}  // namespace

Network parse_arclist_unchecked(std::string_view text) { return parse_arclist_impl(text); }

Network parse_arclist(std::string_view text) {
  Network net = parse_arclist_impl(text);
  require_valid(net);
  return net;
}

std::string serialize_arclist(const Network& net) {
  std::string out;
  auto name = [](VertexId v) { return "v" + std::to_string(v); };
  if (net.arc_count() == 0) {
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      out += name(v);
      if (net.has_label(v)) out += "\tlabel=" + net.label(v);
      out += '\n';
    }
    return out;
  }
  for (const Arc& a : net.arcs()) {
    out += name(a.tail) + '\t' + name(a.head);
    if (net.has_label(a.head)) out += "\tlabel=" + net.label(a.head);
    out += '\n';
  }
  return out;
}

}  // namespace dispset
