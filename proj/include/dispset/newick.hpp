#pragma once

#include <string>
#include <string_view>

#include "dispset/network.hpp"

namespace dispset {

// Extended Newick: a reticulation is written once with its subtree,
// `(b)#H1`, and once as a bare reference, `#H1`. Internal vertex names are
// accepted and discarded; branch lengths are not supported. Labels are bare
// words or single-quoted strings ('' escapes a quote).
//
// Throws SyntaxError, Error{HybridArityError} when a tag does not occur
// exactly twice, and ValidationError when the graph is not a phylogenetic
// network.
Network parse_enewick(std::string_view text);

// Same parse without the final validation, for reporting violations.
Network parse_enewick_unchecked(std::string_view text);

// Canonical form: children ordered by their sorted cluster (so by smallest
// reachable label first), a reticulation's subtree written at its first
// encounter in that order, hybrid tags numbered in encounter order.
std::string serialize_enewick(const Network& net);

// Arc list: one arc per line, `tail<TAB>head[<TAB>label=<x>]`; whitespace
// also separates fields. An out-degree-0 vertex without `label=` is labelled
// by its name. A line `name label=<x>` (or just `name`) declares an isolated
// vertex. `#` starts a comment.
Network parse_arclist(std::string_view text);
Network parse_arclist_unchecked(std::string_view text);

// Internal vertices are named v<id>; leaves carry a label= column.
std::string serialize_arclist(const Network& net);

// Quotes a label when it contains Newick punctuation or whitespace.
std::string quote_label(std::string_view label);

}  // namespace dispset
