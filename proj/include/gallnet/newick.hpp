#pragma once

#include <string>

#include "gallnet/network.hpp"

namespace gallnet {

// Grammar (whitespace insignificant, names are [A-Za-z0-9_]+):
//   network := subtree name? ';'
//   subtree := name | '(' subtree (',' subtree)+ ')' name? | hybrid
//   hybrid  := ( '(' subtree ')' )? '#H' digits
// Every hybrid tag must appear at least twice, exactly one occurrence with a
// child subtree.  Branch lengths and comments are rejected.
// Throws error with errc::syntax (position annotated), errc::hybrid_tag, or
// errc::duplicate_leaf.
raw_network parse_enewick(const std::string& text);

// Parse then validate; throws errc::invalid_network on a structurally bad
// graph, carrying the report text.
network parse_network(const std::string& text);

// Canonical serialization: write(n) == canonical_newick(n).
std::string write(const network& n);

// DOT export; leaves boxed and labeled, reticulations diamonds, arcs top-down.
// Node numbering follows the canonical order, so output is byte-deterministic.
std::string export_dot(const network& n);

}  // namespace gallnet
