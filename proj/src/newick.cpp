#include "gallnet/newick.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace gallnet {

namespace {

bool name_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

struct parser {
  const std::string& s;
  size_t i = 0;
  raw_network g;
  std::map<std::string, int> hybrid_vertex;  // tag digits -> vertex
  std::map<std::string, int> hybrid_uses;
  std::map<std::string, int> hybrid_owners;
  std::map<std::string, int> leaf_of_label;

  explicit parser(const std::string& text) : s(text) {}

  [[noreturn]] void err(const std::string& what) {
    fail(errc::syntax, "position " + std::to_string(i) + ": " + what);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  std::string take_name() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && name_char(s[i])) ++i;
    if (i == start) err("expected a name");
    return s.substr(start, i - start);
  }

  // '#' already peeked; returns the hybrid vertex for the tag.
  int take_hybrid(bool owns_child) {
    skip_ws();
    ++i;  // '#'
    if (i >= s.size() || s[i] != 'H') err("hybrid tag must be #H<digits>");
    ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == start) err("hybrid tag must be #H<digits>");
    std::string tag = s.substr(start, i - start);
    if (i < s.size() && name_char(s[i])) err("unexpected character after hybrid tag");
    auto [it, fresh] = hybrid_vertex.emplace(tag, -1);
    if (fresh) it->second = g.add_vertex();
    ++hybrid_uses[tag];
    if (owns_child) {
      if (++hybrid_owners[tag] > 1)
        fail(errc::hybrid_tag, "hybrid tag #H" + tag + " carries two child subtrees");
    }
    return it->second;
  }

  int subtree() {
    char c = peek();
    if (c == '(') {
      ++i;
      int first = subtree();
      if (peek() == ',') {
        std::vector<int> kids = {first};
        while (peek() == ',') {
          ++i;
          kids.push_back(subtree());
        }
        if (peek() != ')') err("expected ')' or ','");
        ++i;
        if (peek() == '#') err("hybrid tag cannot follow a multi-child group");
        if (name_char(peek())) take_name();  // decorative internal name, dropped
        if (peek() == ':') err("branch lengths are not supported");
        int v = g.add_vertex();
        for (int k : kids) g.add_arc(v, k);
        return v;
      }
      if (peek() != ')') err("expected ')' or ','");
      ++i;
      if (peek() != '#') err("a single-child group must introduce a hybrid tag");
      int v = take_hybrid(true);
      g.add_arc(v, first);
      return v;
    }
    if (c == '#') return take_hybrid(false);
    if (c == ':') err("branch lengths are not supported");
    if (c == '[') err("comments are not supported");
    if (!name_char(c)) err("expected a subtree");
    std::string label = take_name();
    if (peek() == ':') err("branch lengths are not supported");
    auto [it, fresh] = leaf_of_label.emplace(label, -1);
    if (!fresh) fail(errc::duplicate_leaf, "leaf label '" + label + "' appears twice");
    it->second = g.add_vertex(label);
    return it->second;
  }

  raw_network run() {
    subtree();
    if (name_char(peek())) take_name();  // optional root name
    if (peek() != ';') err("expected ';'");
    ++i;
    if (peek() != '\0') err("trailing characters after ';'");
    for (const auto& [tag, uses] : hybrid_uses) {
      if (uses < 2) fail(errc::hybrid_tag, "hybrid tag #H" + tag + " appears only once");
      if (hybrid_owners[tag] == 0)
        fail(errc::hybrid_tag, "hybrid tag #H" + tag + " never carries a child subtree");
    }
    return std::move(g);
  }
};

}  // namespace

raw_network parse_enewick(const std::string& text) { return parser(text).run(); }

network parse_network(const std::string& text) { return network::build(parse_enewick(text)); }

std::string write(const network& n) { return canonical_newick(n); }

std::string export_dot(const network& n) {
  std::vector<int> order = canonical_vertex_order(n);
  std::vector<int> pos(n.vertex_count());
  for (int i = 0; i < n.vertex_count(); ++i) pos[order[i]] = i;
  std::ostringstream os;
  os << "digraph network {\n  rankdir=TB;\n";
  for (int i = 0; i < n.vertex_count(); ++i) {
    int v = order[i];
    if (n.is_leaf(v)) {
      os << "  n" << i << " [shape=box, label=\"" << n.label(v) << "\"];\n";
    } else if (n.is_reticulation(v)) {
      os << "  n" << i << " [shape=diamond, label=\"\"];\n";
    } else {
      os << "  n" << i << " [shape=point];\n";
    }
  }
  std::vector<std::pair<int, int>> arcs;
  for (const arc& a : n.arcs()) arcs.emplace_back(pos[a.tail], pos[a.head]);
  std::sort(arcs.begin(), arcs.end());
  for (auto [a, b] : arcs) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gallnet
