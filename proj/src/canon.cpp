#include "gallnet/canon.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace gallnet {

namespace {

std::vector<std::vector<int>> in_adjacency(const digraph& g) {
  std::vector<std::vector<int>> in(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int w : g.out[v]) in[w].push_back(v);
  return in;
}

int class_count(const std::vector<int>& color) {
  return color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
}

// Refine to a fixed point.  Colors are re-ranked densely by sorted signature,
// so the result depends only on the colored graph, not on vertex numbering.
void refine(const digraph& g, const std::vector<std::vector<int>>& in, std::vector<int>& color) {
  using signature = std::tuple<int, std::vector<int>, std::vector<int>>;
  for (;;) {
    int before = class_count(color);
    std::vector<signature> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> oc, ic;
      oc.reserve(g.out[v].size());
      ic.reserve(in[v].size());
      for (int w : g.out[v]) oc.push_back(color[w]);
      for (int w : in[v]) ic.push_back(color[w]);
      std::sort(oc.begin(), oc.end());
      std::sort(ic.begin(), ic.end());
      sig[v] = signature(color[v], std::move(oc), std::move(ic));
    }
    std::map<signature, int> rank;
    for (const signature& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < g.n; ++v) color[v] = rank[sig[v]];
    if (class_count(color) == before) break;
  }
}

std::string code_for(const digraph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  std::ostringstream os;
  os << g.n << '|';
  for (int i = 0; i < g.n; ++i) os << g.color[order[i]] << ',';
  os << '|';
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < g.n; ++v)
    for (int w : g.out[v]) arcs.emplace_back(pos[v], pos[w]);
  std::sort(arcs.begin(), arcs.end());
  for (auto [a, b] : arcs) os << a << '>' << b << ';';
  return os.str();
}

struct search {
  const digraph& g;
  const std::vector<std::vector<int>> in;
  std::string best_code;
  std::vector<int> best_order;
  bool have = false;

  explicit search(const digraph& graph) : g(graph), in(in_adjacency(graph)) {}

  void dive(std::vector<int> color) {
    refine(g, in, color);
    int classes = class_count(color);
    std::vector<std::vector<int>> cell(classes);
    for (int v = 0; v < g.n; ++v) cell[color[v]].push_back(v);
    for (const auto& members : cell) {
      if (members.size() < 2) continue;
      for (int v : members) {
        std::vector<int> next = color;
        next[v] = classes;
        dive(std::move(next));
      }
      return;
    }
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[color[v]] = v;
    std::string code = code_for(g, order);
    if (!have || code < best_code) {
      have = true;
      best_code = std::move(code);
      best_order = std::move(order);
    }
  }
};

}  // namespace

std::vector<int> canonical_order(const digraph& g) {
  if (g.n == 0) return {};
  search s(g);
  s.dive(g.color);
  return s.best_order;
}

std::string canonical_code(const digraph& g) {
  if (g.n == 0) return "0|";
  search s(g);
  s.dive(g.color);
  return s.best_code;
}

}  // namespace gallnet
