#include "gallnet/systems.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "editable.hpp"

namespace gallnet {

std::vector<switching> displayed_switchings(const network& n, int reticulation_cap,
                                            std::vector<std::string>* warnings) {
  std::vector<int> rets = n.reticulations();
  int k = (int)rets.size();
  if (k > reticulation_cap)
    fail(errc::too_many_reticulations, std::to_string(k) + " reticulations exceed the cap of " +
                                           std::to_string(reticulation_cap));
  std::vector<switching> out;
  for (long long choice = 0; choice < (1LL << k); ++choice) {
    detail::editable e = detail::editable::from(n);
    for (int i = 0; i < k; ++i) {
      int dropped = n.parents(rets[i])[(choice >> i) & 1];
      e.del_arc(dropped, rets[i]);
    }
    std::string note;
    if (!e.cleanup(detail::editable::on_parallel::merge, &note)) {
      if (warnings) warnings->push_back("choice " + std::to_string(choice) + " skipped: " + note);
      continue;
    }
    std::vector<int> origin;
    raw_network g = e.compact(&origin);
    validation_report r = validate(g);
    if (!r.valid) {
      if (warnings)
        warnings->push_back("choice " + std::to_string(choice) + " skipped: " + r.to_text());
      continue;
    }
    out.push_back({network::build(g), std::move(origin)});
  }
  return out;
}

tree_system displayed_trees(const network& n, int reticulation_cap) {
  tree_system ts;
  ts.ground = n.leaf_labels();
  std::set<std::string> seen;
  std::vector<std::pair<std::string, network>> keyed;
  for (switching& s : displayed_switchings(n, reticulation_cap)) {
    std::string key = canonical_newick(s.tree);
    if (seen.insert(key).second) keyed.emplace_back(std::move(key), std::move(s.tree));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, t] : keyed) ts.trees.push_back(std::move(t));
  return ts;
}

namespace {

// C(v) for every vertex, as sorted label lists.
std::vector<cluster> vertex_clusters(const network& n) {
  std::vector<cluster> c(n.vertex_count());
  // reverse topological order: process a vertex once all children are done
  std::vector<int> state(n.vertex_count(), 0);
  std::function<void(int)> go = [&](int v) {
    if (state[v]) return;
    state[v] = 1;
    if (n.is_leaf(v)) {
      c[v] = {n.label(v)};
      return;
    }
    std::set<std::string> acc;
    for (int w : n.children(v)) {
      go(w);
      acc.insert(c[w].begin(), c[w].end());
    }
    c[v].assign(acc.begin(), acc.end());
  };
  for (int v = 0; v < n.vertex_count(); ++v) go(v);
  return c;
}

}  // namespace

cluster_system hardwired_clusters(const network& n) {
  cluster_system cs;
  cs.ground = n.leaf_labels();
  for (cluster& c : vertex_clusters(n)) cs.clusters.insert(std::move(c));
  return cs;
}

cluster_system softwired_clusters(const network& n, int reticulation_cap) {
  cluster_system cs;
  cs.ground = n.leaf_labels();
  for (const switching& s : displayed_switchings(n, reticulation_cap))
    for (cluster& c : vertex_clusters(s.tree)) cs.clusters.insert(std::move(c));
  return cs;
}

cluster_system vertex_softwired(const network& n, int v, int reticulation_cap) {
  if (v < 0 || v >= n.vertex_count())
    fail(errc::unknown_label, "no vertex " + std::to_string(v));
  cluster_system cs;
  cs.ground = n.leaf_labels();
  for (const switching& s : displayed_switchings(n, reticulation_cap)) {
    std::vector<cluster> c = vertex_clusters(s.tree);
    for (int t = 0; t < s.tree.vertex_count(); ++t)
      if (s.origin[t] == v) cs.clusters.insert(c[t]);
  }
  return cs;
}

triplet_system cluster_triplets(const cluster& c, const std::vector<std::string>& ground) {
  if (c.empty()) fail(errc::empty_set, "clusters are non-empty");
  for (const std::string& l : c)
    if (!std::binary_search(ground.begin(), ground.end(), l))
      fail(errc::unknown_label, "cluster label '" + l + "' not in the ground set");
  triplet_system ts;
  ts.ground = ground;
  if (c.size() < 2 || c.size() == ground.size()) return ts;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      for (const std::string& z : ground)
        if (!std::binary_search(c.begin(), c.end(), z)) ts.triplets.insert({c[i], c[j], z});
  return ts;
}

triplet_system system_triplets(const cluster_system& cs) {
  triplet_system ts;
  ts.ground = cs.ground;
  for (const cluster& c : cs.clusters) {
    triplet_system part = cluster_triplets(c, cs.ground);
    ts.triplets.insert(part.triplets.begin(), part.triplets.end());
  }
  return ts;
}

triplet_system tree_triplets(const network& t) {
  if (t.reticulation_count() != 0) fail(errc::bad_input, "not a tree");
  const std::vector<std::string>& X = t.leaf_labels();
  if (X.size() < 3) fail(errc::too_few_leaves, "triplets need at least 3 leaves");
  triplet_system ts;
  ts.ground = X;
  auto strictly_below = [&](int a, int b) { return a != b && below(t, a, b); };
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = i + 1; j < X.size(); ++j)
      for (size_t k = j + 1; k < X.size(); ++k) {
        int lij = lca(t, X[i], X[j])[0];
        int lik = lca(t, X[i], X[k])[0];
        int ljk = lca(t, X[j], X[k])[0];
        if (strictly_below(lij, lik)) ts.triplets.insert({X[i], X[j], X[k]});
        else if (strictly_below(lik, lij)) ts.triplets.insert({X[i], X[k], X[j]});
        else if (strictly_below(ljk, lij)) ts.triplets.insert({X[j], X[k], X[i]});
      }
  return ts;
}

triplet_system softwired_triplets(const network& n, int reticulation_cap) {
  if (n.leaf_labels().size() < 3) fail(errc::too_few_leaves, "triplets need at least 3 leaves");
  triplet_system ts;
  ts.ground = n.leaf_labels();
  for (const network& t : displayed_trees(n, reticulation_cap).trees) {
    triplet_system part = tree_triplets(t);
    ts.triplets.insert(part.triplets.begin(), part.triplets.end());
  }
  return ts;
}

namespace {

bool consistent_impl(const network& n, const triplet& t, long long budget) {
  int lx = n.leaf(t.a), ly = n.leaf(t.b), lz = n.leaf(t.z);
  if (lx == ly || lx == lz || ly == lz)
    fail(errc::bad_input, "triplet labels must be distinct: " + t.to_string());
  int V = n.vertex_count();

  // reach[a][b]: b reachable from a (weakly)
  std::vector<std::vector<char>> reach(V, std::vector<char>(V, 0));
  for (int s = 0; s < V; ++s) {
    std::vector<int> stack = {s};
    reach[s][s] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int w : n.children(cur))
        if (!reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(w);
        }
    }
  }

  long long used = 0;
  std::vector<char> blocked(V, 0);

  // Enumerates directed paths from -> to that avoid blocked vertices; path
  // vertices stay blocked while the continuation runs.  The target may be
  // blocked already (an endpoint shared by design).
  std::function<bool(int, int, const std::function<bool()>&)> try_path =
      [&](int from, int to, const std::function<bool()>& then) -> bool {
    std::function<bool(int)> go = [&](int cur) -> bool {
      if (++used > budget)
        fail(errc::budget_exceeded, "path enumeration for " + t.to_string() +
                                        " exceeded the budget of " + std::to_string(budget));
      if (cur == to) return then();
      for (int w : n.children(cur)) {
        if (w != to && (blocked[w] || !reach[w][to])) continue;
        char was = blocked[w];
        blocked[w] = 1;
        bool ok = go(w);
        blocked[w] = was;
        if (ok) return true;
      }
      return false;
    };
    return go(from);
  };

  // u roots the {a,b} cherry, v sits above u and reaches z; the four paths
  // u->a, u->b, v->u, v->z share only the endpoints u and v.
  for (int u = 0; u < V; ++u) {
    if (!reach[u][lx] || !reach[u][ly]) continue;
    for (int v = 0; v < V; ++v) {
      if (v == u || !reach[v][u] || !reach[v][lz]) continue;
      std::fill(blocked.begin(), blocked.end(), 0);
      blocked[u] = blocked[v] = 1;
      bool found = try_path(u, lx, [&] {
        return try_path(u, ly, [&] {
          return try_path(v, u, [&] { return try_path(v, lz, [] { return true; }); });
        });
      });
      if (found) return true;
    }
  }
  return false;
}

}  // namespace

bool triplet_consistent(const network& n, const triplet& t, long long path_budget) {
  return consistent_impl(n, t, path_budget);
}

triplet_system consistent_triplets(const network& n, long long path_budget) {
  const std::vector<std::string>& X = n.leaf_labels();
  if (X.size() < 3) fail(errc::too_few_leaves, "triplets need at least 3 leaves");
  triplet_system ts;
  ts.ground = X;
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = i + 1; j < X.size(); ++j)
      for (size_t k = j + 1; k < X.size(); ++k)
        for (triplet t : {triplet(X[i], X[j], X[k]), triplet(X[i], X[k], X[j]),
                          triplet(X[j], X[k], X[i])})
          if (consistent_impl(n, t, path_budget)) ts.triplets.insert(t);
  return ts;
}

bool is_dense(const triplet_system& r) {
  const std::vector<std::string>& X = r.ground;
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = i + 1; j < X.size(); ++j)
      for (size_t k = j + 1; k < X.size(); ++k)
        if (!r.triplets.count({X[i], X[j], X[k]}) && !r.triplets.count({X[i], X[k], X[j]}) &&
            !r.triplets.count({X[j], X[k], X[i]}))
          return false;
  return true;
}

triplet_system restrict_triplets(const triplet_system& r, const std::string& x) {
  if (!std::binary_search(r.ground.begin(), r.ground.end(), x))
    fail(errc::unknown_label, "label '" + x + "' not in the ground set");
  triplet_system out;
  for (const std::string& l : r.ground)
    if (l != x) out.ground.push_back(l);
  for (const triplet& t : r.triplets)
    if (t.a != x && t.b != x && t.z != x) out.triplets.insert(t);
  return out;
}

bool tree_consistent(const cluster_system& cs, const network& n) {
  if (cs.ground != n.leaf_labels())
    fail(errc::ground_set_mismatch, "cluster system and network have different ground sets");
  cluster_system s = softwired_clusters(n);
  for (const cluster& c : cs.clusters)
    if (!s.clusters.count(c)) return false;
  return true;
}

std::string cluster_lines(const cluster_system& cs) {
  std::vector<cluster> sorted(cs.clusters.begin(), cs.clusters.end());
  std::sort(sorted.begin(), sorted.end(), [](const cluster& a, const cluster& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::string out;
  for (const cluster& c : sorted) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += c[i];
    }
    out += '\n';
  }
  return out;
}

std::string triplet_lines(const triplet_system& ts) {
  std::string out;
  for (const triplet& t : ts.triplets) out += t.to_string() + "\n";
  return out;
}

std::string tree_lines(const tree_system& ts) {
  std::vector<std::string> lines;
  for (const network& t : ts.trees) lines.push_back(canonical_newick(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

cluster_system parse_cluster_lines(const std::string& text) {
  cluster_system cs;
  std::set<std::string> ground;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    cluster c;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      if (tok.empty() || tok.find_first_of(" \t") != std::string::npos)
        fail(errc::bad_input, "line " + std::to_string(lineno) + ": bad label '" + tok + "'");
      c.push_back(tok);
    }
    if (line.back() == ',')
      fail(errc::bad_input, "line " + std::to_string(lineno) + ": trailing comma");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      fail(errc::bad_input, "line " + std::to_string(lineno) + ": repeated label");
    ground.insert(c.begin(), c.end());
    cs.clusters.insert(std::move(c));
  }
  cs.ground.assign(ground.begin(), ground.end());
  return cs;
}

}  // namespace gallnet
