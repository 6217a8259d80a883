#include "gallnet/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gallnet/canon.hpp"
#include "editable.hpp"

namespace gallnet {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_network: return "E_INVALID";
    case errc::syntax: return "E_SYNTAX";
    case errc::hybrid_tag: return "E_HYBRID_TAG";
    case errc::duplicate_leaf: return "E_DUP_LEAF";
    case errc::unknown_label: return "E_UNKNOWN_VERTEX";
    case errc::unknown_arc: return "E_UNKNOWN_ARC";
    case errc::last_leaf: return "E_LAST_LEAF";
    case errc::degenerate: return "E_DEGENERATE";
    case errc::label_clash: return "E_LABEL_CLASH";
    case errc::too_many_reticulations: return "E_TOO_MANY_RETICULATIONS";
    case errc::too_few_leaves: return "E_TOO_FEW_LEAVES";
    case errc::budget_exceeded: return "E_BUDGET";
    case errc::not_admissible: return "E_NOT_ADMISSIBLE";
    case errc::not_four_blob: return "E_NOT_FOUR_BLOB";
    case errc::class_too_large: return "E_CLASS_TOO_LARGE";
    case errc::ground_set_mismatch: return "E_GROUND_SET_MISMATCH";
    case errc::ground_set_too_large: return "E_GROUND_SET_TOO_LARGE";
    case errc::level_unsupported: return "E_LEVEL_UNSUPPORTED";
    case errc::invalid_assignment: return "E_INVALID_ASSIGNMENT";
    case errc::blowup: return "E_BLOWUP";
    case errc::empty_set: return "E_EMPTY_SET";
    case errc::bad_input: return "E_BAD_INPUT";
  }
  return "E_UNKNOWN";
}

const char* violation_name(violation v) {
  switch (v) {
    case violation::empty_graph: return "E_EMPTY";
    case violation::malformed: return "E_MALFORMED";
    case violation::parallel_arcs: return "E_PARALLEL";
    case violation::no_root: return "E_NO_ROOT";
    case violation::multiple_roots: return "E_MULTI_ROOT";
    case violation::degree: return "E_DEGREE";
    case violation::cyclic: return "E_CYCLIC";
    case violation::unreachable: return "E_UNREACHABLE";
    case violation::unlabeled_leaf: return "E_UNLABELED_LEAF";
    case violation::labeled_internal: return "E_LABELED_INTERNAL";
    case violation::duplicate_label: return "E_DUP_LEAF";
  }
  return "E_UNKNOWN";
}

namespace {

std::string vertex_name(const raw_network& g, int v) {
  if (v >= 0 && v < (int)g.labels.size() && !g.labels[v].empty()) return "'" + g.labels[v] + "'";
  return "v" + std::to_string(v);
}

struct degree_info {
  std::vector<int> in, out;
};

degree_info degrees(const raw_network& g) {
  degree_info d;
  d.in.assign(g.vertex_count, 0);
  d.out.assign(g.vertex_count, 0);
  for (const arc& a : g.arcs) {
    ++d.out[a.tail];
    ++d.in[a.head];
  }
  return d;
}

// Biconnected components of the undirected view, as groups of arc indices.
// Assumes in-range arcs without self loops or parallels.
std::vector<std::vector<int>> biconnected_arc_groups(const raw_network& g) {
  int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int i = 0; i < (int)g.arcs.size(); ++i) {
    inc[g.arcs[i].tail].push_back({i, g.arcs[i].head});
    inc[g.arcs[i].head].push_back({i, g.arcs[i].tail});
  }
  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> groups;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent_arc) {
    disc[u] = low[u] = ++timer;
    for (auto [ai, w] : inc[u]) {
      if (ai == parent_arc) continue;
      if (!disc[w]) {
        stack.push_back(ai);
        dfs(w, ai);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          groups.emplace_back();
          for (;;) {
            int e = stack.back();
            stack.pop_back();
            groups.back().push_back(e);
            if (e == ai) break;
          }
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(ai);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (!disc[v]) dfs(v, -1);
  return groups;
}

blob_decomposition decompose(const raw_network& g, const degree_info& deg) {
  blob_decomposition d;
  for (const auto& grp : biconnected_arc_groups(g)) {
    if (grp.size() == 1) {
      d.cut_arcs.push_back(g.arcs[grp[0]]);
      continue;
    }
    blob b;
    std::set<int> vs, heads;
    for (int ai : grp) {
      b.arcs.push_back(g.arcs[ai]);
      vs.insert(g.arcs[ai].tail);
      vs.insert(g.arcs[ai].head);
      heads.insert(g.arcs[ai].head);
    }
    b.vertices.assign(vs.begin(), vs.end());
    std::sort(b.arcs.begin(), b.arcs.end());
    for (int v : b.vertices) {
      if (!heads.count(v)) b.root = v;
      if (deg.in[v] == 2) ++b.reticulation_count;
    }
    d.blobs.push_back(std::move(b));
  }
  std::sort(d.blobs.begin(), d.blobs.end(),
            [](const blob& a, const blob& b) { return a.vertices < b.vertices; });
  std::sort(d.cut_arcs.begin(), d.cut_arcs.end());
  return d;
}

}  // namespace

std::string validation_report::to_text() const {
  std::ostringstream os;
  os << "valid: " << (valid ? "yes" : "no") << "\n";
  for (const violation_entry& e : violations)
    os << violation_name(e.code) << ": " << e.detail << "\n";
  if (valid) {
    os << "level: " << *level << "\n";
    os << "blobs:";
    if (blob_sizes.empty()) {
      os << " none";
    } else {
      for (const blob_summary& b : blob_sizes) os << " " << b.vertices << "v/" << b.reticulations << "r";
    }
    os << "\n";
    os << "level1-admissible: " << (level1_admissible ? "yes" : "no") << "\n";
  }
  return os.str();
}

validation_report validate(const raw_network& g) {
  validation_report r;
  auto add = [&](violation c, std::string d) { r.violations.push_back({c, std::move(d)}); };

  if (g.vertex_count == 0) {
    add(violation::empty_graph, "graph has no vertices");
    return r;
  }
  if ((int)g.labels.size() != g.vertex_count) {
    add(violation::malformed, "label table does not match vertex count");
    return r;
  }
  bool shape_ok = true;
  for (const arc& a : g.arcs) {
    if (a.tail < 0 || a.tail >= g.vertex_count || a.head < 0 || a.head >= g.vertex_count) {
      add(violation::malformed, "arc endpoint out of range");
      shape_ok = false;
    } else if (a.tail == a.head) {
      add(violation::malformed, "self loop at " + vertex_name(g, a.tail));
      shape_ok = false;
    }
  }
  if (!shape_ok) return r;

  {
    std::vector<arc> sorted = g.arcs;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1] && (i == 0 || !(sorted[i - 1] == sorted[i])))
        add(violation::parallel_arcs,
            "parallel arcs " + vertex_name(g, sorted[i].tail) + " -> " + vertex_name(g, sorted[i].head));
  }

  degree_info deg = degrees(g);
  std::vector<int> roots;
  for (int v = 0; v < g.vertex_count; ++v)
    if (deg.in[v] == 0) roots.push_back(v);
  if (roots.empty()) add(violation::no_root, "no vertex of indegree 0");
  if (roots.size() > 1) {
    std::string list;
    for (int v : roots) list += (list.empty() ? "" : ", ") + vertex_name(g, v);
    add(violation::multiple_roots, "several indegree-0 vertices: " + list);
  }

  for (int v = 0; v < g.vertex_count; ++v) {
    int i = deg.in[v], o = deg.out[v];
    bool ok = (i == 0 && o == 2) || (i == 1 && (o == 0 || o == 2)) || (i == 2 && o == 1);
    if (!ok)
      add(violation::degree, vertex_name(g, v) + " has indegree " + std::to_string(i) +
                                 " and outdegree " + std::to_string(o));
  }

  std::map<std::string, int> seen;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (deg.out[v] == 0 && g.labels[v].empty())
      add(violation::unlabeled_leaf, vertex_name(g, v) + " is an unlabeled sink");
    if (deg.out[v] > 0 && !g.labels[v].empty())
      add(violation::labeled_internal, vertex_name(g, v) + " is labeled but not a leaf");
    if (!g.labels[v].empty()) {
      auto [it, fresh] = seen.emplace(g.labels[v], v);
      if (!fresh) add(violation::duplicate_label, "label '" + g.labels[v] + "' appears twice");
    }
  }

  {
    // Kahn's algorithm; leftovers sit on a cycle.
    std::vector<int> indeg = deg.in;
    std::vector<int> queue = roots;
    int done = 0;
    std::vector<std::vector<int>> out(g.vertex_count);
    for (const arc& a : g.arcs) out[a.tail].push_back(a.head);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++done;
      for (int w : out[v])
        if (--indeg[w] == 0) queue.push_back(w);
    }
    if (done != g.vertex_count) add(violation::cyclic, "directed cycle present");
    if (roots.size() == 1) {
      std::vector<bool> reach(g.vertex_count, false);
      std::vector<int> bfs = {roots[0]};
      reach[roots[0]] = true;
      while (!bfs.empty()) {
        int v = bfs.back();
        bfs.pop_back();
        for (int w : out[v])
          if (!reach[w]) {
            reach[w] = true;
            bfs.push_back(w);
          }
      }
      for (int v = 0; v < g.vertex_count; ++v)
        if (!reach[v]) add(violation::unreachable, vertex_name(g, v) + " unreachable from the root");
    }
  }

  r.valid = r.violations.empty();
  if (r.valid) {
    blob_decomposition d = decompose(g, deg);
    int lvl = 0, min_size = 0;
    for (const blob& b : d.blobs) {
      r.blob_sizes.push_back({(int)b.vertices.size(), b.reticulation_count});
      lvl = std::max(lvl, b.reticulation_count);
      min_size = min_size == 0 ? (int)b.vertices.size() : std::min(min_size, (int)b.vertices.size());
    }
    r.level = lvl;
    if (!d.blobs.empty()) r.min_blob_size = min_size;
    r.level1_admissible = lvl <= 1 && (d.blobs.empty() || min_size >= 4);
  }
  return r;
}

network network::build(const raw_network& g) {
  validation_report r = validate(g);
  if (!r.valid) fail(errc::invalid_network, "not a valid network\n" + r.to_text());
  network n;
  n.raw_ = g;
  n.children_.resize(g.vertex_count);
  n.parents_.resize(g.vertex_count);
  for (const arc& a : g.arcs) {
    n.children_[a.tail].push_back(a.head);
    n.parents_[a.head].push_back(a.tail);
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    std::sort(n.children_[v].begin(), n.children_[v].end());
    std::sort(n.parents_[v].begin(), n.parents_[v].end());
    if (n.parents_[v].empty()) n.root_ = v;
    if (!g.labels[v].empty()) n.alphabet_.push_back(g.labels[v]);
  }
  std::sort(n.alphabet_.begin(), n.alphabet_.end());
  return n;
}

int network::leaf(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (raw_.labels[v] == label && !label.empty()) return v;
  fail(errc::unknown_label, "no leaf labeled '" + label + "'");
}

std::vector<int> network::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_leaf(v)) out.push_back(v);
  return out;
}

std::vector<int> network::reticulations() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_reticulation(v)) out.push_back(v);
  return out;
}

int network::reticulation_count() const { return (int)reticulations().size(); }

std::vector<arc> network::arcs() const {
  std::vector<arc> out = raw_.arcs;
  std::sort(out.begin(), out.end());
  return out;
}

blob_decomposition blobs(const network& n) { return decompose(n.raw(), degrees(n.raw())); }

int level(const network& n) {
  int lvl = 0;
  for (const blob& b : blobs(n).blobs) lvl = std::max(lvl, b.reticulation_count);
  return lvl;
}

bool below(const network& n, int a, int b) {
  if (a < 0 || a >= n.vertex_count() || b < 0 || b >= n.vertex_count())
    fail(errc::unknown_label, "vertex id out of range");
  std::vector<bool> seen(n.vertex_count(), false);
  std::vector<int> stack = {b};
  seen[b] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == a) return true;
    for (int w : n.children(v))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

std::vector<int> lca(const network& n, const std::string& x, const std::string& y) {
  int lx = n.leaf(x), ly = n.leaf(y);
  auto ancestors = [&](int v) {
    std::set<int> anc;
    std::vector<int> stack = {v};
    anc.insert(v);
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int p : n.parents(w))
        if (anc.insert(p).second) stack.push_back(p);
    }
    return anc;
  };
  std::set<int> ax = ancestors(lx), ay = ancestors(ly);
  std::vector<int> common;
  for (int v : ax)
    if (ay.count(v)) common.push_back(v);
  std::vector<int> minimal;
  for (int c : common) {
    bool is_min = true;
    for (int d : common)
      if (d != c && below(n, d, c)) is_min = false;
    if (is_min) minimal.push_back(c);
  }
  return minimal;
}

std::vector<std::pair<std::string, std::string>> cherries(const network& n) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int v = 0; v < n.vertex_count(); ++v) {
    const auto& kids = n.children(v);
    if (kids.size() == 2 && n.is_leaf(kids[0]) && n.is_leaf(kids[1])) {
      std::string a = n.label(kids[0]), b = n.label(kids[1]);
      if (b < a) std::swap(a, b);
      out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

network remove_leaf(const network& n, const std::string& x) {
  int lx = n.leaf(x);
  if ((int)n.leaf_labels().size() < 3)
    fail(errc::last_leaf, "removing '" + x + "' would leave fewer than two leaves");
  detail::editable e = detail::editable::from(n);
  while (!e.v[lx].in.empty()) e.del_arc(e.v[lx].in.back(), lx);
  e.v[lx].alive = false;
  std::string note;
  if (!e.cleanup(detail::editable::on_parallel::reject, &note))
    fail(errc::degenerate, "removing '" + x + "': " + note);
  return network::build(e.compact(nullptr));
}

network attach_leaf(const network& n, arc e, const std::string& d) {
  if (d.empty()) fail(errc::bad_input, "leaf label must be non-empty");
  for (const std::string& l : n.leaf_labels())
    if (l == d) fail(errc::label_clash, "label '" + d + "' already in use");
  raw_network g = n.raw();
  auto it = std::find(g.arcs.begin(), g.arcs.end(), e);
  if (it == g.arcs.end())
    fail(errc::unknown_arc,
         "no arc " + std::to_string(e.tail) + " -> " + std::to_string(e.head));
  g.arcs.erase(it);
  int w = g.add_vertex();
  int lf = g.add_vertex(d);
  g.add_arc(e.tail, w);
  g.add_arc(w, e.head);
  g.add_arc(w, lf);
  return network::build(g);
}

std::vector<arc> non_cut_arcs(const network& n) {
  std::vector<arc> out;
  for (const blob& b : blobs(n).blobs) out.insert(out.end(), b.arcs.begin(), b.arcs.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> canonical_vertex_order(const network& n) {
  digraph g;
  g.n = n.vertex_count();
  g.out.resize(g.n);
  g.color.assign(g.n, 0);
  const auto& X = n.leaf_labels();
  for (int v = 0; v < g.n; ++v) {
    g.out[v] = n.children(v);
    if (n.is_leaf(v)) {
      auto it = std::lower_bound(X.begin(), X.end(), n.label(v));
      g.color[v] = 1 + (int)(it - X.begin());
    }
  }
  return canonical_order(g);
}

std::string canonical_newick(const network& n) {
  std::vector<int> order = canonical_vertex_order(n);
  std::vector<int> pos(n.vertex_count());
  for (int i = 0; i < n.vertex_count(); ++i) pos[order[i]] = i;

  std::string out;
  std::map<int, int> hybrid;
  std::function<void(int)> emit = [&](int v) {
    if (n.is_reticulation(v)) {
      auto it = hybrid.find(v);
      if (it != hybrid.end()) {
        out += "#H" + std::to_string(it->second);
        return;
      }
      int id = (int)hybrid.size() + 1;
      hybrid.emplace(v, id);
      out += '(';
      emit(n.children(v)[0]);
      out += ")#H" + std::to_string(id);
      return;
    }
    if (n.is_leaf(v)) {
      out += n.label(v);
      return;
    }
    std::vector<int> kids = n.children(v);
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    out += '(';
    for (size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ',';
      emit(kids[i]);
    }
    out += ')';
  };
  emit(n.root());
  out += ';';
  return out;
}

bool isomorphic(const network& a, const network& b) {
  if (a.leaf_labels() != b.leaf_labels()) return false;
  return canonical_newick(a) == canonical_newick(b);
}

}  // namespace gallnet
