#include "gallnet/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "gallnet/canon.hpp"
#include "gallnet/encoding.hpp"
#include "gallnet/hierarchy.hpp"
#include "gallnet/newick.hpp"

namespace gallnet {

namespace {

bool acyclic(int n, const std::vector<arc>& arcs) {
  std::vector<int> indeg(n, 0);
  for (const arc& a : arcs) indeg[a.head]++;
  std::vector<int> ready;
  for (int v = 0; v < n; v++)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    seen++;
    for (const arc& a : arcs)
      if (a.tail == v && --indeg[a.head] == 0) ready.push_back(a.head);
  }
  return seen == n;
}

// Undirected multigraph biconnectivity; a parallel pair is never a bridge.
bool biconnected(int n, const std::vector<arc>& arcs) {
  if (n < 2) return false;
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < (int)arcs.size(); i++) {
    adj[arcs[i].tail].push_back({arcs[i].head, i});
    adj[arcs[i].head].push_back({arcs[i].tail, i});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool ok = true;
  std::function<void(int, int)> dfs = [&](int v, int in_edge) {
    disc[v] = low[v] = timer++;
    int kids = 0;
    for (auto [w, e] : adj[v]) {
      if (e == in_edge) continue;
      if (disc[w] < 0) {
        kids++;
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) ok = false;                    // bridge
        if (in_edge >= 0 && low[w] >= disc[v]) ok = false;   // articulation
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (in_edge < 0 && kids > 1) ok = false;  // articulation at the DFS root
  };
  dfs(0, -1);
  for (int v = 0; v < n; v++)
    if (disc[v] < 0) ok = false;  // disconnected
  return ok;
}

std::vector<std::string> checked_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> xs = labels;
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    fail(errc::bad_input, "duplicate label in ground set");
  if (!xs.empty() && xs.front().empty()) fail(errc::bad_input, "empty label in ground set");
  return xs;
}

// Renumbers the "#H<k>" tags of one assembled fragment into a shared counter
// space so fragments can be concatenated without tag collisions.
std::string retag(const std::string& s, int& counter) {
  std::string out;
  std::map<std::string, int> seen;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '#') {
      out += s[i++];
      continue;
    }
    size_t j = i + 2;  // over "#H"
    while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
    std::string tag = s.substr(i, j - i);
    auto [it, fresh] = seen.emplace(tag, 0);
    if (fresh) it->second = ++counter;
    out += "#H" + std::to_string(it->second);
    i = j;
  }
  return out;
}

}  // namespace

std::vector<generator> enumerate_generators(int k) {
  if (k < 1 || k > 3) fail(errc::level_unsupported, "generator enumeration supports levels 1..3");
  std::map<std::string, generator> found;
  for (int z = std::max(0, 2 - k); z <= k; z++) {
    int s = k + z - 2;           // splits
    int vc = 1 + s + k;          // root + splits + reticulations
    // vertex layout: 0 root, 1..s splits, then k-z flow reticulations, then z sinks
    std::vector<int> owners = {0, 0};
    for (int v = 1; v <= s; v++) {
      owners.push_back(v);
      owners.push_back(v);
    }
    for (int v = s + 1; v <= s + k - z; v++) owners.push_back(v);
    std::vector<int> cap(vc, 0);
    for (int v = 1; v <= s; v++) cap[v] = 1;
    for (int v = s + 1; v <= s + k; v++) cap[v] = 2;
    std::vector<arc> acc;
    std::function<void(int)> go = [&](int slot) {
      if (slot == (int)owners.size()) {
        std::vector<arc> arcs = acc;
        std::sort(arcs.begin(), arcs.end());
        if (!acyclic(vc, arcs) || !biconnected(vc, arcs)) return;
        digraph dg;
        dg.n = vc;
        dg.out.assign(vc, {});
        dg.color.assign(vc, 0);
        for (const arc& a : arcs) dg.out[a.tail].push_back(a.head);
        std::string code = canonical_code(dg);
        if (found.count(code)) return;
        std::vector<int> order = canonical_order(dg);
        std::vector<int> pos(vc);
        for (int i = 0; i < vc; i++) pos[order[i]] = i;
        generator g;
        g.vertex_count = vc;
        for (const arc& a : arcs) g.arcs.push_back({pos[a.tail], pos[a.head]});
        std::sort(g.arcs.begin(), g.arcs.end());
        std::vector<int> outdeg(vc, 0), indeg(vc, 0);
        for (const arc& a : g.arcs) {
          outdeg[a.tail]++;
          indeg[a.head]++;
        }
        for (int v = 0; v < vc; v++)
          if (indeg[v] == 2 && outdeg[v] == 0) g.sink_rets.push_back(v);
        g.level = k;
        g.code = code;
        found.emplace(code, std::move(g));
        return;
      }
      int o = owners[slot];
      // parallel arcs are allowed; same-owner targets non-decreasing
      int lo = (slot > 0 && owners[slot - 1] == o) ? acc.back().head : 1;
      for (int t = lo; t < vc; t++) {
        if (t == o || cap[t] == 0) continue;
        cap[t]--;
        acc.push_back({o, t});
        go(slot + 1);
        acc.pop_back();
        cap[t]++;
      }
    };
    go(0);
  }
  std::vector<generator> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [](const generator& a, const generator& b) {
    return std::tie(a.vertex_count, a.arcs, a.code) < std::tie(b.vertex_count, b.arcs, b.code);
  });
  return out;
}

network hang_leaves(const generator& g, const leaf_assignment& a) {
  if ((int)a.on_arc.size() != (int)g.arcs.size() ||
      (int)a.on_sink.size() != (int)g.sink_rets.size())
    fail(errc::bad_input, "assignment shape does not match the generator");
  raw_network r;
  for (int v = 0; v < g.vertex_count; v++) r.add_vertex();
  for (size_t i = 0; i < g.arcs.size(); i++) {
    int prev = g.arcs[i].tail;
    for (const std::string& leaf : a.on_arc[i]) {
      int mid = r.add_vertex();
      int tip = r.add_vertex(leaf);
      r.add_arc(prev, mid);
      r.add_arc(mid, tip);
      prev = mid;
    }
    r.add_arc(prev, g.arcs[i].head);
  }
  for (size_t j = 0; j < g.sink_rets.size(); j++) {
    int tip = r.add_vertex(a.on_sink[j]);
    r.add_arc(g.sink_rets[j], tip);
  }
  validation_report rep = validate(r);
  if (!rep.valid || (rep.min_blob_size && *rep.min_blob_size < 4))
    fail(errc::invalid_assignment, "assignment yields an inadmissible network:\n" + rep.to_text());
  return network::build(r);
}

std::vector<network> enumerate_simple(int k, const std::vector<std::string>& labels) {
  std::vector<generator> gens = enumerate_generators(k);
  std::vector<std::string> xs = checked_labels(labels);
  int n = (int)xs.size();
  std::map<std::string, network> out;
  for (const generator& g : gens) {
    int z = (int)g.sink_rets.size();
    if (n < z) continue;
    leaf_assignment asg;
    asg.on_arc.assign(g.arcs.size(), {});
    asg.on_sink.assign(z, "");
    std::vector<char> used(n, 0);
    std::vector<std::string> rest;
    // every ordered per-arc sequence arises from exactly one insertion run
    std::function<void(size_t)> place = [&](size_t li) {
      if (li == rest.size()) {
        try {
          network net = hang_leaves(g, asg);
          std::string code = canonical_newick(net);
          out.emplace(std::move(code), std::move(net));
        } catch (const error& e) {
          if (e.code() != errc::invalid_assignment) throw;
        }
        return;
      }
      for (size_t ai = 0; ai < asg.on_arc.size(); ai++)
        for (size_t p = 0; p <= asg.on_arc[ai].size(); p++) {
          asg.on_arc[ai].insert(asg.on_arc[ai].begin() + p, rest[li]);
          place(li + 1);
          asg.on_arc[ai].erase(asg.on_arc[ai].begin() + p);
        }
    };
    std::function<void(int)> pick_sinks = [&](int j) {
      if (j == z) {
        rest.clear();
        for (int i = 0; i < n; i++)
          if (!used[i]) rest.push_back(xs[i]);
        place(0);
        return;
      }
      for (int i = 0; i < n; i++) {
        if (used[i]) continue;
        used[i] = 1;
        asg.on_sink[j] = xs[i];
        pick_sinks(j + 1);
        used[i] = 0;
      }
    };
    pick_sinks(0);
  }
  std::vector<network> res;
  res.reserve(out.size());
  for (auto& [code, net] : out) res.push_back(std::move(net));
  return res;
}

std::vector<network> enumerate_level1(const std::vector<std::string>& labels, bool include_trees) {
  std::vector<std::string> xs = checked_labels(labels);
  if (xs.size() > 6) fail(errc::ground_set_too_large, "level-1 enumeration handles at most 6 labels");
  int n = (int)xs.size();
  if (n == 0) return {};
  std::string dummy = "_d";
  while (std::binary_search(xs.begin(), xs.end(), dummy)) dummy += "x";

  // Pieces on a label subset: a leaf, a join of two pieces, or a cycle blob
  // (two chains of pendant pieces meeting in the reticulation, whose child
  // carries another piece).  Every admissible level-1 network decomposes this
  // way below its root; mirror-image chains are collapsed by the dedup wrap.
  std::vector<std::vector<std::string>> memo(std::size_t(1) << n);
  std::vector<char> done(std::size_t(1) << n, 0);
  std::function<const std::vector<std::string>&(unsigned)> pieces =
      [&](unsigned mask) -> const std::vector<std::string>& {
    if (done[mask]) return memo[mask];
    std::map<std::string, std::string> dedup;  // wrapped canonical form -> fragment
    auto add = [&](const std::string& p) {
      network w = parse_network("(" + p + "," + dummy + ");");
      dedup.emplace(canonical_newick(w), p);
    };
    if (std::popcount(mask) == 1) {
      memo[mask] = {xs[std::countr_zero(mask)]};
      done[mask] = 1;
      return memo[mask];
    }
    unsigned low = mask & (0u - mask);
    for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;  // unordered pair: keep the lowest label left
      for (const std::string& pa : pieces(sub))
        for (const std::string& pb : pieces(mask ^ sub)) {
          int ctr = 0;
          std::string a = retag(pa, ctr);
          add("(" + a + "," + retag(pb, ctr) + ")");
        }
    }
    for (unsigned q = (mask - 1) & mask; q; q = (q - 1) & mask) {
      unsigned rest = mask ^ q;
      if (std::popcount(rest) < 2) continue;  // need >= 2 pendant blocks
      std::vector<unsigned> blocks;
      std::function<void(unsigned)> split = [&](unsigned left) {
        if (!left) {
          int t = (int)blocks.size();
          if (t < 2) return;
          std::vector<std::string> chosen(t);
          std::function<void(int, const std::string&)> product = [&](int bi, const std::string& qp) {
            if (bi == t) {
              for (int c = 0; c <= t; c++) {
                int ctr = 0;
                std::string qq = retag(qp, ctr);
                std::vector<std::string> bp;
                bp.reserve(t);
                for (const std::string& piece : chosen) bp.push_back(retag(piece, ctr));
                int tag = ++ctr;
                std::string chain = "(" + qq + ")#H" + std::to_string(tag);
                for (int i = c - 1; i >= 0; i--) chain = "(" + bp[i] + "," + chain + ")";
                std::string other = "#H" + std::to_string(tag);
                for (int i = t - 1; i >= c; i--) other = "(" + bp[i] + "," + other + ")";
                add("(" + chain + "," + other + ")");
              }
              return;
            }
            for (const std::string& piece : pieces(blocks[bi])) {
              chosen[bi] = piece;
              product(bi + 1, qp);
            }
          };
          for (const std::string& qp : pieces(q)) product(0, qp);
          return;
        }
        // blocks are an ordered sequence: both chain orientations are built
        // and the mirror duplicates collapse in the dedup wrap
        for (unsigned b = left; b; b = (b - 1) & left) {
          blocks.push_back(b);
          split(left ^ b);
          blocks.pop_back();
        }
      };
      split(rest);
    }
    std::vector<std::string> result;
    result.reserve(dedup.size());
    for (auto& [code, p] : dedup) result.push_back(std::move(p));
    memo[mask] = std::move(result);
    done[mask] = 1;
    return memo[mask];
  };

  std::map<std::string, network> out;
  for (const std::string& p : pieces((1u << n) - 1)) {
    if (p.find('(') == std::string::npos) continue;  // a bare leaf is not a network
    network net = parse_network(p + ";");
    if (!include_trees && net.reticulation_count() == 0) continue;
    std::string code = canonical_newick(net);
    out.emplace(std::move(code), std::move(net));
  }
  std::vector<network> res;
  res.reserve(out.size());
  for (auto& [code, net] : out) res.push_back(std::move(net));
  return res;
}

std::vector<network> enumerate_level1_naive(const std::vector<std::string>& labels,
                                            bool include_trees) {
  std::vector<std::string> xs = checked_labels(labels);
  if (xs.size() > 4) fail(errc::ground_set_too_large, "naive enumeration handles at most 4 labels");
  int n = (int)xs.size();
  if (n == 0) return {};
  std::map<std::string, network> out;
  // admissibility forces 3r reticulation-free vertices into r disjoint blobs
  int rmax = (n - 1) / 2;
  for (int r = include_trees ? 0 : 1; r <= rmax; r++) {
    int s = n + r - 2;
    if (s < 0) continue;
    int m = 1 + s + r;  // internal vertices, root first, leaves after
    int vc = m + n;
    std::vector<int> retpos(r);
    std::function<void(int, int)> choose = [&](int idx, int from) {
      if (idx == r) {
        std::vector<char> is_ret(m, 0);
        for (int p : retpos) is_ret[p] = 1;
        std::vector<int> owners;
        for (int v = 0; v < m; v++) {
          owners.push_back(v);
          if (!is_ret[v]) owners.push_back(v);
        }
        std::vector<int> cap(vc, 0);
        for (int v = 1; v < m; v++) cap[v] = is_ret[v] ? 2 : 1;
        for (int v = m; v < vc; v++) cap[v] = 1;
        std::vector<arc> acc;
        std::function<void(int)> go = [&](int slot) {
          if (slot == (int)owners.size()) {
            raw_network g;
            for (int v = 0; v < m; v++) g.add_vertex();
            for (int i = 0; i < n; i++) g.add_vertex(xs[i]);
            for (const arc& a : acc) g.add_arc(a.tail, a.head);
            validation_report rep = validate(g);
            if (!rep.valid || !rep.level1_admissible) return;
            network net = network::build(g);
            std::string code = canonical_newick(net);
            out.emplace(std::move(code), std::move(net));
            return;
          }
          int o = owners[slot];
          // forward arcs keep the layout a topological order; strict increase
          // per owner rules out parallel arcs
          int lo = (slot > 0 && owners[slot - 1] == o) ? acc.back().head + 1 : o + 1;
          for (int t = lo; t < vc; t++) {
            if (cap[t] == 0) continue;
            cap[t]--;
            acc.push_back({o, t});
            go(slot + 1);
            acc.pop_back();
            cap[t]++;
          }
        };
        go(0);
        return;
      }
      for (int p = from; p < m; p++) {
        retpos[idx] = p;
        choose(idx + 1, p + 1);
      }
    };
    choose(0, 1);
  }
  std::vector<network> res;
  res.reserve(out.size());
  for (auto& [code, net] : out) res.push_back(std::move(net));
  return res;
}

oracle_report verify_theorem(int max_leaves) {
  if (max_leaves < 3) fail(errc::bad_input, "theorem verification needs at least 3 leaves");
  if (max_leaves > 5) fail(errc::ground_set_too_large, "theorem verification handles at most 5 leaves");
  static const std::vector<std::string> pool = {"a", "b", "c", "d", "e"};
  oracle_report rep;
  for (const char* key : {"partitions-coincide", "class-size", "class-members",
                          "encoded-iff-singleton", "weak-hierarchy", "closure-pair", "size-bound",
                          "triplet-agreement", "unfolding-injective", "roundtrip"})
    rep.checks[key] = true;
  auto blame = [&](const std::string& check, const std::string& witness) {
    rep.checks[check] = false;
    if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(witness);
  };
  std::ostringstream text;
  for (int n = 3; n <= max_leaves; n++) {
    std::vector<std::string> xs(pool.begin(), pool.begin() + n);
    std::vector<network> nets = enumerate_level1(xs, true);
    int count = (int)nets.size();
    std::vector<std::string> canon(count), trip(count), tree(count), soft(count), mul(count);
    std::vector<int> fourblobs(count);
    std::vector<char> encoded(count);
    for (int i = 0; i < count; i++) {
      const network& net = nets[i];
      canon[i] = canonical_newick(net);
      if (canonical_newick(parse_network(write(net))) != canon[i]) blame("roundtrip", canon[i]);
      cluster_system cs = softwired_clusters(net);
      cluster_system ch = hardwired_clusters(net);
      if (!is_weak_hierarchy(cs).ok || !is_weak_hierarchy(ch).ok) blame("weak-hierarchy", canon[i]);
      if (!closure_pair_certificate(cs).ok || !closure_pair_certificate(ch).ok)
        blame("closure-pair", canon[i]);
      if (!check_size_bound(cs) || !check_size_bound(ch)) blame("size-bound", canon[i]);
      trip[i] = triplet_lines(softwired_triplets(net));
      if (trip[i] != triplet_lines(consistent_triplets(net)) ||
          trip[i] != triplet_lines(system_triplets(cs)))
        blame("triplet-agreement", canon[i]);
      tree[i] = tree_lines(displayed_trees(net));
      soft[i] = cluster_lines(cs);
      encoding_report er = is_encoded(net);
      fourblobs[i] = (int)er.four_blobs.size();
      encoded[i] = er.encoded;
      mul[i] = mul_tree(net).newick();
    }
    // the three induced equivalences are the same partition
    std::map<std::string, std::string> t2r, r2t, t2s, s2t;
    for (int i = 0; i < count; i++) {
      for (auto [m, k, v] : {std::tie(t2r, trip[i], tree[i]), std::tie(r2t, tree[i], trip[i]),
                             std::tie(t2s, trip[i], soft[i]), std::tie(s2t, soft[i], trip[i])}) {
        auto [it, fresh] = m.emplace(k, v);
        if (!fresh && it->second != v) blame("partitions-coincide", canon[i]);
      }
    }
    std::map<std::string, std::vector<int>> classes;
    for (int i = 0; i < count; i++) classes[trip[i]].push_back(i);
    std::size_t largest = 0;
    for (auto& [key, members] : classes) {
      largest = std::max(largest, members.size());
      std::vector<std::string> expect;
      for (int i : members) expect.push_back(canon[i]);
      std::sort(expect.begin(), expect.end());
      long long want = 1;
      for (int b = 0; b < fourblobs[members[0]]; b++) want *= 3;
      if ((long long)members.size() != want) blame("class-size", canon[members[0]]);
      for (int i : members) {
        if (fourblobs[i] != fourblobs[members[0]]) blame("class-size", canon[i]);
        if (encoded[i] != (members.size() == 1)) blame("encoded-iff-singleton", canon[i]);
        std::vector<std::string> got;
        for (const network& m : equivalence_class(nets[i])) got.push_back(canonical_newick(m));
        if (got != expect) blame("class-members", canon[i]);
      }
    }
    std::map<std::string, std::string> seen_mul;
    for (int i = 0; i < count; i++) {
      auto [it, fresh] = seen_mul.emplace(mul[i], canon[i]);
      if (!fresh) blame("unfolding-injective", it->second + " vs " + canon[i]);
    }
    text << "n=" << n << ": networks=" << count << " classes=" << classes.size()
         << " largest-class=" << largest << "\n";
  }
  rep.ok = true;
  for (auto& [key, val] : rep.checks) rep.ok = rep.ok && val;
  for (auto& [key, val] : rep.checks) text << key << ": " << (val ? "ok" : "FAIL") << "\n";
  rep.text = text.str();
  return rep;
}

oracle_report verify_lemma_montpellier() {
  oracle_report rep;
  network seed = parse_network("((a,(b,(c)#H1)),#H1);");
  std::vector<network> carriers = equivalence_class(seed);
  rep.checks["three-carriers"] = carriers.size() == 3;
  triplet_system want;
  want.ground = {"a", "b", "c"};
  want.triplets = {triplet("a", "b", "c"), triplet("b", "c", "a")};
  rep.checks["carrier-system"] = true;
  for (const network& c : carriers)
    if (softwired_triplets(c).triplets != want.triplets) rep.checks["carrier-system"] = false;
  std::vector<std::vector<std::string>> sigs(carriers.size());
  rep.checks["four-attachments"] = true;
  for (std::size_t i = 0; i < carriers.size(); i++) {
    for (const arc& e : non_cut_arcs(carriers[i]))
      sigs[i].push_back(triplet_lines(consistent_triplets(attach_leaf(carriers[i], e, "d"))));
    if (sigs[i].size() != 4) rep.checks["four-attachments"] = false;
  }
  rep.checks["cross-distinct"] = true;
  for (std::size_t i = 0; i < sigs.size(); i++)
    for (std::size_t j = i + 1; j < sigs.size(); j++)
      for (const std::string& si : sigs[i])
        for (const std::string& sj : sigs[j])
          if (si == sj) {
            rep.checks["cross-distinct"] = false;
            rep.counterexamples.push_back(canonical_newick(carriers[i]) + " and " +
                                          canonical_newick(carriers[j]) + " share:\n" + si);
          }
  rep.ok = true;
  std::ostringstream text;
  text << "carriers of {a,b|c, b,c|a}: " << carriers.size() << "\n";
  for (const network& c : carriers) text << "  " << canonical_newick(c) << "\n";
  for (auto& [key, val] : rep.checks) {
    rep.ok = rep.ok && val;
    text << key << ": " << (val ? "ok" : "FAIL") << "\n";
  }
  rep.text = text.str();
  return rep;
}

std::optional<network> level1_consistent(const cluster_system& cs) {
  if (cs.ground.size() > 5)
    fail(errc::ground_set_too_large, "consistency search handles at most 5 labels");
  for (network& net : enumerate_level1(cs.ground, true))
    if (tree_consistent(cs, net)) return std::move(net);
  return std::nullopt;
}

std::string phenomena_report::to_text() const {
  std::ostringstream out;
  const phenomenon* ps[] = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; i++) {
    out << "P" << (i + 1) << ": " << (ps[i]->found ? "found" : "not found");
    if (!ps[i]->description.empty()) out << " - " << ps[i]->description;
    out << "\n";
    for (const std::string& w : ps[i]->witnesses) {
      std::size_t from = 0;
      while (from < w.size()) {
        std::size_t to = w.find('\n', from);
        if (to == std::string::npos) to = w.size();
        out << "  " << w.substr(from, to - from) << "\n";
        from = to + 1;
      }
    }
  }
  return out.str();
}

std::string phenomena_report::to_json() const {
  nlohmann::json j;
  const phenomenon* ps[] = {&p1, &p2, &p3, &p4};
  const char* keys[] = {"p1", "p2", "p3", "p4"};
  for (int i = 0; i < 4; i++)
    j[keys[i]] = {{"found", ps[i]->found},
                  {"description", ps[i]->description},
                  {"witnesses", ps[i]->witnesses}};
  j["all_found"] = all_found();
  return j.dump(2) + "\n";
}

phenomena_report search_level2_phenomena(int max_leaves) {
  if (max_leaves < 3) fail(errc::bad_input, "phenomena search needs at least 3 leaves");
  if (max_leaves > 4) fail(errc::ground_set_too_large, "phenomena search handles at most 4 leaves");
  static const std::vector<std::string> pool = {"a", "b", "c", "d"};
  phenomena_report rep;

  if (max_leaves >= 4) {
    const cluster c1 = {"a", "b", "c"}, c2 = {"a", "b", "d"}, c3 = {"b", "c", "d"};
    for (const network& net : enumerate_simple(2, pool)) {
      cluster_system s = softwired_clusters(net);
      if (!s.clusters.count(c1) || !s.clusters.count(c2) || !s.clusters.count(c3)) continue;
      if (is_weak_hierarchy(s).ok) continue;
      rep.p1.found = true;
      rep.p1.description =
          "softwired clusters contain {a,b,c},{a,b,d},{b,c,d} and violate the weak hierarchy "
          "condition";
      rep.p1.witnesses = {canonical_newick(net), cluster_lines(s)};
      break;
    }
  }

  for (int nl = 3; nl <= max_leaves && !rep.p2.found; nl++) {
    std::vector<std::string> xs(pool.begin(), pool.begin() + nl);
    std::vector<network> trees;
    for (network& t : enumerate_level1(xs, true))
      if (t.reticulation_count() == 0) trees.push_back(std::move(t));
    for (const network& net : enumerate_simple(2, xs)) {
      std::set<std::string> shown;
      for (const network& t : displayed_trees(net).trees) shown.insert(canonical_newick(t));
      cluster_system s = softwired_clusters(net);
      for (const network& t : trees) {
        if (shown.count(canonical_newick(t))) continue;
        cluster_system ct = hardwired_clusters(t);
        bool inside = true;
        for (const cluster& c : ct.clusters) inside = inside && s.clusters.count(c);
        if (!inside) continue;
        rep.p2.found = true;
        rep.p2.description = "tree clusters all softwired in the network, tree not displayed";
        rep.p2.witnesses = {canonical_newick(net), canonical_newick(t)};
        break;
      }
      if (rep.p2.found) break;
    }
  }

  for (int nl = 3; nl <= max_leaves && !rep.p3.found; nl++) {
    std::vector<std::string> xs(pool.begin(), pool.begin() + nl);
    for (const network& net : enumerate_simple(2, xs)) {
      cluster_system s = softwired_clusters(net);
      for (const triplet& t : consistent_triplets(net).triplets) {
        if (s.clusters.count({t.a, t.b})) continue;
        rep.p3.found = true;
        rep.p3.description = "consistent triplet whose cherry pair is not a softwired cluster";
        rep.p3.witnesses = {canonical_newick(net), t.to_string(), cluster_lines(s)};
        break;
      }
      if (rep.p3.found) break;
    }
  }

  if (max_leaves >= 4) {
    triplet_system target;
    target.ground = {"a", "b", "x1", "x2"};
    target.triplets = {triplet("a", "b", "x1"),   triplet("a", "x1", "b"),
                       triplet("b", "x1", "a"),   triplet("a", "b", "x2"),
                       triplet("a", "x2", "b"),   triplet("b", "x2", "a"),
                       triplet("a", "x2", "x1"),  triplet("x1", "x2", "a"),
                       triplet("b", "x2", "x1"),  triplet("x1", "x2", "b")};
    std::string target_lines = triplet_lines(target);
    std::vector<std::string> hits;
    for (const network& net : enumerate_simple(2, target.ground)) {
      if (triplet_lines(consistent_triplets(net)) != target_lines) continue;
      hits.push_back(canonical_newick(net));
      if (hits.size() == 2) break;
    }
    if (hits.size() == 2) {
      rep.p4.found = true;
      rep.p4.description = "two non-isomorphic simple level-2 networks share one triplet system";
      rep.p4.witnesses = {hits[0], hits[1], target_lines};
    }
  }

  return rep;
}

}  // namespace gallnet
