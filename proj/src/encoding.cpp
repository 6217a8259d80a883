#include "gallnet/encoding.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace gallnet {

namespace {

// Theorem hypotheses: level <= 1, every blob a cycle of >= 4 vertices, and at
// least 3 leaves.
void require_admissible(const network& n) {
  validation_report r = validate(n.raw());
  if (!r.level1_admissible)
    fail(errc::not_admissible,
         "encodedness is characterized only for level-1 networks whose blobs have >= 4 vertices");
  if (n.leaf_labels().size() < 3)
    fail(errc::not_admissible, "encodedness needs at least 3 leaves");
}

std::vector<blob> four_blobs_of(const network& n) {
  std::vector<blob> out;
  for (const blob& b : blobs(n).blobs)
    if (b.vertices.size() == 4) out.push_back(b);
  return out;
}

// The three 4-cycle wirings over fixed role vertices (ha, hb, hc) and blob
// root r that display the same two local trees.  Derived by brute force over
// all level-1 networks on 3 leaves; the derivation is re-run in the tests.
std::array<std::vector<arc>, 3> wirings(int r, int ha, int hb, int hc) {
  return {{
      {{r, ha}, {ha, hb}, {hb, hc}, {r, hc}},  // ha over hb, reticulation hc
      {{r, ha}, {ha, hb}, {r, hc}, {hc, hb}},  // ha, hc opposite, reticulation hb
      {{r, hc}, {hc, hb}, {hb, ha}, {r, ha}},  // hc over hb, reticulation ha
  }};
}

// Role vertices of an existing 4-blob, so that its wiring is one of the three.
std::array<int, 3> blob_roles(const network& n, const blob& b) {
  int ret = -1;
  std::vector<int> sides;
  for (int v : b.vertices) {
    if (n.is_reticulation(v)) ret = v;
    else if (v != b.root) sides.push_back(v);
  }
  auto in_blob_arc = [&](int t, int h) {
    return std::count(b.arcs.begin(), b.arcs.end(), arc{t, h}) == 1;
  };
  if (in_blob_arc(sides[0], sides[1])) return {sides[0], sides[1], ret};  // stacked
  if (in_blob_arc(sides[1], sides[0])) return {sides[1], sides[0], ret};  // stacked
  return {sides[0], ret, sides[1]};                                       // opposite
}

network rewire(const network& n, const std::vector<const blob*>& bs,
               const std::vector<std::vector<arc>>& chosen) {
  raw_network g = n.raw();
  for (const blob* b : bs)
    for (const arc& e : b->arcs)
      g.arcs.erase(std::find(g.arcs.begin(), g.arcs.end(), e));
  for (const std::vector<arc>& add : chosen)
    for (const arc& e : add) g.add_arc(e.tail, e.head);
  return network::build(g);
}

long long pow3(int b) {
  long long v = 1;
  for (int i = 0; i < b; ++i) v *= 3;
  return v;
}

}  // namespace

std::vector<network> four_blob_variants(const network& n, const blob& b) {
  bool known = false;
  for (const blob& x : blobs(n).blobs)
    if (x.vertices == b.vertices) known = true;
  if (!known || b.vertices.size() != 4)
    fail(errc::not_four_blob, "need a 4-vertex blob of this network");
  auto [ha, hb, hc] = blob_roles(n, b);
  std::vector<network> out;
  for (const std::vector<arc>& w : wirings(b.root, ha, hb, hc))
    out.push_back(rewire(n, {&b}, {w}));
  std::sort(out.begin(), out.end(), [](const network& x, const network& y) {
    return canonical_newick(x) < canonical_newick(y);
  });
  return out;
}

std::vector<network> equivalence_class(const network& n, long long class_cap) {
  require_admissible(n);
  std::vector<blob> fb = four_blobs_of(n);
  int b = (int)fb.size();
  if (b > 38 || pow3(b) > class_cap)
    fail(errc::class_too_large, "class size 3^" + std::to_string(b) + " exceeds the cap of " +
                                    std::to_string(class_cap));
  std::vector<std::array<std::vector<arc>, 3>> options;
  std::vector<const blob*> ptrs;
  for (const blob& x : fb) {
    auto [ha, hbv, hc] = blob_roles(n, x);
    options.push_back(wirings(x.root, ha, hbv, hc));
    ptrs.push_back(&x);
  }
  std::vector<network> members;
  std::vector<std::vector<arc>> chosen(b);
  std::function<void(int)> walk = [&](int i) {
    if (i == b) {
      members.push_back(rewire(n, ptrs, chosen));
      return;
    }
    for (int c = 0; c < 3; ++c) {
      chosen[i] = options[i][c];
      walk(i + 1);
    }
  };
  walk(0);

  std::set<std::string> canon;
  std::set<triplet> want = softwired_triplets(n).triplets;
  for (const network& m : members) {
    canon.insert(canonical_newick(m));
    if (softwired_triplets(m).triplets != want)
      fail(errc::invalid_network, "rewiring changed the triplet system; wiring table broken");
  }
  if ((long long)canon.size() != pow3(b))
    fail(errc::invalid_network, "rewirings collide; wiring table broken");
  std::sort(members.begin(), members.end(), [](const network& x, const network& y) {
    return canonical_newick(x) < canonical_newick(y);
  });
  return members;
}

encoding_report is_encoded(const network& n, bool with_witnesses, long long class_cap) {
  require_admissible(n);
  encoding_report r;
  r.four_blobs = four_blobs_of(n);
  r.encoded = r.four_blobs.empty();
  r.class_size = pow3((int)r.four_blobs.size());
  if (with_witnesses) {
    std::vector<std::string> w;
    for (const network& m : equivalence_class(n, class_cap)) w.push_back(canonical_newick(m));
    r.witnesses = std::move(w);
  }
  return r;
}

std::string encoding_report::to_text() const {
  std::string out = std::string("encoded: ") + (encoded ? "yes" : "no") +
                    ", four-blobs: " + std::to_string(four_blobs.size()) +
                    ", class: " + std::to_string(class_size) + "\n";
  if (witnesses)
    for (const std::string& w : *witnesses) out += w + "\n";
  return out;
}

std::string encoding_report::to_json() const {
  nlohmann::json j;
  j["encoded"] = encoded;
  j["four_blobs"] = four_blobs.size();
  j["class"] = class_size;
  if (witnesses) j["witnesses"] = *witnesses;
  return j.dump(2) + "\n";
}

bool systems_equal(const network& n1, const network& n2, system_kind which) {
  if (n1.leaf_labels() != n2.leaf_labels())
    fail(errc::ground_set_mismatch, "networks have different leaf sets");
  switch (which) {
    case system_kind::triplets:
      return softwired_triplets(n1).triplets == softwired_triplets(n2).triplets;
    case system_kind::trees:
      return tree_lines(displayed_trees(n1)) == tree_lines(displayed_trees(n2));
    case system_kind::clusters_soft:
      return softwired_clusters(n1).clusters == softwired_clusters(n2).clusters;
    case system_kind::clusters_hard:
      return hardwired_clusters(n1).clusters == hardwired_clusters(n2).clusters;
  }
  fail(errc::bad_input, "unknown system kind");
}

multree mul_tree(const network& n, long long node_cap) {
  multree m;
  std::function<int(int)> unfold = [&](int v) -> int {
    while (n.is_reticulation(v)) v = n.children(v)[0];
    if ((long long)m.nodes.size() >= node_cap)
      fail(errc::blowup, "unfolding exceeds " + std::to_string(node_cap) + " vertices");
    int id = (int)m.nodes.size();
    m.nodes.emplace_back();
    if (n.is_leaf(v)) {
      m.nodes[id].label = n.label(v);
      return id;
    }
    std::vector<int> kids;
    for (int c : n.children(v)) kids.push_back(unfold(c));
    m.nodes[id].kids = std::move(kids);
    return id;
  };
  m.root = unfold(n.root());
  return m;
}

std::map<std::string, int> multree::multiplicity() const {
  std::map<std::string, int> mult;
  for (const node& nd : nodes)
    if (nd.kids.empty()) ++mult[nd.label];
  return mult;
}

std::string multree::newick() const {
  // children ordered by smallest leaf label below them, serialization as the
  // tie-break for repeated labels
  std::function<std::pair<std::string, std::string>(int)> emit =
      [&](int v) -> std::pair<std::string, std::string> {
    if (nodes[v].kids.empty()) return {nodes[v].label, nodes[v].label};
    std::vector<std::pair<std::string, std::string>> parts;
    for (int k : nodes[v].kids) parts.push_back(emit(k));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += parts[i].second;
    }
    return {parts[0].first, out + ")"};
  };
  return emit(root).second + ";";
}

}  // namespace gallnet
