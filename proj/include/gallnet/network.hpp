#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallnet/error.hpp"

namespace gallnet {

struct arc {
  int tail = -1;
  int head = -1;
  friend bool operator==(const arc&, const arc&) = default;
  friend auto operator<=>(const arc&, const arc&) = default;
};

// Graph under construction; may violate every well-formedness rule.
// Vertex ids are 0..vertex_count-1; labels[v] == "" means unlabeled.
struct raw_network {
  int vertex_count = 0;
  std::vector<arc> arcs;
  std::vector<std::string> labels;

  int add_vertex(const std::string& label = "") {
    labels.push_back(label);
    return vertex_count++;
  }
  void add_arc(int tail, int head) { arcs.push_back({tail, head}); }
};

enum class violation {
  empty_graph,
  malformed,        // arc endpoint out of range, self-loop, label table size mismatch
  parallel_arcs,
  no_root,
  multiple_roots,
  degree,           // root not (0,2), or internal vertex neither split nor reticulation
  cyclic,
  unreachable,
  unlabeled_leaf,
  labeled_internal,
  duplicate_label,
};

const char* violation_name(violation v);

struct violation_entry {
  violation code;
  std::string detail;
};

struct blob_summary {
  int vertices = 0;
  int reticulations = 0;
};

struct validation_report {
  bool valid = false;
  std::vector<violation_entry> violations;
  // filled only when valid
  std::optional<int> level;
  std::vector<blob_summary> blob_sizes;
  std::optional<int> min_blob_size;
  // valid, level <= 1, and every blob has >= 4 vertices
  bool level1_admissible = false;

  std::string to_text() const;
};

validation_report validate(const raw_network& g);

// A validated binary phylogenetic network.  Immutable; every edit returns a
// new value.  Vertex ids are internal bookkeeping, never part of equality.
class network {
public:
  // Throws error(errc::invalid_network) carrying the report text.
  static network build(const raw_network& g);

  int vertex_count() const { return raw_.vertex_count; }
  int root() const { return root_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  const std::vector<int>& parents(int v) const { return parents_[v]; }
  int in_degree(int v) const { return (int)parents_[v].size(); }
  int out_degree(int v) const { return (int)children_[v].size(); }
  bool is_leaf(int v) const { return children_[v].empty(); }
  bool is_reticulation(int v) const { return parents_[v].size() == 2; }
  const std::string& label(int v) const { return raw_.labels[v]; }

  // Leaf vertex carrying the given label; throws error(errc::unknown_label).
  int leaf(const std::string& label) const;
  // Ground set X, sorted.
  const std::vector<std::string>& leaf_labels() const { return alphabet_; }
  std::vector<int> leaves() const;
  std::vector<int> reticulations() const;
  int reticulation_count() const;
  std::vector<arc> arcs() const;  // sorted by (tail, head)
  const raw_network& raw() const { return raw_; }

private:
  raw_network raw_;
  int root_ = -1;
  std::vector<std::vector<int>> children_, parents_;
  std::vector<std::string> alphabet_;
};

struct blob {
  std::vector<int> vertices;  // sorted
  std::vector<arc> arcs;      // sorted
  int root = -1;              // unique vertex with no in-arc from inside the blob
  int reticulation_count = 0;
};

struct blob_decomposition {
  std::vector<blob> blobs;    // sorted by vertex sets
  std::vector<arc> cut_arcs;  // the bridges, sorted
};

blob_decomposition blobs(const network& n);
int level(const network& n);

// True iff a is reachable from b (a lies weakly below b).
bool below(const network& n, int a, int b);

// All minimal common ancestors of the two leaves; singleton on level <= 1.
std::vector<int> lca(const network& n, const std::string& x, const std::string& y);

// Leaf pairs sharing a parent, each pair and the list sorted.
std::vector<std::pair<std::string, std::string>> cherries(const network& n);

// Removes x and its arc, then cascades: unlabeled sinks deleted, degree-2
// vertices suppressed, root identified with its child while it has outdegree
// 1.  A parallel arc pair arising from suppression signals errc::degenerate.
network remove_leaf(const network& n, const std::string& x);

// Subdivides e with a fresh split vertex and hangs a new leaf d off it.
network attach_leaf(const network& n, arc e, const std::string& d);

std::vector<arc> non_cut_arcs(const network& n);

// Canonical vertex order: invariant under vertex renaming, shared by the
// canonical serialization and the DOT exporter.
std::vector<int> canonical_vertex_order(const network& n);

// Canonical serialization; equal strings <=> isomorphic (identity on X).
std::string canonical_newick(const network& n);
bool isomorphic(const network& a, const network& b);

}  // namespace gallnet
