#pragma once

#include <set>
#include <string>
#include <vector>

#include "gallnet/network.hpp"

namespace gallnet {

// {a,b}|z rooted triplet: a and b have a strict common ancestor below the
// triplet root, z hangs off the root.  Canonical rendering keeps a < b.
struct triplet {
  std::string a, b, z;

  triplet() = default;
  triplet(std::string x, std::string y, std::string out) : a(std::move(x)), b(std::move(y)), z(std::move(out)) {
    if (b < a) std::swap(a, b);
  }
  std::string to_string() const { return a + "," + b + "|" + z; }
  friend bool operator==(const triplet&, const triplet&) = default;
  friend auto operator<=>(const triplet&, const triplet&) = default;
};

// Non-empty subset of X, sorted and duplicate-free.
using cluster = std::vector<std::string>;

struct cluster_system {
  std::vector<std::string> ground;  // sorted X
  std::set<cluster> clusters;
};

struct triplet_system {
  std::vector<std::string> ground;
  std::set<triplet> triplets;
};

// Trees on a common X, deduplicated and sorted by canonical form.
struct tree_system {
  std::vector<std::string> ground;
  std::vector<network> trees;
};

// One reticulation-switching: the displayed tree it yields plus the map from
// each tree vertex to the network vertex it descends from.
struct switching {
  network tree;
  std::vector<int> origin;
};

inline constexpr int default_reticulation_cap = 20;
inline constexpr long long default_path_budget = 10'000'000;

// All 2^|R(N)| switchings, not deduplicated.  Choices whose cleanup fails
// validation are skipped and reported through warnings (cannot happen for
// valid admissible input; kept as a defensive path).
std::vector<switching> displayed_switchings(const network& n,
                                            int reticulation_cap = default_reticulation_cap,
                                            std::vector<std::string>* warnings = nullptr);

tree_system displayed_trees(const network& n, int reticulation_cap = default_reticulation_cap);

cluster_system hardwired_clusters(const network& n);
cluster_system softwired_clusters(const network& n, int reticulation_cap = default_reticulation_cap);

// S_N(v): every cluster the vertex contributes across all switchings (empty
// if v survives no switching).
cluster_system vertex_softwired(const network& n, int v,
                                int reticulation_cap = default_reticulation_cap);

// R(C) = { c1,c2|x : c1,c2 in C, x in X-C }; empty when |C| < 2 or C = X.
triplet_system cluster_triplets(const cluster& c, const std::vector<std::string>& ground);
triplet_system system_triplets(const cluster_system& cs);

// R(T) of a tree; throws errc::too_few_leaves when |X| < 3.
triplet_system tree_triplets(const network& t);

// Union of tree_triplets over the displayed trees.
triplet_system softwired_triplets(const network& n, int reticulation_cap = default_reticulation_cap);

// Exact path-based consistency: some u, v with pairwise internally
// vertex-disjoint paths u->a, u->b, v->u, v->z.
bool triplet_consistent(const network& n, const triplet& t,
                        long long path_budget = default_path_budget);

// The implemented general-network R(N): all consistent triplets.
triplet_system consistent_triplets(const network& n, long long path_budget = default_path_budget);

bool is_dense(const triplet_system& r);

// Triplets avoiding x; the ground set shrinks by x.
triplet_system restrict_triplets(const triplet_system& r, const std::string& x);

// cs subseteq S(n).
bool tree_consistent(const cluster_system& cs, const network& n);

// --- shared file formats ---

// One cluster per line, labels comma-separated; lines sorted by (size, lex).
std::string cluster_lines(const cluster_system& cs);
// Lines "a,b|z" with a < b, sorted componentwise.
std::string triplet_lines(const triplet_system& ts);
// One canonical eNewick per line, sorted.
std::string tree_lines(const tree_system& ts);

// Parses the cluster-file format; ground set is the union of the lines.
cluster_system parse_cluster_lines(const std::string& text);

}  // namespace gallnet
