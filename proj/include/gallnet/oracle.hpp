#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gallnet/systems.hpp"

namespace gallnet {

// Rooted biconnected directed multigraph: root (0,2), k pseudo-reticulations
// (2,<=1), every other vertex a split (1,2).  Vertices are numbered by the
// canonical order; parallel arcs are repeated entries.  The "sides" onto
// which leaves are hung are the arcs plus the outdegree-0 pseudo-reticulations.
struct generator {
  int vertex_count = 0;
  std::vector<arc> arcs;       // sorted
  std::vector<int> sink_rets;  // indegree-2 outdegree-0 vertices, sorted
  int level = 0;
  std::string code;            // canonical identity string
};

// All level-k generators up to isomorphism; counts are 1, 4, 65 for k=1,2,3.
// Throws errc::level_unsupported for other k.
std::vector<generator> enumerate_generators(int k);

struct leaf_assignment {
  std::vector<std::vector<std::string>> on_arc;  // per arc of the generator, in order tail->head
  std::vector<std::string> on_sink;              // per sink reticulation, exactly one label
};

// Subdivides each arc with a chain of split vertices carrying the assigned
// leaves and hangs one leaf off each sink reticulation.  The result must
// validate with no parallel arcs and every blob >= 4 vertices; otherwise
// errc::invalid_assignment.
network hang_leaves(const generator& g, const leaf_assignment& a);

// All simple level-k networks on X (single blob spanning all non-leaf
// vertices), by exhausting leaf assignments over all level-k generators.
std::vector<network> enumerate_simple(int k, const std::vector<std::string>& labels);

// All admissible level-1 networks on X (every blob >= 4 vertices), by
// recursive composition; |X| <= 6 (errc::ground_set_too_large).
std::vector<network> enumerate_level1(const std::vector<std::string>& labels, bool include_trees);

// Independent cross-check enumerator: generate-all-DAGs-and-filter; |X| <= 4.
std::vector<network> enumerate_level1_naive(const std::vector<std::string>& labels,
                                            bool include_trees);

struct oracle_report {
  bool ok = false;
  std::string text;  // human-readable; one line per performed check group
  std::map<std::string, bool> checks;  // named check groups
  std::vector<std::string> counterexamples;  // canonical eNewick
};

// Exhaustive check of the encoding equivalences on all admissible level-1
// networks with 3..max_leaves leaves: the partitions induced by triplet,
// tree, and softwired-cluster equality coincide; each class has size
// 3^(#4-blobs); equivalence_class reproduces the class; encodedness matches
// class size 1.  max_leaves <= 5.
oracle_report verify_theorem(int max_leaves = 5);

// For the triplet system {b,c|a, a,b|c}: hanging a fresh leaf on any non-cut
// arc of one of its three simple level-1 networks yields a triplet system
// different from every such attachment on the other two.
oracle_report verify_lemma_montpellier();

// Some enumerated admissible level-1 network N with cs subseteq S(N), if any;
// |X| <= 5 (errc::ground_set_too_large).
std::optional<network> level1_consistent(const cluster_system& cs);

struct phenomenon {
  bool found = false;
  std::string description;
  std::vector<std::string> witnesses;  // eNewick and auxiliary rendered data
};

struct phenomena_report {
  phenomenon p1;  // S(N) of a level-2 network violating the weak-hierarchy condition
  phenomenon p2;  // tree T with C(T) consistent with N yet T not displayed
  phenomenon p3;  // consistent triplet c1,c2|x with {c1,c2} not in S(N)
  phenomenon p4;  // two non-isomorphic simple level-2 networks sharing the 10-triplet set
  bool all_found() const { return p1.found && p2.found && p3.found && p4.found; }
  std::string to_text() const;
  std::string to_json() const;
};

// Deterministic searches over simple level-2 networks with <= max_leaves
// leaves (search order: canonical form).
phenomena_report search_level2_phenomena(int max_leaves = 4);

}  // namespace gallnet
